#include "clext/rep_theory.hpp"

#include <cmath>
#include <limits>

#include "clext/errors.hpp"

namespace clext {
namespace {

bool positive(double x) { return x > kIdentityTol; }
bool vanishes(double x) { return std::abs(x) <= kIdentityTol; }

UnirrepDescriptor make_descriptor(UnirrepKind kind, int d, long n0, int lambda, double c) {
  return UnirrepDescriptor{kind, d, n0, grade(n0, lambda), c};
}

}  // namespace

std::string UnirrepDescriptor::label() const {
  return kind == UnirrepKind::BFB ? "BFB" : "FD(d=" + std::to_string(d) + ")";
}

double lambda_seq(const AlgebraParams& params, double c, long n0, long n) {
  if (n < 0) throw InvalidParameters("lambda_seq needs n >= 0");
  return structure_function(params, n0 + n) - c;
}

std::optional<UnirrepDescriptor> classify_gdoa(const AlgebraParams& params, long n0) {
  const int lambda = params.lambda();
  const int mu0 = grade(n0, lambda);
  const auto& bb = params.beta_bar();
  const auto& beta = params.beta();

  bool bfb = true;
  for (int nu = 0; nu < mu0; ++nu) bfb = bfb && positive(bb[nu] - bb[mu0] + 1.0);
  for (int nu = mu0 + 1; nu < lambda; ++nu) bfb = bfb && positive(bb[nu] - bb[mu0]);
  if (bfb) return make_descriptor(UnirrepKind::BFB, 0, n0, lambda, n0 + beta[mu0]);

  for (int d = 1; d < lambda; ++d) {
    bool ok = true;
    double c = 0.0;
    if (mu0 <= lambda - d - 1) {
      for (int nu = mu0 + 1; nu <= mu0 + d - 1; ++nu) ok = ok && positive(bb[nu] - bb[mu0]);
      ok = ok && vanishes(bb[mu0 + d] - bb[mu0]);
      c = n0 + beta[mu0];
    } else {
      const int m = mu0 - lambda + d;
      for (int nu = 0; nu < m; ++nu) ok = ok && positive(bb[nu] - bb[m]);
      for (int nu = mu0 + 1; nu < lambda; ++nu) ok = ok && positive(bb[nu] - bb[mu0]);
      ok = ok && vanishes(bb[m] - bb[mu0] + 1.0);
      c = n0 + d + beta[m];
    }
    if (ok) return make_descriptor(UnirrepKind::FD, d, n0, lambda, c);
  }
  return std::nullopt;
}

std::optional<UnirrepDescriptor> classify_oracle(const AlgebraParams& params, long n0, int horizon) {
  const int lambda = params.lambda();
  if (horizon < lambda) throw InvalidParameters("oracle horizon must be at least lambda");
  const double c = structure_function(params, n0);
  for (int n = 1; n <= horizon; ++n) {
    double l = lambda_seq(params, c, n0, n);
    if (l > kIdentityTol) continue;
    if (l >= -kIdentityTol) return make_descriptor(UnirrepKind::FD, n, n0, lambda, c);
    return std::nullopt;
  }
  return make_descriptor(UnirrepKind::BFB, 0, n0, lambda, c);
}

double classification_margin(const AlgebraParams& params, long n0) {
  const double c = structure_function(params, n0);
  double margin = std::numeric_limits<double>::infinity();
  for (int n = 1; n < params.lambda(); ++n)
    margin = std::min(margin, std::abs(lambda_seq(params, c, n0, n)));
  return margin;
}

bool near_boundary(const AlgebraParams& params, long n0, double window) {
  const double c = structure_function(params, n0);
  for (int n = 1; n < params.lambda(); ++n) {
    double l = std::abs(lambda_seq(params, c, n0, n));
    if (l > kIdentityTol && l <= window) return true;
  }
  return false;
}

double normalization(const AlgebraParams& params, double c, long n0, long n) {
  if (n < 0) throw InvalidParameters("normalization needs n >= 0");
  double prod = 1.0;
  for (long i = 1; i <= n; ++i) {
    double l = lambda_seq(params, c, n0, i);
    if (l < -kIdentityTol)
      throw UnitarityViolation("lambda_" + std::to_string(i) + " is negative");
    prod *= l;
  }
  return prod;
}

std::optional<double> normalization_gamma_form(const AlgebraParams& params, long n0, long n) {
  if (n < 0) throw InvalidParameters("normalization needs n >= 0");
  const int lambda = params.lambda();
  const int mu0 = grade(n0, lambda);
  std::vector<double> delta(lambda);
  for (int nu = 0; nu < lambda; ++nu) delta[nu] = params.beta_bar()[nu] - params.beta_bar()[mu0];
  for (int nu = 0; nu < lambda; ++nu) {
    double arg = nu <= mu0 ? delta[nu] + 1.0 : delta[nu];
    if (!(arg > 0.0)) return std::nullopt;
  }

  const long k = n / lambda;
  const int mu = static_cast<int>(n % lambda);
  double log_num = 0.0;
  if (mu <= lambda - mu0 - 1) {
    for (int nu = 0; nu <= mu0 + mu; ++nu) log_num += std::lgamma(delta[nu] + k + 1);
    for (int nu = mu0 + mu + 1; nu < lambda; ++nu) log_num += std::lgamma(delta[nu] + k);
  } else {
    for (int nu = 0; nu <= mu0 + mu - lambda; ++nu) log_num += std::lgamma(delta[nu] + k + 2);
    for (int nu = mu0 + mu - lambda + 1; nu < lambda; ++nu) log_num += std::lgamma(delta[nu] + k + 1);
  }
  double log_den = 0.0;
  for (int nu = 0; nu <= mu0; ++nu) log_den += std::lgamma(delta[nu] + 1);
  for (int nu = mu0 + 1; nu < lambda; ++nu) log_den += std::lgamma(delta[nu]);
  return std::exp(static_cast<double>(n) * std::log(static_cast<double>(lambda)) + log_num - log_den);
}

bool fock_exists(const AlgebraParams& params) {
  double partial = 0.0;
  for (int nu = 0; nu + 1 < params.lambda(); ++nu) {
    partial += params.alpha()[nu];
    if (!(partial + nu + 1 > kIdentityTol)) return false;
  }
  return true;
}

GeneralUnirrepDescriptor map_general_unirrep(const AlgebraParams& params, double r0,
                                             int grade_gamma, long n0) {
  if (!(r0 >= 0.0 && r0 < 1.0)) throw InvalidParameters("r0 must lie in [0, 1)");
  if (grade_gamma < 0 || grade_gamma >= params.lambda())
    throw InvalidParameters("grade label must lie in 0..lambda-1");
  auto base = classify_gdoa(params.cyclic_shift(grade_gamma), n0);
  if (!base) throw NoUnirrep("shifted parameters admit no unirrep at n0 = " + std::to_string(n0));
  return {*base, r0, grade_gamma, base->c + r0 + params.beta()[grade_gamma]};
}

}  // namespace clext
