#include <cmath>

#include "clext/errors.hpp"
#include "clext/rep_theory.hpp"
#include "clext/susy.hpp"

namespace clext {

namespace {

void check(const AlgebraParams& params, const PseudoParams& pp) {
  if (params.lambda() != 3) throw InvalidParameters("pseudosupersymmetry needs lambda = 3");
  if (pp.mu < 0 || pp.mu > 2) throw InvalidParameters("mu must lie in 0..2");
  if (!(std::abs(pp.c) > 0.0) || !std::isfinite(pp.c)) throw InvalidParameters("c must be nonzero");
  if (pp.family == PseudoFamily::One && !(pp.eta > 0.0 && pp.eta < 2.0 * std::abs(pp.c)))
    throw InvalidParameters("family One needs 0 < eta < 2|c|");
}

}  // namespace

std::vector<double> pseudo_r_coeffs(const AlgebraParams& params, const PseudoParams& pp) {
  check(params, pp);
  const int mu = pp.mu;
  std::vector<double> r(3, 0.0);
  auto at = [&](long i) -> double& { return r[grade(i, 3)]; };
  if (pp.family == PseudoFamily::One) {
    const double c2 = pp.c * pp.c;
    at(mu + 2) = (1.0 + params.alpha_at(mu + 2)) * (pp.eta * pp.eta - 2.0 * c2) / (2.0 * c2);
    at(mu) = -2.0 + params.alpha_at(mu + 1) + at(mu + 2);
  } else {
    at(mu + 2) = -1.0 - params.alpha_at(mu + 2);
    at(mu) = pp.r_mu;
  }
  at(mu + 1) = 2.0 - params.alpha_at(mu) + at(mu + 2);
  return r;
}

Matrix pseudo_closed_form_h(const FockRep& rep, const PseudoParams& pp) {
  check(rep.params, pp);
  const auto& prm = rep.params;
  const int mu = pp.mu;
  std::vector<double> coeff(3, 0.0);
  double shift = 0.0;
  if (pp.family == PseudoFamily::One) {
    const double r2 = pseudo_r_coeffs(prm, pp)[grade(mu + 2, 3)];
    shift = 0.5 * (2.0 * prm.gamma_at(mu + 2) + r2 - 1.0);
    coeff[grade(mu + 1, 3)] = 2.0;
    coeff[grade(mu + 2, 3)] = 1.0;
  } else {
    shift = 0.5 * (2.0 * prm.gamma_at(mu + 2) - prm.alpha_at(mu + 2));
    coeff[grade(mu, 3)] = 0.5 * (1.0 - prm.alpha_at(mu + 1) + prm.alpha_at(mu + 2) + pp.r_mu);
    coeff[grade(mu + 1, 3)] = 1.0;
  }
  Matrix h = rep.n_op + grade_diagonal(rep, coeff);
  h.diagonal().array() += shift;
  return h;
}

PseudoRealization pseudo_build(const FockRep& rep, const PseudoParams& pp) {
  check(rep.params, pp);
  PseudoRealization real{rep, pp, pseudo_r_coeffs(rep.params, pp), {}, {}};
  const Matrix& proj = rep.P(pp.mu + 2);
  if (pp.family == PseudoFamily::One) {
    const double rho = std::sqrt(4.0 * pp.c * pp.c - pp.eta * pp.eta);
    real.Q = (pp.eta * rep.a_dag + std::polar(rho, pp.phi) * rep.a) * proj;
  } else {
    real.Q = 2.0 * std::abs(pp.c) * rep.a * proj;
  }
  real.H = hamiltonian_from_r(rep, real.r);
  return real;
}

RelationReport pseudo_verify(const PseudoRealization& real, double tol) {
  const FockRep& rep = real.rep;
  require_dim(rep, 9);
  const int k = rep.interior();
  const Matrix zero = Matrix::Zero(rep.dim, rep.dim);
  const double c2 = real.params.c * real.params.c;
  RelationReport report;
  report.add("Q^2 = 0", relation_residual(real.Q * real.Q, zero, k), tol);
  report.add("Q != 0", block_max(real.Q, k) > tol ? 0.0 : 1.0, tol);
  Matrix hq = real.H * real.Q, qh = real.Q * real.H;
  report.add("[H,Q] = 0", relation_residual(hq - qh, zero, k, {&hq, &qh}), tol);
  Matrix lhs = real.Q * real.Q.adjoint() * real.Q;
  report.add("Q Q+ Q = 4c^2 Q H", relation_residual(lhs, 4.0 * c2 * qh, k), tol);
  report.add("H = closed form", relation_residual(real.H, pseudo_closed_form_h(rep, real.params), k), tol);
  return report;
}

double pseudo_energy(const AlgebraParams& params, const PseudoParams& pp, long n) {
  check(params, pp);
  const int mu = pp.mu;
  const long k = n / 3;
  const int nu = grade(n, 3);
  if (pp.family == PseudoFamily::One) {
    const double r2 = pseudo_r_coeffs(params, pp)[grade(mu + 2, 3)];
    const double extra = nu == grade(mu + 1, 3) ? 2.0 : nu == grade(mu + 2, 3) ? 1.0 : 0.0;
    return n + 0.5 * (2.0 * params.gamma_at(mu + 2) + r2 - 1.0) + extra;
  }
  const double base = 2.0 * params.gamma_at(mu + 2) - params.alpha_at(mu + 2);
  if (nu < mu) return 3.0 * k + 0.5 * (base + 2.0 * mu - 2.0);
  if (nu == mu) return 3.0 * k + 0.5 * (2.0 * params.gamma_at(mu) + pp.r_mu + 2.0 * mu + 1.0);
  return 3.0 * k + 0.5 * (base + 2.0 * mu + 4.0);
}

std::vector<Level> pseudo_spectrum(const AlgebraParams& params, const PseudoParams& pp, int k_max) {
  check(params, pp);
  if (!fock_exists(params)) throw InvalidParameters("parameters admit no Fock representation");
  return collect_levels([&](long n) { return pseudo_energy(params, pp, n); }, 3, k_max);
}

double family_two_equal_spacing_r(const AlgebraParams& params, int mu) {
  if (params.lambda() != 3) throw InvalidParameters("pseudosupersymmetry needs lambda = 3");
  const double x = params.alpha_at(mu + 1) - params.alpha_at(mu + 2) + 3.0;
  return x - 6.0 * std::floor(x / 6.0);
}

}  // namespace clext
