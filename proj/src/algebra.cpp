#include "clext/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "clext/errors.hpp"

namespace clext {

int grade(long n, int lambda) {
  long r = n % lambda;
  return static_cast<int>(r < 0 ? r + lambda : r);
}

AlgebraParams::AlgebraParams(int lambda, std::vector<double> alpha)
    : lambda_(lambda), alpha_(std::move(alpha)) {
  beta_.assign(lambda_, 0.0);
  for (int mu = 1; mu < lambda_; ++mu) beta_[mu] = beta_[mu - 1] + alpha_[mu - 1];
  gamma_.resize(lambda_);
  for (int mu = 0; mu < lambda_; ++mu) {
    double next = mu + 1 < lambda_ ? beta_[mu + 1] : 0.0;
    gamma_[mu] = 0.5 * (beta_[mu] + next);
  }
  beta_bar_.resize(lambda_);
  for (int mu = 0; mu < lambda_; ++mu) beta_bar_[mu] = (beta_[mu] + mu) / lambda_;
}

AlgebraParams AlgebraParams::from_free(int lambda, const std::vector<double>& alpha_free) {
  if (lambda < 2) throw InvalidParameters("lambda must be at least 2");
  if (static_cast<int>(alpha_free.size()) != lambda - 1)
    throw InvalidParameters("expected " + std::to_string(lambda - 1) + " free alpha values, got " +
                            std::to_string(alpha_free.size()));
  for (double x : alpha_free)
    if (!std::isfinite(x)) throw InvalidParameters("alpha values must be finite");
  std::vector<double> alpha(alpha_free);
  alpha.push_back(-std::accumulate(alpha_free.begin(), alpha_free.end(), 0.0));
  return AlgebraParams(lambda, std::move(alpha));
}

AlgebraParams AlgebraParams::from_full(const std::vector<double>& alpha) {
  int lambda = static_cast<int>(alpha.size());
  if (lambda < 2) throw InvalidParameters("lambda must be at least 2");
  for (double x : alpha)
    if (!std::isfinite(x)) throw InvalidParameters("alpha values must be finite");
  double sum = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  if (std::abs(sum) > kIdentityTol) throw InvalidParameters("alpha must sum to zero");
  return AlgebraParams(lambda, alpha);
}

AlgebraParams AlgebraParams::cyclic_shift(int shift) const {
  std::vector<double> shifted(lambda_);
  for (int mu = 0; mu < lambda_; ++mu) shifted[mu] = alpha_at(mu + shift);
  // Re-close the sum exactly so that from_full never trips on roundoff.
  shifted.back() = -std::accumulate(shifted.begin(), shifted.end() - 1, 0.0);
  return AlgebraParams(lambda_, std::move(shifted));
}

KappaVector kappas_from_alphas(const AlgebraParams& params) {
  const int lambda = params.lambda();
  KappaVector kappa(lambda - 1);
  for (int nu = 1; nu < lambda; ++nu) {
    std::complex<double> acc = 0.0;
    for (int mu = 0; mu < lambda; ++mu)
      acc += std::polar(1.0, -2.0 * std::numbers::pi * mu * nu / lambda) * params.alpha()[mu];
    kappa[nu - 1] = acc / static_cast<double>(lambda);
  }
  return kappa;
}

std::vector<double> alphas_from_kappas(const KappaVector& kappa) {
  const int lambda = static_cast<int>(kappa.size()) + 1;
  if (lambda < 2) throw InvalidParameters("need at least one kappa");
  for (int mu = 1; mu < lambda; ++mu) {
    if (std::abs(std::conj(kappa[mu - 1]) - kappa[lambda - mu - 1]) > kIdentityTol)
      throw InvalidParameters("kappa violates kappa_mu* = kappa_{lambda-mu}");
  }
  std::vector<double> alpha(lambda);
  for (int mu = 0; mu < lambda; ++mu) {
    std::complex<double> acc = 0.0;
    for (int nu = 1; nu < lambda; ++nu)
      acc += std::polar(1.0, 2.0 * std::numbers::pi * mu * nu / lambda) * kappa[nu - 1];
    if (std::abs(acc.imag()) > kIdentityTol)
      throw InvalidParameters("kappa sum has a non-negligible imaginary part");
    alpha[mu] = acc.real();
  }
  return alpha;
}

double structure_function(const AlgebraParams& params, long n) {
  return static_cast<double>(n) + params.beta_at(n);
}

double g_function(const AlgebraParams& params, long n) { return 1.0 + params.alpha_at(n); }

}  // namespace clext
