#pragma once

#include <complex>
#include <vector>

namespace clext {

// Tolerance for exact identities and for the strict/equality predicates of
// the unitarity conditions.
inline constexpr double kIdentityTol = 1e-12;

// Residue of n modulo lambda in [0, lambda).
int grade(long n, int lambda);

class AlgebraParams {
 public:
  // alpha_free holds alpha_0 .. alpha_{lambda-2}; the last one is fixed by the zero sum.
  static AlgebraParams from_free(int lambda, const std::vector<double>& alpha_free);
  // Full alpha vector; its sum must vanish within kIdentityTol.
  static AlgebraParams from_full(const std::vector<double>& alpha);

  int lambda() const { return lambda_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  const std::vector<double>& gamma() const { return gamma_; }
  const std::vector<double>& beta_bar() const { return beta_bar_; }

  // Cyclic accessors: index taken mod lambda.
  double alpha_at(long mu) const { return alpha_[grade(mu, lambda_)]; }
  double beta_at(long mu) const { return beta_[grade(mu, lambda_)]; }
  double gamma_at(long mu) const { return gamma_[grade(mu, lambda_)]; }
  double beta_bar_at(long mu) const { return beta_bar_[grade(mu, lambda_)]; }

  std::vector<double> alpha_free() const {
    return {alpha_.begin(), alpha_.end() - 1};
  }

  // Parameters with alpha'_mu = alpha_{mu+shift}.
  AlgebraParams cyclic_shift(int shift) const;

 private:
  AlgebraParams(int lambda, std::vector<double> alpha);

  int lambda_;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> gamma_;
  std::vector<double> beta_bar_;
};

// kappa_1 .. kappa_{lambda-1}.
using KappaVector = std::vector<std::complex<double>>;

KappaVector kappas_from_alphas(const AlgebraParams& params);
// Throws InvalidParameters unless kappa_mu* = kappa_{lambda-mu}.
std::vector<double> alphas_from_kappas(const KappaVector& kappa);

// F(n) = n + beta_{n mod lambda}; defined for negative n as well.
double structure_function(const AlgebraParams& params, long n);
// G(n) = 1 + alpha_{n mod lambda}.
double g_function(const AlgebraParams& params, long n);

}  // namespace clext
