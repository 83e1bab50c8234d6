#include <cmath>

#include "clext/errors.hpp"
#include "clext/rep_theory.hpp"
#include "clext/susy.hpp"

namespace clext {

namespace {

void check(const AlgebraParams& params, int mu) {
  if (params.lambda() != 3) throw InvalidParameters("orthosupersymmetry of order 2 needs lambda = 3");
  if (mu != 0 && mu != 1) throw InvalidParameters("mu must be 0 or 1");
  if (std::abs(params.alpha_at(mu + 1) + 1.0) > kIdentityTol)
    throw NotApplicable("orthosupersymmetry needs alpha_{mu+1} = -1");
}

Matrix closed_form(const FockRep& rep, int mu) {
  std::vector<double> coeff(3, 0.0);
  coeff[grade(mu, 3)] = 2.0;
  coeff[grade(mu + 1, 3)] = 1.0;
  Matrix h = rep.n_op + grade_diagonal(rep, coeff);
  h.diagonal().array() += 0.5 * (2.0 * rep.params.gamma_at(mu + 1) - 1.0);
  return h;
}

}  // namespace

OrthoRealization ossqm_build(const FockRep& rep, int mu, double xi, double phi) {
  check(rep.params, mu);
  if (!(xi > 0.0 && xi <= std::sqrt(2.0) + kIdentityTol))
    throw InvalidParameters("xi must satisfy 0 < xi <= sqrt(2)");
  const double rho = std::sqrt(std::max(0.0, 2.0 - xi * xi));
  const auto& prm = rep.params;
  OrthoRealization real{rep, mu, xi, phi, std::vector<double>(3, 0.0), {}, {}, {}};
  real.r[grade(mu, 3)] = 1.0 + prm.alpha_at(mu);
  real.r[grade(mu + 2, 3)] = -2.0 + prm.alpha_at(mu);
  const Matrix lower = rep.a * rep.P(mu + 2);
  const Matrix raise = rep.a_dag * rep.P(mu);
  real.Q1 = xi * lower + std::polar(rho, phi) * raise;
  real.Q2 = -std::polar(rho, -phi) * lower + xi * raise;
  real.H = hamiltonian_from_r(rep, real.r);
  return real;
}

RelationReport ossqm_verify(const OrthoRealization& real, double tol) {
  const FockRep& rep = real.rep;
  require_dim(rep, 9);
  const int k = rep.interior();
  const Matrix zero = Matrix::Zero(rep.dim, rep.dim);
  const Matrix* q[2] = {&real.Q1, &real.Q2};
  const Matrix sum = real.Q1.adjoint() * real.Q1 + real.Q2.adjoint() * real.Q2;
  double nil = 0.0, comm = 0.0, quad = 0.0;
  for (int r = 0; r < 2; ++r) {
    Matrix hq = real.H * *q[r], qh = *q[r] * real.H;
    comm = std::max(comm, relation_residual(hq - qh, zero, k, {&hq, &qh}));
    for (int s = 0; s < 2; ++s) {
      nil = std::max(nil, relation_residual(*q[r] * *q[s], zero, k));
      Matrix lhs = *q[r] * q[s]->adjoint();
      if (r == s) lhs += sum;
      quad = std::max(quad, relation_residual(lhs, r == s ? Matrix(2.0 * real.H) : zero, k));
    }
  }
  RelationReport report;
  report.add("Q_r Q_s = 0", nil, tol);
  report.add("[H,Q_r] = 0", comm, tol);
  report.add("Q_r Q_s+ + delta_rs sum_t Q_t+ Q_t = 2 delta_rs H", quad, tol);
  report.add("H = closed form", relation_residual(real.H, closed_form(rep, real.mu), k), tol);
  return report;
}

double ossqm_energy(const AlgebraParams& params, int mu, long n) {
  check(params, mu);
  const long k = n / 3;
  const int nu = grade(n, 3);
  if (mu == 0) return 3.0 * k + 0.5 * (2.0 * params.gamma_at(1) + 3.0);
  if (nu == 0) return 3.0 * k + 0.5 * (2.0 * params.gamma_at(2) - 1.0);
  return 3.0 * k + 0.5 * (2.0 * params.gamma_at(2) + 5.0);
}

std::vector<Level> ossqm_spectrum(const AlgebraParams& params, int mu, int k_max) {
  check(params, mu);
  if (!fock_exists(params)) throw InvalidParameters("parameters admit no Fock representation");
  return collect_levels([&](long n) { return ossqm_energy(params, mu, n); }, 3, k_max);
}

}  // namespace clext
