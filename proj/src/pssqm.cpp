#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "clext/errors.hpp"
#include "clext/rep_theory.hpp"
#include "clext/susy.hpp"

namespace clext {

namespace {

void check_mu(int p, int mu) {
  if (p < 1) throw InvalidParameters("order p must be at least 1");
  if (mu < 0 || mu > p) throw InvalidParameters("mu must lie in 0..p");
}

// r_{mu+1}, ..., r_{mu+p+1} from r_{mu+2}.
std::vector<double> fill_r(const AlgebraParams& params, int mu, double r2) {
  const int lambda = params.lambda();
  const int p = lambda - 1;
  std::vector<double> r(lambda, 0.0);
  auto at = [&](long i) -> double& { return r[grade(i, lambda)]; };
  at(mu + 2) = r2;
  at(mu + 1) = 2.0 + params.alpha_at(mu + 1) + params.alpha_at(mu + 2) + r2;
  for (int nu = 2; nu <= p; ++nu)
    at(mu + nu + 1) = at(mu + nu) - 2.0 - params.alpha_at(mu + nu) - params.alpha_at(mu + nu + 1);
  return r;
}

}  // namespace

std::vector<double> pssqm_r_coeffs(const AlgebraParams& params, int mu,
                                   std::optional<double> r_mu2_override) {
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  double r2 = 0.0;
  if (r_mu2_override) {
    r2 = *r_mu2_override;
  } else {
    double s = (p - 2) * params.alpha_at(mu + 2) + p * (p - 2.0);
    for (int nu = 3; nu <= p; ++nu) s += 2.0 * (p - nu + 1) * params.alpha_at(mu + nu);
    r2 = s / p;
  }
  return fill_r(params, mu, r2);
}

double pssqm_r_mu2_from_eta(const AlgebraParams& params, int mu, const std::vector<Complex>& eta) {
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  if (static_cast<int>(eta.size()) != p) throw InvalidParameters("eta must have p entries");
  double s = 0.0;
  for (int nu = 2; nu <= p; ++nu) {
    double w = nu - 1;
    for (int rho = 0; rho <= nu - 2; ++rho) w += params.alpha_at(mu + rho + 2);
    s += std::norm(eta[nu - 1]) * w;
  }
  return s / p - 1.0 - params.alpha_at(mu + 2);
}

Matrix hamiltonian_from_r(const FockRep& rep, const std::vector<double>& r) {
  std::vector<double> half(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) half[i] = 0.5 * r[i];
  return h0_anticommutator(rep) + grade_diagonal(rep, half);
}

Matrix pssqm_closed_form_h(const FockRep& rep, int mu, double r_mu2) {
  const int p = rep.lambda() - 1;
  check_mu(p, mu);
  std::vector<double> coeff(rep.lambda(), 0.0);
  for (int nu = 1; nu <= p; ++nu) coeff[grade(mu + nu, rep.lambda())] = p + 1 - nu;
  Matrix h = rep.n_op + grade_diagonal(rep, coeff);
  h.diagonal().array() += 0.5 * (2.0 * rep.params.gamma_at(mu + 2) + r_mu2 - 2.0 * p + 3.0);
  return h;
}

PssqmRealization pssqm_build(const FockRep& rep, int mu, std::optional<std::vector<Complex>> eta) {
  const int p = rep.lambda() - 1;
  check_mu(p, mu);
  std::vector<Complex> e = eta ? *eta : std::vector<Complex>(p, Complex(std::sqrt(2.0), 0.0));
  if (static_cast<int>(e.size()) != p) throw InvalidParameters("eta must have p entries");
  double norm = 0.0;
  for (const auto& x : e) norm += std::norm(x);
  if (std::abs(norm - 2.0 * p) > 1e-9)
    throw InvalidParameters("sum |eta|^2 must equal 2p, got " + std::to_string(norm));

  PssqmRealization real{rep, p, mu, e, {}, Matrix::Zero(rep.dim, rep.dim), {}};
  real.r = fill_r(rep.params, mu, pssqm_r_mu2_from_eta(rep.params, mu, e));
  for (int nu = 1; nu <= p; ++nu) real.Q += e[nu - 1] * (rep.a_dag * rep.P(mu + nu));
  real.H = hamiltonian_from_r(rep, real.r);
  return real;
}

std::vector<Matrix> bagchi_supercharges(const FockRep& rep, int mu) {
  const int p = rep.lambda() - 1;
  check_mu(p, mu);
  std::vector<Matrix> out;
  for (int nu = 1; nu <= p; ++nu) out.push_back(rep.a_dag * rep.P(p + 1 + mu - nu));
  return out;
}

RelationReport pssqm_verify(const PssqmRealization& real, double tol) {
  const FockRep& rep = real.rep;
  const int p = real.p;
  require_dim(rep, 3 * rep.lambda());
  const int k = rep.interior();
  const Matrix zero = Matrix::Zero(rep.dim, rep.dim);
  RelationReport report;

  std::vector<Matrix> pw{Matrix::Identity(rep.dim, rep.dim)};
  for (int j = 0; j <= p; ++j) pw.push_back(pw.back() * real.Q);
  report.add("Q^(p+1) = 0", relation_residual(pw[p + 1], zero, k), tol);
  report.add("Q^p != 0", block_max(pw[p], k) > tol ? 0.0 : 1.0, tol);

  Matrix hq = real.H * real.Q, qh = real.Q * real.H;
  report.add("[H,Q] = 0", relation_residual(hq - qh, zero, k, {&hq, &qh}), tol);

  const Matrix qd = real.Q.adjoint();
  Matrix lhs = zero;
  for (int j = 0; j <= p; ++j) lhs += pw[p - j] * qd * pw[j];
  Matrix rhs = 2.0 * p * pw[p - 1] * real.H;
  report.add("sum_j Q^(p-j) Q+ Q^j = 2p Q^(p-1) H", relation_residual(lhs, rhs, k), tol);

  Matrix closed = pssqm_closed_form_h(rep, real.mu, real.r[grade(real.mu + 2, rep.lambda())]);
  report.add("H = closed form", relation_residual(real.H, closed, k), tol);
  Matrix off = real.H;
  off.diagonal().setZero();
  report.add("H diagonal", relation_residual(off, zero, k, {&real.H}), tol);

  // Bagchi decomposition Q = sum_nu sigma_nu Q_nu with sigma_nu = eta_{p+1-nu}.
  auto qs = bagchi_supercharges(rep, real.mu);
  Matrix sum = zero;
  for (int nu = 1; nu <= p; ++nu) sum += real.eta[p - nu] * qs[nu - 1];
  report.add("Q = sum sigma_nu Q_nu", relation_residual(real.Q, sum, k), tol);
  double prod = 0.0, mixed = 0.0, comm = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (j != i + 1) prod = std::max(prod, relation_residual(qs[i] * qs[j], zero, k));
      if (i != j) {
        mixed = std::max(mixed, relation_residual(qs[i] * qs[j].adjoint(), zero, k));
        mixed = std::max(mixed, relation_residual(qs[i].adjoint() * qs[j], zero, k));
      }
    }
    Matrix a = real.H * qs[i], b = qs[i] * real.H;
    comm = std::max(comm, relation_residual(a - b, zero, k, {&a, &b}));
  }
  report.add("Q_nu Q_nu' = 0 for nu' != nu+1", prod, tol);
  report.add("Q_nu Q_nu'+ = Q_nu+ Q_nu' = 0 for nu != nu'", mixed, tol);
  report.add("[H,Q_nu] = 0", comm, tol);
  return report;
}

PssqmRealization mirror(const PssqmRealization& real) {
  PssqmRealization out = real;
  out.Q = real.Q.adjoint();
  return out;
}

double pssqm_energy(const AlgebraParams& params, int mu, long n) {
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  const long k = n / (p + 1);
  const int nu = grade(n, p + 1);
  const double e0 = pssqm_ground_energy(params, mu);
  return (nu <= mu ? k * (p + 1.0) : (k + 1.0) * (p + 1.0)) + e0;
}

double pssqm_ground_energy(const AlgebraParams& params, int mu) {
  const int p = params.lambda() - 1;
  const double r2 = pssqm_r_coeffs(params, mu)[grade(mu + 2, params.lambda())];
  return 0.5 * (2.0 * params.gamma_at(mu + 2) + r2 + 2.0 * mu - 2.0 * p + 3.0);
}

double pssqm_ground_energy_gamma_form(const AlgebraParams& params, int mu) {
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  double s = 0.0;
  if (mu % 2 == 0) {
    for (int nu = 0; nu <= (mu - 2) / 2 && mu >= 2; ++nu) s += params.gamma_at(2 * nu + 1);
    for (int nu = (mu + 2) / 2; nu <= p / 2; ++nu) s += params.gamma_at(2 * nu);
  } else {
    for (int nu = 0; nu <= (mu - 1) / 2; ++nu) s += params.gamma_at(2 * nu);
    for (int nu = (mu + 1) / 2; nu <= (p - 1) / 2; ++nu) s += params.gamma_at(2 * nu + 1);
  }
  return (4.0 * s + p * (2.0 * mu - p + 1.0)) / (2.0 * p);
}

double pssqm_ground_bound(int p, int mu) {
  check_mu(p, mu);
  return mu <= p - 2 ? (p + 1.0) * (mu - p + 1.0) / p : 0.0;
}

PssqmSpectrum pssqm_spectrum(const AlgebraParams& params, int mu, int k_max) {
  if (!fock_exists(params)) throw InvalidParameters("parameters admit no Fock representation");
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  PssqmSpectrum out;
  out.levels = collect_levels([&](long n) { return pssqm_energy(params, mu, n); }, p + 1, k_max);
  out.ground_energy = pssqm_ground_energy(params, mu);
  out.ground_energy_gamma_form = pssqm_ground_energy_gamma_form(params, mu);
  out.excited_degeneracy_ok = true;
  for (const auto& l : out.levels) {
    if (l.level == 0) out.ground_degeneracy = l.degeneracy;
    else if (l.degeneracy != p + 1) out.excited_degeneracy_ok = false;
  }
  out.bound = pssqm_ground_bound(p, mu);
  out.bound_holds = out.ground_energy > out.bound;
  return out;
}

SpecialCaseResult pssqm_special_case(const AlgebraParams& params, int mu, int dim, double tol) {
  const int p = params.lambda() - 1;
  check_mu(p, mu);
  if (mu != 0 && mu != p) throw NotApplicable("special case needs mu = 0 or mu = p");
  for (int nu = 2; nu <= p; ++nu)
    if (std::abs(params.alpha_at(mu + nu) + 1.0) > kIdentityTol)
      throw NotApplicable("special case needs alpha_{mu+nu} = -1 for nu = 2..p");
  if (!(params.alpha_at(0) > -1.0)) throw InvalidParameters("special case needs alpha_0 > -1");

  SpecialCaseResult out{pssqm_build(build_fock(params, dim), mu), {}, {}, {}, 0.0, 0, {}};
  const FockRep& rep = out.real.rep;
  require_dim(rep, 3 * rep.lambda());
  const int k = rep.interior();
  const Matrix& q = out.real.Q;
  const Matrix qd = q.adjoint();

  std::vector<double> coeff(rep.lambda(), 0.0);
  if (mu == 0) {
    for (int nu = 1; nu <= p; ++nu) coeff[nu] = p + 1 - nu;
  } else {
    for (int nu = 0; nu <= p; ++nu) coeff[nu] = params.alpha_at(0) + 1.0 - nu;
  }
  out.h_closed = rep.n_op + grade_diagonal(rep, coeff);

  Matrix comm = qd * q - q * qd;
  Matrix op = comm * comm + qd * q * q * qd;
  Eigen::SelfAdjointEigenSolver<Matrix> es(op);
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  out.h_sqrt = 0.5 * es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();

  auto qs = bagchi_supercharges(rep, mu);
  out.h_supercharge = qs[0] * qs[0].adjoint();
  for (const auto& x : qs) out.h_supercharge += x.adjoint() * x;

  std::vector<double> r_expect(rep.lambda(), 0.0);
  r_expect[grade(mu, rep.lambda())] = -1.0 - params.alpha_at(mu);
  r_expect[grade(mu + 1, rep.lambda())] = 1.0 + params.alpha_at(mu + 1);
  double r_dev = 0.0;
  for (int i = 0; i < rep.lambda(); ++i) r_dev = std::max(r_dev, std::abs(out.real.r[i] - r_expect[i]));

  auto& r = out.report;
  r.add("r = (-1-alpha_mu, 1+alpha_{mu+1}, 0, ...)", r_dev, tol);
  r.add("H ansatz = closed form", relation_residual(out.real.H, out.h_closed, k), tol);
  // The square root is taken on the truncated operator; its top block is
  // corrupted, so the comparison window leaves out one more lambda block.
  const int ks = std::max(0, k - rep.lambda());
  r.add("H = sqrt(...) form", relation_residual(out.h_sqrt, out.h_closed, ks), tol);
  r.add("H = Q_1 Q_1+ + sum Q_nu+ Q_nu", relation_residual(out.h_supercharge, out.h_closed, k), tol);

  auto spec = pssqm_spectrum(params, mu, 2);
  out.ground_energy = spec.ground_energy;
  out.ground_degeneracy = spec.ground_degeneracy;
  return out;
}

}  // namespace clext
