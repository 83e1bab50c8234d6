#include "clext/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "clext/errors.hpp"
#include "clext/rep_theory.hpp"

namespace clext {

FockRep build_fock(const AlgebraParams& params, int dim) {
  const int lambda = params.lambda();
  if (dim <= 0 || dim % lambda != 0)
    throw InvalidParameters("dimension must be a positive multiple of lambda");
  if (!fock_exists(params)) throw InvalidParameters("parameters admit no Fock representation");

  FockRep rep{params, dim, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
              Matrix::Zero(dim, dim), {}};
  for (int n = 0; n + 1 < dim; ++n) {
    double f = structure_function(params, n + 1);
    if (f < 0.0) throw InvalidParameters("structure function negative at n = " + std::to_string(n + 1));
    rep.a_dag(n + 1, n) = std::sqrt(f);
  }
  rep.a = rep.a_dag.adjoint();
  for (int n = 0; n < dim; ++n) {
    rep.n_op(n, n) = n;
    rep.t_op(n, n) = std::polar(1.0, 2.0 * std::numbers::pi * n / lambda);
  }
  rep.projectors.assign(lambda, Matrix::Zero(dim, dim));
  for (int n = 0; n < dim; ++n) rep.projectors[grade(n, lambda)](n, n) = 1.0;
  return rep;
}

void require_dim(const FockRep& rep, int min_dim) {
  if (rep.dim < min_dim)
    throw TruncationTooSmall("dimension " + std::to_string(rep.dim) + " below the minimum " +
                             std::to_string(min_dim));
}

Matrix grade_diagonal(const FockRep& rep, const std::vector<double>& coeff) {
  Matrix m = Matrix::Zero(rep.dim, rep.dim);
  for (int n = 0; n < rep.dim; ++n) m(n, n) = coeff[grade(n, rep.lambda())];
  return m;
}

RelationReport verify_defining_relations(const FockRep& rep, double tol) {
  require_dim(rep, 3 * rep.lambda());
  const int k = rep.interior();
  const int lambda = rep.lambda();
  const Matrix id = Matrix::Identity(rep.dim, rep.dim);
  RelationReport report;

  Matrix na = rep.n_op * rep.a_dag, an = rep.a_dag * rep.n_op;
  report.add("[N,a+] = a+", relation_residual(na - an, rep.a_dag, k, {&na, &an}), tol);
  Matrix nl = rep.n_op * rep.a, ln = rep.a * rep.n_op;
  report.add("[N,a] = -a", relation_residual(nl - ln, -rep.a, k, {&nl, &ln}), tol);
  report.add("a = (a+)^dagger", relation_residual(rep.a, rep.a_dag.adjoint(), k), tol);

  double comm_np = 0.0, shift = 0.0, ortho = 0.0;
  Matrix sum = Matrix::Zero(rep.dim, rep.dim);
  for (int mu = 0; mu < lambda; ++mu) {
    const Matrix& p = rep.P(mu);
    Matrix x = rep.n_op * p, y = p * rep.n_op;
    comm_np = std::max(comm_np, relation_residual(x - y, Matrix::Zero(rep.dim, rep.dim), k, {&x, &y}));
    Matrix l = rep.a_dag * p, r = rep.P(mu + 1) * rep.a_dag;
    shift = std::max(shift, relation_residual(l, r, k));
    for (int nu = 0; nu < lambda; ++nu) {
      Matrix expect = mu == nu ? p : Matrix::Zero(rep.dim, rep.dim);
      ortho = std::max(ortho, relation_residual(p * rep.P(nu), expect, k));
    }
    sum += p;
  }
  report.add("[N,P_mu] = 0", comm_np, tol);
  report.add("a+ P_mu = P_{mu+1} a+", shift, tol);
  report.add("P_mu P_nu = delta P_mu", ortho, tol);
  report.add("sum P_mu = I", relation_residual(sum, id, k), tol);

  Matrix tl = id;
  for (int i = 0; i < lambda; ++i) tl = tl * rep.t_op;
  report.add("T^lambda = I", relation_residual(tl, id, k), tol);
  const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / lambda);
  Matrix ta = rep.t_op * rep.a_dag, at = rep.a_dag * rep.t_op;
  report.add("T a+ = omega a+ T", relation_residual(ta, omega * at, k), tol);

  Matrix aad = rep.a * rep.a_dag, ada = rep.a_dag * rep.a;
  Matrix g = id + grade_diagonal(rep, rep.params.alpha());
  report.add("[a,a+] = I + sum alpha_mu P_mu", relation_residual(aad - ada, g, k, {&aad, &ada}), tol);

  Matrix f = Matrix::Zero(rep.dim, rep.dim);
  for (int n = 0; n < rep.dim; ++n) f(n, n) = structure_function(rep.params, n);
  report.add("a+ a = F(N)", relation_residual(ada, f, k), tol);
  return report;
}

CasimirSet casimir_matrices(const FockRep& rep, double tol) {
  require_dim(rep, 3 * rep.lambda());
  const int k = rep.interior();
  const int lambda = rep.lambda();
  const Matrix id = Matrix::Identity(rep.dim, rep.dim);
  CasimirSet out;
  out.c1 = Matrix::Zero(rep.dim, rep.dim);
  Matrix phase = Matrix::Zero(rep.dim, rep.dim);
  for (int n = 0; n < rep.dim; ++n) {
    out.c1(n, n) = std::polar(1.0, 2.0 * std::numbers::pi * n);
    phase(n, n) = std::polar(1.0, -2.0 * std::numbers::pi * n / lambda);
  }
  out.c2 = phase * rep.t_op;
  Matrix ada = rep.a_dag * rep.a;
  out.c3 = rep.n_op + grade_diagonal(rep, rep.params.beta()) - ada;

  auto& r = out.report;
  r.add("C1 = I", relation_residual(out.c1, id, k), tol);
  r.add("C2 = I", relation_residual(out.c2, id, k), tol);
  r.add("C3 = 0", relation_residual(out.c3, Matrix::Zero(rep.dim, rep.dim), k, {&rep.n_op, &ada}), tol);
  Matrix c2l = id;
  for (int i = 0; i < lambda; ++i) c2l = c2l * out.c2;
  r.add("C1 C2^lambda = I", relation_residual(out.c1 * c2l, id, k), tol);
  const Matrix zero = Matrix::Zero(rep.dim, rep.dim);
  auto commutes = [&](const std::string& name, const Matrix& c, const Matrix& x) {
    Matrix cx = c * x, xc = x * c;
    r.add(name, relation_residual(cx - xc, zero, k, {&cx, &xc}), tol);
  };
  commutes("[C1,a+] = 0", out.c1, rep.a_dag);
  commutes("[C2,a+] = 0", out.c2, rep.a_dag);
  commutes("[C3,a+] = 0", out.c3, rep.a_dag);
  commutes("[C3,a] = 0", out.c3, rep.a);
  return out;
}

Matrix h0_matrix(const FockRep& rep) {
  Matrix h = rep.n_op + grade_diagonal(rep, rep.params.gamma());
  h.diagonal().array() += 0.5;
  return h;
}

Matrix h0_anticommutator(const FockRep& rep) {
  return 0.5 * (rep.a * rep.a_dag + rep.a_dag * rep.a);
}

RelationReport verify_h0(const FockRep& rep, double tol) {
  const int k = rep.interior();
  Matrix closed = h0_matrix(rep);
  Matrix anti = h0_anticommutator(rep);
  Matrix fg = Matrix::Zero(rep.dim, rep.dim);
  for (int n = 0; n < rep.dim; ++n)
    fg(n, n) = structure_function(rep.params, n) + 0.5 * g_function(rep.params, n);
  RelationReport report;
  report.add("{a,a+}/2 = N + 1/2 + sum gamma_mu P_mu", relation_residual(anti, closed, k), tol);
  report.add("H0(n,n) = F(n) + G(n)/2", relation_residual(closed, fg, k), tol);
  return report;
}

double h0_energy(const AlgebraParams& params, long n) {
  return static_cast<double>(n) + params.gamma_at(n) + 0.5;
}

std::vector<Level> h0_spectrum(const AlgebraParams& params, int k_max) {
  if (!fock_exists(params)) throw InvalidParameters("parameters admit no Fock representation");
  return collect_levels([&](long n) { return h0_energy(params, n); }, params.lambda(), k_max);
}

}  // namespace clext
