#pragma once

#include <vector>

#include "clext/algebra.hpp"
#include "clext/relation_report.hpp"
#include "clext/spectrum.hpp"

namespace clext {

inline constexpr double kDefaultTol = 1e-10;

// Truncated Fock-space representation on |0>..|dim-1>. Treated as an
// immutable value; tests copy and perturb it for fault injection.
struct FockRep {
  AlgebraParams params;
  int dim = 0;
  Matrix a_dag;
  Matrix a;
  Matrix n_op;
  Matrix t_op;
  std::vector<Matrix> projectors;

  int lambda() const { return params.lambda(); }
  // Size of the block |0>..|dim-lambda-1> on which relations are compared.
  int interior() const { return dim - params.lambda(); }
  const Matrix& P(long mu) const { return projectors[grade(mu, params.lambda())]; }
};

FockRep build_fock(const AlgebraParams& params, int dim);

// Throws TruncationTooSmall when rep.dim < min_dim.
void require_dim(const FockRep& rep, int min_dim);

// sum_mu coeff[mu] P_mu.
Matrix grade_diagonal(const FockRep& rep, const std::vector<double>& coeff);

RelationReport verify_defining_relations(const FockRep& rep, double tol = kDefaultTol);

struct CasimirSet {
  Matrix c1;
  Matrix c2;
  Matrix c3;
  RelationReport report;
};

CasimirSet casimir_matrices(const FockRep& rep, double tol = kDefaultTol);

// N + 1/2 + sum_mu gamma_mu P_mu.
Matrix h0_matrix(const FockRep& rep);
// (a a^dag + a^dag a) / 2.
Matrix h0_anticommutator(const FockRep& rep);
RelationReport verify_h0(const FockRep& rep, double tol = kIdentityTol);

// E_{k lambda + mu} = k lambda + mu + gamma_mu + 1/2.
double h0_energy(const AlgebraParams& params, long n);
std::vector<Level> h0_spectrum(const AlgebraParams& params, int k_max);

}  // namespace clext
