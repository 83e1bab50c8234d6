#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "clext/fock.hpp"

namespace clext {

using Complex = std::complex<double>;

// ---------------------------------------------------------------- PSSQM, p = lambda - 1

struct PssqmRealization {
  FockRep rep;
  int p = 0;
  int mu = 0;
  std::vector<Complex> eta;  // eta[nu-1] multiplies a+ P_{mu+nu}, nu = 1..p
  std::vector<double> r;     // r[nu] multiplies P_nu / 2, absolute grades 0..p
  Matrix Q;
  Matrix H;
};

// Level shifts r_0..r_p. Without an override r_{mu+2} takes the value fixed by
// |eta|^2 = 2; the rest follow from the recursion.
std::vector<double> pssqm_r_coeffs(const AlgebraParams& params, int mu,
                                   std::optional<double> r_mu2_override = std::nullopt);

// r_{mu+2} forced by the second eta normalisation for given |eta|^2.
double pssqm_r_mu2_from_eta(const AlgebraParams& params, int mu, const std::vector<Complex>& eta);

// H0 + sum_nu r_nu P_nu / 2.
Matrix hamiltonian_from_r(const FockRep& rep, const std::vector<double>& r);

// N + (2 gamma_{mu+2} + r_{mu+2} - 2p + 3)/2 + sum_nu (p+1-nu) P_{mu+nu}.
Matrix pssqm_closed_form_h(const FockRep& rep, int mu, double r_mu2);

PssqmRealization pssqm_build(const FockRep& rep, int mu,
                             std::optional<std::vector<Complex>> eta = std::nullopt);

// Q_nu = a+ P_{p+1+mu-nu}, nu = 1..p (index nu-1).
std::vector<Matrix> bagchi_supercharges(const FockRep& rep, int mu);

RelationReport pssqm_verify(const PssqmRealization& real, double tol = kDefaultTol);

// Q <-> Q^dagger partner.
PssqmRealization mirror(const PssqmRealization& real);

struct PssqmSpectrum {
  std::vector<Level> levels;
  double ground_energy = 0.0;
  double ground_energy_gamma_form = 0.0;
  int ground_degeneracy = 0;
  bool excited_degeneracy_ok = false;  // every reported excited class has p+1 members
  double bound = 0.0;                  // E_0 must exceed this
  bool bound_holds = false;
};

double pssqm_energy(const AlgebraParams& params, int mu, long n);
double pssqm_ground_energy(const AlgebraParams& params, int mu);
// Same value written through alternating gamma sums.
double pssqm_ground_energy_gamma_form(const AlgebraParams& params, int mu);
double pssqm_ground_bound(int p, int mu);
PssqmSpectrum pssqm_spectrum(const AlgebraParams& params, int mu, int k_max);

struct SpecialCaseResult {
  PssqmRealization real;
  Matrix h_closed;
  Matrix h_sqrt;
  Matrix h_supercharge;
  double ground_energy = 0.0;
  int ground_degeneracy = 0;
  RelationReport report;
};

// Throws NotApplicable unless mu is 0 or p and alpha has the matching pattern.
SpecialCaseResult pssqm_special_case(const AlgebraParams& params, int mu, int dim,
                                     double tol = 1e-8);

// ---------------------------------------------------------------- conserved charges

int charge_b(int t, int nu);                   // b_t^nu
double charge_b_inverse(int nu, int r, int p);  // b_nu^r
int charge_c(int t, int r, int nu);            // c_tr^nu
double charge_d(int t, int r, int s, int p);   // d_tr^s

struct ChargeSet {
  int p = 0;
  int mu = 0;
  std::vector<Matrix> Q;  // Q[r-1], r = 1..p
  std::vector<Matrix> I;  // I[t-1], t = 1..p+1
  Matrix H;
  int interior = 0;
};

ChargeSet build_charge_set(const FockRep& rep, int mu);
RelationReport verify_charge_set(const ChargeSet& cs, double tol = kDefaultTol,
                                 int max_exhaustive_products = 5000);

struct MixedRelation {
  std::vector<int> r_seq;  // r_1..r_p
  int s = 0;
  std::vector<int> t_seq;  // t_1..t_{p+1}
  int r = 0;               // right-hand side 2p Q_r^{p-1} H
  double residual = 0.0;
  bool pass = false;

  std::string text() const;
};

// Tuples passing the D_k^nu = B_k([r]^{p-1}) selection. With canonical set,
// each t is replaced by the smallest equivalent index of its term.
std::vector<MixedRelation> select_mixed_tuples(int p, bool canonical = true);
// Tuples whose relation holds numerically, by exhaustive matrix evaluation.
std::vector<MixedRelation> brute_force_mixed_tuples(const ChargeSet& cs, double tol = 1e-9);
// Smallest t equivalent to t in term j (0-based) of the relation.
int canonical_t(int p, int term, int t);
// Selection, deduplication and matrix verification.
std::vector<MixedRelation> find_mixed_relations(const ChargeSet& cs, double tol = 1e-9);
Matrix mixed_lhs(const ChargeSet& cs, const MixedRelation& rel);
Matrix mixed_rhs(const ChargeSet& cs, const MixedRelation& rel);

// ---------------------------------------------------------------- pseudo, lambda = 3

enum class PseudoFamily { One, Two };

struct PseudoParams {
  PseudoFamily family = PseudoFamily::One;
  int mu = 0;
  double c = 1.0;
  double eta = 1.0;   // family One, 0 < eta < 2|c|
  double phi = 0.0;   // family One
  double r_mu = 0.0;  // family Two
};

struct PseudoRealization {
  FockRep rep;
  PseudoParams params;
  std::vector<double> r;
  Matrix Q;
  Matrix H;
};

std::vector<double> pseudo_r_coeffs(const AlgebraParams& params, const PseudoParams& pp);
Matrix pseudo_closed_form_h(const FockRep& rep, const PseudoParams& pp);
PseudoRealization pseudo_build(const FockRep& rep, const PseudoParams& pp);
RelationReport pseudo_verify(const PseudoRealization& real, double tol = kDefaultTol);
double pseudo_energy(const AlgebraParams& params, const PseudoParams& pp, long n);
std::vector<Level> pseudo_spectrum(const AlgebraParams& params, const PseudoParams& pp, int k_max);
// r_mu = (alpha_{mu+1} - alpha_{mu+2} + 3) mod 6, reduced to [0, 6).
double family_two_equal_spacing_r(const AlgebraParams& params, int mu);

// ---------------------------------------------------------------- ortho, order 2, lambda = 3

struct OrthoRealization {
  FockRep rep;
  int mu = 0;
  double xi = 1.0;
  double phi = 0.0;
  std::vector<double> r;
  Matrix Q1;
  Matrix Q2;
  Matrix H;
};

OrthoRealization ossqm_build(const FockRep& rep, int mu, double xi, double phi);
RelationReport ossqm_verify(const OrthoRealization& real, double tol = kDefaultTol);
double ossqm_energy(const AlgebraParams& params, int mu, long n);
std::vector<Level> ossqm_spectrum(const AlgebraParams& params, int mu, int k_max);

}  // namespace clext
