#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clext/algebra.hpp"

namespace clext {

enum class UnirrepKind { BFB, FD };

struct UnirrepDescriptor {
  UnirrepKind kind = UnirrepKind::BFB;
  int d = 0;  // dimension for FD, 0 for BFB
  long n0 = 0;
  int mu0 = 0;
  double c = 0.0;

  std::string label() const;
  bool operator==(const UnirrepDescriptor&) const = default;
};

// lambda_n = F(n0 + n) - c.
double lambda_seq(const AlgebraParams& params, double c, long n0, long n);

// Closed-form classification from the beta_bar conditions.
std::optional<UnirrepDescriptor> classify_gdoa(const AlgebraParams& params, long n0);

// Scan of lambda_n = F(n0+n) - F(n0) for n = 1..horizon.
std::optional<UnirrepDescriptor> classify_oracle(const AlgebraParams& params, long n0, int horizon);

// Smallest |lambda_n| over n = 1..lambda-1 at the natural c = F(n0). A value
// just above kIdentityTol means the verdict sits near a classification boundary.
double classification_margin(const AlgebraParams& params, long n0);
bool near_boundary(const AlgebraParams& params, long n0, double window = 1e-9);

// N_n = prod_{i=1}^n lambda_i.
double normalization(const AlgebraParams& params, double c, long n0, long n);

// Gamma-function form of N_n for c = F(n0). Empty when some gamma argument
// is not positive (outside the bounded-from-below region).
std::optional<double> normalization_gamma_form(const AlgebraParams& params, long n0, long n);

// Strict inequalities sum_{rho<=nu} alpha_rho > -nu-1, nu = 0..lambda-2.
bool fock_exists(const AlgebraParams& params);

struct GeneralUnirrepDescriptor {
  UnirrepDescriptor base;  // classification of the shifted parameters
  double r0 = 0.0;
  int grade_gamma = 0;
  double c_general = 0.0;
};

// Unirreps of the general algebra relabelled onto the GDOA ones. Throws
// NoUnirrep when the shifted parameters admit none at n0.
GeneralUnirrepDescriptor map_general_unirrep(const AlgebraParams& params, double r0,
                                             int grade_gamma, long n0);

enum class Relation { Greater, Less, Equal };

// sum_i coeff[i] * alpha_i + constant  (rel)  0, over the free alphas.
struct LinearCondition {
  std::vector<double> coeff;
  double constant = 0.0;
  Relation rel = Relation::Greater;
  std::string text;

  double value(const AlgebraParams& params) const;
  bool holds(const AlgebraParams& params, double tol = kIdentityTol) const;
};

struct TableRow {
  UnirrepKind kind = UnirrepKind::BFB;
  int d = 0;
  int residue = 0;  // n0 = lambda * k0 + residue
  // c = n0 + c_const + sum_i c_coeff[i] * alpha_i
  double c_const = 0.0;
  std::vector<double> c_coeff;
  std::string c_text;
  std::vector<LinearCondition> conditions;

  bool matches(const AlgebraParams& params, double tol = kIdentityTol) const;
  double c_value(const AlgebraParams& params, long n0) const;
  std::string type_label() const;
  std::string n0_label() const;
};

// Rows of the classification tables for lambda = 2, 3, 4.
std::vector<TableRow> table_report(int lambda);

}  // namespace clext
