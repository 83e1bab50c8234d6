#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clext/algebra.hpp"
#include "clext/relation_report.hpp"

namespace clext {

// Real sequence on the nonnegative integers, restricted to families that
// serialise.
class ScalarSequence {
 public:
  enum class Kind { Constant, Power, QBracket, Table };

  static ScalarSequence constant(double v);
  // b * base^n
  static ScalarSequence power(double b, double base);
  // (q^n - q^-n) / (q - q^-1), equal to n at q = 1.
  static ScalarSequence qbracket(double q);
  // values[n] for n = 0..values.size()-1.
  static ScalarSequence table(std::vector<double> values);

  double operator()(long n) const;
  Kind kind() const { return kind_; }
  // Parameters in a fixed order: constant {v}, power {b, base}, qbracket {q}.
  const std::vector<double>& params() const { return params_; }
  const std::vector<double>& values() const { return values_; }

 private:
  ScalarSequence(Kind kind, std::vector<double> params, std::vector<double> values);

  Kind kind_;
  std::vector<double> params_;
  std::vector<double> values_;
};

enum class DeformedFamily { A, B, C };

// Inputs. E is supplied for family A only; families B and C fix E = b k^N and
// E = b q^N.
struct DeformationSpec {
  DeformedFamily family = DeformedFamily::C;
  std::vector<double> alpha;  // full, zero sum
  double q = 1.0;
  double k = 1.0;        // family B
  double B = 1.0;        // families B, C
  double b = 1.0;        // families B, C
  ScalarSequence H = ScalarSequence::constant(1.0);
  std::optional<ScalarSequence> E;  // family A
};

struct DeformedAlgebra {
  DeformationSpec spec;
  AlgebraParams params;
  ScalarSequence E;
  std::vector<double> beta_def;
  double D0 = 0.0;  // value of D(0) for which the third Casimir vanishes on Fock space

  int lambda() const { return params.lambda(); }
  double E_at(long n) const { return E(n); }
  double K_at(long n) const;
  double H_at(long n) const { return spec.H(n); }
};

DeformedAlgebra make_deformed(const DeformationSpec& spec);

// D(0..n_max) from D(n+1) - q D(n) = H(n).
ScalarSequence solve_D(double q, const ScalarSequence& H, double D0, int n_max);

// Scaled residuals of the two functional equations for n = 0..n_max-1.
double funct1_residual(double q, const ScalarSequence& H, const ScalarSequence& D, int n_max);
double funct2_residual(const DeformedAlgebra& def, const std::vector<double>& beta, int n_max);

// beta solved from the lambda x lambda system at the point n. When the system
// is singular (E proportional to q^n) beta_0 is fixed to 0.
std::vector<double> beta_from_functional(const DeformedAlgebra& def, long n);

struct DeformedFock {
  DeformedAlgebra def;
  int dim = 0;
  std::vector<double> D;
  std::vector<double> F;  // a+ a eigenvalues
  Matrix a_dag;
  Matrix a;
  Matrix n_op;
  Matrix t_op;
  std::vector<Matrix> projectors;

  int interior() const { return dim - def.lambda(); }
  const Matrix& P(long mu) const { return projectors[grade(mu, def.lambda())]; }
};

DeformedFock build_deformed_fock(const DeformedAlgebra& def, int dim);
RelationReport verify_deformed(const DeformedFock& rep, double tol = 1e-10);

// Representation parameter lambda_n of the deformed Calogero-Vasiliev algebra.
// At q = 1 the limit form is used when limit is set; otherwise it is an error.
double cv_lambda_closed_form(double q, double alpha_hat, int n0, double lambda0, long n,
                             bool limit = false);
double cv_lambda_recursion(double q, double alpha_hat, int n0, double lambda0, long n);
// Family A specification reproducing q^-N (1 + 2 alpha_hat (-1)^N).
DeformationSpec cv_spec(double q, double alpha_hat);

std::string to_json(const DeformationSpec& spec);
DeformationSpec deformation_from_json(const std::string& text);

}  // namespace clext
