#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <string>
#include <vector>

namespace clext {

using Matrix = Eigen::MatrixXcd;

struct RelationCheck {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

class RelationReport {
 public:
  void add(std::string name, double residual, double tol);
  void append(const RelationReport& other, const std::string& prefix = "");

  bool pass() const;
  double max_residual() const;
  const std::vector<RelationCheck>& checks() const { return checks_; }
  // Null when absent.
  const RelationCheck* find(const std::string& name) const;

 private:
  std::vector<RelationCheck> checks_;
};

// Largest entry modulus in the leading k x k block.
double block_max(const Matrix& m, int k);

// Residual of lhs = rhs on the leading k x k block (the interior that
// truncation cannot corrupt), scaled by the largest magnitude among lhs, rhs
// and the extra terms. Scale is floored at 1 so small quantities are compared
// absolutely.
double relation_residual(const Matrix& lhs, const Matrix& rhs, int k,
                         std::initializer_list<const Matrix*> terms = {});

}  // namespace clext
