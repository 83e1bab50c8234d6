#include "clext/relation_report.hpp"

#include <algorithm>
#include <cmath>

namespace clext {

void RelationReport::add(std::string name, double residual, double tol) {
  const bool ok = std::isfinite(residual) && residual <= tol;
  checks_.push_back({std::move(name), residual, tol, ok});
}

void RelationReport::append(const RelationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.residual, c.tol, c.pass});
}

bool RelationReport::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const RelationCheck& c) { return c.pass; });
}

double RelationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks_) m = std::max(m, c.residual);
  return m;
}

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

double block_max(const Matrix& m, int k) {
  if (k <= 0) return 0.0;
  return m.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

double relation_residual(const Matrix& lhs, const Matrix& rhs, int k,
                         std::initializer_list<const Matrix*> terms) {
  double scale = std::max({1.0, block_max(lhs, k), block_max(rhs, k)});
  for (const Matrix* t : terms) scale = std::max(scale, block_max(*t, k));
  return block_max(lhs - rhs, k) / scale;
}

}  // namespace clext
