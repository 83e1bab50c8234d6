#include <cmath>
#include <sstream>

#include "clext/errors.hpp"
#include "clext/rep_theory.hpp"

namespace clext {
namespace {

using C = LinearCondition;
constexpr Relation G = Relation::Greater;
constexpr Relation L = Relation::Less;
constexpr Relation E = Relation::Equal;

TableRow row(UnirrepKind kind, int d, int residue, double c_const, std::vector<double> c_coeff,
             std::string c_text, std::vector<C> conds) {
  return TableRow{kind, d, residue, c_const, std::move(c_coeff), std::move(c_text), std::move(conds)};
}

constexpr UnirrepKind BFB = UnirrepKind::BFB;
constexpr UnirrepKind FD = UnirrepKind::FD;

std::vector<TableRow> table_lambda2() {
  return {
      row(BFB, 0, 0, 0, {0}, "n0", {C{{1}, 1, G, "a0 > -1"}}),
      row(BFB, 0, 1, 0, {1}, "n0 + a0", {C{{1}, -1, L, "a0 < 1"}}),
      row(FD, 1, 0, 0, {0}, "n0", {C{{1}, 1, E, "a0 = -1"}}),
      row(FD, 1, 1, 1, {0}, "n0 + 1", {C{{1}, -1, E, "a0 = 1"}}),
  };
}

std::vector<TableRow> table_lambda3() {
  return {
      row(BFB, 0, 0, 0, {0, 0}, "n0",
          {C{{1, 0}, 1, G, "a0 > -1"}, C{{1, 1}, 2, G, "a1 > -2 - a0"}}),
      row(BFB, 0, 1, 0, {1, 0}, "n0 + a0",
          {C{{1, 0}, -2, L, "a0 < 2"}, C{{0, 1}, 1, G, "a1 > -1"}}),
      row(BFB, 0, 2, 0, {1, 1}, "n0 + a0 + a1",
          {C{{1, 1}, -1, L, "a0 < 1 - a1"}, C{{0, 1}, -2, L, "a1 < 2"}}),
      row(FD, 1, 0, 0, {0, 0}, "n0", {C{{1, 0}, 1, E, "a0 = -1"}}),
      row(FD, 1, 1, 0, {1, 0}, "n0 + a0", {C{{0, 1}, 1, E, "a1 = -1"}}),
      row(FD, 1, 2, 1, {0, 0}, "n0 + 1", {C{{1, 1}, -1, E, "a1 = 1 - a0"}}),
      row(FD, 2, 0, 0, {0, 0}, "n0",
          {C{{1, 0}, 1, G, "a0 > -1"}, C{{1, 1}, 2, E, "a1 = -2 - a0"}}),
      row(FD, 2, 1, 2, {0, 0}, "n0 + 2",
          {C{{1, 0}, -2, E, "a0 = 2"}, C{{0, 1}, 1, G, "a1 > -1"}}),
      row(FD, 2, 2, 2, {1, 0}, "n0 + a0 + 2",
          {C{{1, 0}, 1, L, "a0 < -1"}, C{{0, 1}, -2, E, "a1 = 2"}}),
  };
}

std::vector<TableRow> table_lambda4() {
  return {
      row(BFB, 0, 0, 0, {0, 0, 0}, "n0",
          {C{{1, 0, 0}, 1, G, "a0 > -1"}, C{{1, 1, 0}, 2, G, "a1 > -2 - a0"},
           C{{1, 1, 1}, 3, G, "a2 > -3 - a0 - a1"}}),
      row(BFB, 0, 1, 0, {1, 0, 0}, "n0 + a0",
          {C{{1, 0, 0}, -3, L, "a0 < 3"}, C{{0, 1, 0}, 1, G, "a1 > -1"},
           C{{0, 1, 1}, 2, G, "a2 > -2 - a1"}}),
      row(BFB, 0, 2, 0, {1, 1, 0}, "n0 + a0 + a1",
          {C{{1, 1, 0}, -2, L, "a0 < 2 - a1"}, C{{0, 1, 0}, -3, L, "a1 < 3"},
           C{{0, 0, 1}, 1, G, "a2 > -1"}}),
      row(BFB, 0, 3, 0, {1, 1, 1}, "n0 + a0 + a1 + a2",
          {C{{1, 1, 1}, -1, L, "a0 < 1 - a1 - a2"}, C{{0, 1, 1}, -2, L, "a1 < 2 - a2"},
           C{{0, 0, 1}, -3, L, "a2 < 3"}}),
      row(FD, 1, 0, 0, {0, 0, 0}, "n0", {C{{1, 0, 0}, 1, E, "a0 = -1"}}),
      row(FD, 1, 1, 0, {1, 0, 0}, "n0 + a0", {C{{0, 1, 0}, 1, E, "a1 = -1"}}),
      row(FD, 1, 2, 0, {1, 1, 0}, "n0 + a0 + a1", {C{{0, 0, 1}, 1, E, "a2 = -1"}}),
      row(FD, 1, 3, 1, {0, 0, 0}, "n0 + 1", {C{{1, 1, 1}, -1, E, "a2 = 1 - a0 - a1"}}),
      row(FD, 2, 0, 0, {0, 0, 0}, "n0",
          {C{{1, 0, 0}, 1, G, "a0 > -1"}, C{{1, 1, 0}, 2, E, "a1 = -2 - a0"}}),
      row(FD, 2, 1, 0, {1, 0, 0}, "n0 + a0",
          {C{{0, 1, 0}, 1, G, "a1 > -1"}, C{{0, 1, 1}, 2, E, "a2 = -2 - a1"}}),
      row(FD, 2, 2, 2, {0, 0, 0}, "n0 + 2",
          {C{{1, 1, 0}, -2, E, "a1 = 2 - a0"}, C{{0, 0, 1}, 1, G, "a2 > -1"}}),
      row(FD, 2, 3, 2, {1, 0, 0}, "n0 + a0 + 2",
          {C{{1, 0, 0}, 1, L, "a0 < -1"}, C{{0, 1, 1}, -2, E, "a2 = 2 - a1"}}),
      row(FD, 3, 0, 0, {0, 0, 0}, "n0",
          {C{{1, 0, 0}, 1, G, "a0 > -1"}, C{{1, 1, 0}, 2, G, "a1 > -2 - a0"},
           C{{1, 1, 1}, 3, E, "a2 = -3 - a0 - a1"}}),
      row(FD, 3, 1, 3, {0, 0, 0}, "n0 + 3",
          {C{{1, 0, 0}, -3, E, "a0 = 3"}, C{{0, 1, 0}, 1, G, "a1 > -1"},
           C{{0, 1, 1}, 2, G, "a2 > -2 - a1"}}),
      row(FD, 3, 2, 3, {1, 0, 0}, "n0 + a0 + 3",
          {C{{1, 0, 0}, 1, L, "a0 < -1"}, C{{0, 1, 0}, -3, E, "a1 = 3"},
           C{{0, 0, 1}, 1, G, "a2 > -1"}}),
      row(FD, 3, 3, 3, {1, 1, 0}, "n0 + a0 + a1 + 3",
          {C{{1, 1, 0}, 2, L, "a0 < -2 - a1"}, C{{0, 1, 0}, 1, L, "a1 < -1"},
           C{{0, 0, 1}, -3, E, "a2 = 3"}}),
  };
}

}  // namespace

double LinearCondition::value(const AlgebraParams& params) const {
  double v = constant;
  for (std::size_t i = 0; i < coeff.size(); ++i) v += coeff[i] * params.alpha()[i];
  return v;
}

bool LinearCondition::holds(const AlgebraParams& params, double tol) const {
  const double v = value(params);
  switch (rel) {
    case Relation::Greater: return v > tol;
    case Relation::Less: return v < -tol;
    case Relation::Equal: return std::abs(v) <= tol;
  }
  return false;
}

bool TableRow::matches(const AlgebraParams& params, double tol) const {
  for (const auto& c : conditions)
    if (!c.holds(params, tol)) return false;
  return true;
}

double TableRow::c_value(const AlgebraParams& params, long n0) const {
  double c = static_cast<double>(n0) + c_const;
  for (std::size_t i = 0; i < c_coeff.size(); ++i) c += c_coeff[i] * params.alpha()[i];
  return c;
}

std::string TableRow::type_label() const {
  return kind == UnirrepKind::BFB ? "BFB" : "FD(d=" + std::to_string(d) + ")";
}

std::string TableRow::n0_label() const {
  std::ostringstream os;
  os << c_coeff.size() + 1 << "k0";
  if (residue) os << "+" << residue;
  return os.str();
}

std::vector<TableRow> table_report(int lambda) {
  switch (lambda) {
    case 2: return table_lambda2();
    case 3: return table_lambda3();
    case 4: return table_lambda4();
    default: throw InvalidParameters("tables exist for lambda = 2, 3, 4 only");
  }
}

}  // namespace clext
