#include "clext/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "clext/errors.hpp"

namespace clext {

std::vector<Level> collect_levels(const std::function<double(long)>& energy, int lambda, int k_max,
                                  double tol) {
  if (k_max < 0) throw InvalidParameters("k_max must be nonnegative");
  std::vector<Level> levels;
  double top = -INFINITY;
  for (long k = 0; k <= k_max; ++k)
    for (int mu = 0; mu < lambda; ++mu) {
      long n = k * lambda + mu;
      levels.push_back({n, k, mu, energy(n), 1, 0});
      top = std::max(top, levels.back().energy);
    }
  const std::size_t reported = levels.size();

  constexpr long kMaxExtraBlocks = 10000;
  for (long k = k_max + 1; k <= k_max + kMaxExtraBlocks; ++k) {
    double block_min = INFINITY;
    for (int mu = 0; mu < lambda; ++mu) {
      long n = k * lambda + mu;
      levels.push_back({n, k, mu, energy(n), 1, 0});
      block_min = std::min(block_min, levels.back().energy);
    }
    if (block_min > top + tol) break;
  }

  std::vector<std::size_t> order(levels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return levels[a].energy < levels[b].energy; });
  std::vector<int> cls(levels.size());
  std::vector<int> size;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || levels[order[i]].energy - levels[order[i - 1]].energy > tol) size.push_back(0);
    cls[order[i]] = static_cast<int>(size.size()) - 1;
    ++size.back();
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    levels[i].level = cls[i];
    levels[i].degeneracy = size[cls[i]];
  }
  levels.resize(reported);
  return levels;
}

std::vector<double> class_energies(const std::vector<Level>& levels) {
  std::map<int, double> by_class;
  for (const auto& l : levels) by_class.emplace(l.level, l.energy);
  std::vector<double> out;
  for (const auto& [cls, e] : by_class) out.push_back(e);
  return out;
}

bool equally_spaced(const std::vector<Level>& levels, double tol) {
  auto e = class_energies(levels);
  if (e.size() < 3) return true;
  const double spacing = e[1] - e[0];
  for (std::size_t i = 2; i < e.size(); ++i)
    if (std::abs(e[i] - e[i - 1] - spacing) > tol) return false;
  return true;
}

}  // namespace clext
