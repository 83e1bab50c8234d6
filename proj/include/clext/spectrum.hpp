#pragma once

#include <functional>
#include <vector>

namespace clext {

inline constexpr double kDegeneracyTol = 1e-9;

struct Level {
  long n = 0;
  long k = 0;
  int mu = 0;
  double energy = 0.0;
  int degeneracy = 1;  // size of the class of equal energies
  int level = 0;       // rank of the class, 0 = ground level
};

// Energies E(n) for n = k*lambda + mu, k = 0..k_max. Extra blocks beyond k_max
// are scanned so that classes near the top are not cut short.
std::vector<Level> collect_levels(const std::function<double(long)>& energy, int lambda, int k_max,
                                  double tol = kDegeneracyTol);

// Distinct class energies in ascending order.
std::vector<double> class_energies(const std::vector<Level>& levels);

// True when consecutive class energies have a common spacing within tol.
bool equally_spaced(const std::vector<Level>& levels, double tol = kDegeneracyTol);

}  // namespace clext
