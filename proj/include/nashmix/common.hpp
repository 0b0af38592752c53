#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashmix {

// Error classes map onto the CLI exit-code contract (2 = input, 3 = solver).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double tie = 1e-9;         // suppmax/suppmin membership
inline constexpr double feasibility = 1e-8; // LP primal feasibility
inline constexpr double duality = 1e-7;     // LP strong duality / compl. slackness
inline constexpr double geometry = 1e-12;   // intersection slack
} // namespace tol

inline bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline double clamp(double x, double lo, double hi) {
  return x < lo ? lo : (x > hi ? hi : x);
}

} // namespace nashmix
