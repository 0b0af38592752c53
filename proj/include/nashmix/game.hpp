#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nashmix/common.hpp"
#include "nashmix/matrix.hpp"

namespace nashmix {

enum class Side { row, col };

inline Side other(Side s) { return s == Side::row ? Side::col : Side::row; }

/// Two-player game in normal form. Payoffs are kept normalized to [0,1];
/// construct unnormalized data through normalize().
struct BimatrixGame {
  Matrix R, C;

  std::size_t rows() const { return R.rows(); }
  std::size_t cols() const { return R.cols(); }

  BimatrixGame transposed() const { return BimatrixGame{C.transposed(), R.transposed()}; }
};

/// Probability vector over one player's pure strategies.
struct MixedStrategy {
  std::vector<double> weights;
  Side side = Side::row;

  std::size_t size() const { return weights.size(); }
};

struct RegretPair {
  double fR = 0.0;
  double fC = 0.0;
  double f = 0.0;
};

inline void check_simplex(const std::vector<double>& w, const char* what) {
  if (w.empty()) throw input_error(std::string(what) + ": empty strategy");
  double s = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < -tol::tie) throw input_error(std::string(what) + ": negative or non-finite weight");
    s += x;
  }
  if (std::abs(s - 1.0) > tol::tie) throw input_error(std::string(what) + ": weights do not sum to 1");
}

inline MixedStrategy pure_strategy(Side side, std::size_t index, std::size_t n) {
  MixedStrategy s;
  s.side = side;
  s.weights.assign(n, 0.0);
  s.weights[index] = 1.0;
  return s;
}

inline MixedStrategy uniform_strategy(Side side, std::size_t n) {
  MixedStrategy s;
  s.side = side;
  s.weights.assign(n, 1.0 / static_cast<double>(n));
  return s;
}

// v -> (v - min) / (max - min) per matrix; a constant matrix maps to zeros.
inline Matrix normalize_matrix(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw input_error("empty payoff matrix");
  if (!all_finite(a.data())) throw input_error("non-finite payoff entry");
  const double lo = vec_min(a.data());
  const double hi = vec_max(a.data());
  Matrix out(a.rows(), a.cols());
  if (hi - lo <= 0.0) return out;
  const double scale = 1.0 / (hi - lo);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (a(i, j) - lo) * scale;
  return out;
}

inline BimatrixGame normalize(const Matrix& rawR, const Matrix& rawC) {
  if (rawR.rows() != rawC.rows() || rawR.cols() != rawC.cols())
    throw input_error("R and C dimensions differ");
  return BimatrixGame{normalize_matrix(rawR), normalize_matrix(rawC)};
}

/// f_R(x,y) = max{Ry} - x^T R y, f_C(x,y) = max{C^T x} - x^T C y, f = max of both.
inline RegretPair regrets(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.size() != g.rows() || y.size() != g.cols()) throw input_error("strategy dimension mismatch");
  check_simplex(x.weights, "row strategy");
  check_simplex(y.weights, "col strategy");
  const std::vector<double> Ry = g.R.mul(y.weights);
  const std::vector<double> Ctx = g.C.mul_t(x.weights);
  double xRy = 0.0, xCy = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) xRy += x.weights[i] * Ry[i];
  for (std::size_t j = 0; j < g.cols(); ++j) xCy += y.weights[j] * Ctx[j];
  RegretPair r;
  r.fR = std::max(0.0, vec_max(Ry) - xRy);
  r.fC = std::max(0.0, vec_max(Ctx) - xCy);
  r.f = std::max(r.fR, r.fC);
  return r;
}

/// suppmax(Ry) for the row side, suppmax(C^T x) for the column side.
inline std::vector<std::size_t> best_response(const BimatrixGame& g, Side side,
                                              const MixedStrategy& opponent) {
  if (side == Side::row) {
    if (opponent.size() != g.cols()) throw input_error("opponent strategy dimension mismatch");
    check_simplex(opponent.weights, "opponent strategy");
    return arg_max_set(g.R.mul(opponent.weights));
  }
  if (opponent.size() != g.rows()) throw input_error("opponent strategy dimension mismatch");
  check_simplex(opponent.weights, "opponent strategy");
  return arg_max_set(g.C.mul_t(opponent.weights));
}

// Lowest-index pure best response, the tie-breaking rule used by every search phase.
inline MixedStrategy pure_best_response(const BimatrixGame& g, Side side,
                                        const MixedStrategy& opponent) {
  const auto set = best_response(g, side, opponent);
  const std::size_t n = side == Side::row ? g.rows() : g.cols();
  return pure_strategy(side, set.front(), n);
}

inline MixedStrategy mix(const std::vector<MixedStrategy>& parts, const std::vector<double>& coeff) {
  MixedStrategy out;
  out.side = parts.front().side;
  out.weights.assign(parts.front().size(), 0.0);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out.weights[i] += coeff[k] * parts[k].weights[i];
  for (double& w : out.weights) w = std::max(0.0, w);
  double s = 0.0;
  for (double w : out.weights) s += w;
  for (double& w : out.weights) w /= s;
  return out;
}

} // namespace nashmix
