#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wzb {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

// Absolute tolerance on probability row sums (closed-form constructors are
// exact up to rounding).
inline constexpr double kProbTol = 1e-12;

// Thrown when an exhaustive search would exceed its partition budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t partition_count)
      : std::runtime_error(what), partition_count_(partition_count) {}
  std::uint64_t partition_count() const { return partition_count_; }

 private:
  std::uint64_t partition_count_;
};

// Thrown when an iterative solver fails to meet its residual targets.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

inline double log2_safe(double x) {
  return x > 0.0 ? std::log2(x) : 0.0;
}

// -sum p log2 p with 0 log 0 = 0
inline double entropy_bits(const Vec& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

inline Vec linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace: n must be >= 1");
  Vec out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

// splitmix64; used to derive independent per-restart RNG seeds
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return mix_seed(base ^ mix_seed(a ^ mix_seed(b)));
}

}  // namespace wzb
