#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "error.hpp"

namespace th {

inline double rel_diff(double a, double b) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

inline double lerp_to(double lo, double hi, double t) { return lo + (hi - lo) * t; }

// Latin hypercube in [0,1]^dims: per dimension, a shuffled stratum index plus
// in-stratum jitter, so every axis is evenly covered at any sample count.
inline std::vector<std::vector<double>> latin_hypercube(std::size_t n, std::size_t dims,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> perm(n);
  std::vector<std::vector<double>> pts(n, std::vector<double>(dims));
  for (std::size_t d = 0; d < dims; ++d) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
      pts[i][d] = (static_cast<double>(perm[i]) + unit(rng)) / static_cast<double>(n);
  }
  return pts;
}

template <class F>
std::optional<pw::errc> thrown_code(F&& fn) {
  try {
    fn();
  } catch (const pw::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace th
