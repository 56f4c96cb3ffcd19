#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "polygamy/linalg.hpp"

namespace polygamy {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); used to give every restart or
/// fuzz sample its own reproducible stream.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/// Matrix of i.i.d. standard complex Gaussians (unit variance per entry).
inline CMatrix complex_gaussian(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) g(r, c) = cplx(normal(rng), normal(rng));
  return g;
}

}  // namespace polygamy
