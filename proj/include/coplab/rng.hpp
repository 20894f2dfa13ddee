#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace coplab {

// All randomness in the project comes from std::mt19937_64, whose output
// sequence for a given seed is fixed by the C++ standard. Reals are built from
// the top 53 bits so results do not depend on the standard library's
// distribution implementations.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, m); m must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t m) {
  auto i = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(m));
  return i < m ? i : m - 1;
}

}  // namespace coplab
