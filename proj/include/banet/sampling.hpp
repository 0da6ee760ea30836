#pragma once

#include <random>

#include "banet/netcore.hpp"

namespace banet {

// Uniform random configuration of size n.
inline Configuration random_configuration(int n, std::mt19937_64& rng) {
  Configuration x(n);
  for (int i = 0; i < n; i += 64) {
    std::uint64_t w = rng();
    for (int b = 0; b < 64 && i + b < n; ++b) {
      if ((w >> b) & 1u) x.set_bit(i + b, true);
    }
  }
  return x;
}

}  // namespace banet
