#pragma once

#include "hypsurf/bignum.hpp"
#include "hypsurf/pattern.hpp"

#include <random>
#include <string>
#include <vector>

namespace hypsurf::testing {

inline std::string data_path(const std::string& name) {
  return std::string(HYPSURF_DATA_DIR) + "/" + name;
}

// Relative agreement to 10^-digits.
inline bool close_rel(const BigReal& x, const BigReal& y, int digits) {
  BigReal scale = abs(x) > abs(y) ? abs(x) : abs(y);
  if (scale < 1) scale = 1;
  return abs(x - y) <= pow10(-digits) * scale;
}

inline Triple random_admissible(std::mt19937_64& rng, const std::vector<Triple>& adp) {
  std::uniform_int_distribution<std::size_t> pick(0, adp.size() - 1);
  return adp[pick(rng)];
}

}  // namespace hypsurf::testing
