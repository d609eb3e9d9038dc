#pragma once

#include <map>
#include <memory>

#include "cnotperm/search.hpp"

namespace testtables {

/// Distance tables built once per test binary.
inline const cnotperm::DistanceTable& get(int n) {
  static std::map<int, std::unique_ptr<cnotperm::DistanceTable>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<cnotperm::DistanceTable>(cnotperm::build_distance_table(n));
  return *slot;
}

}  // namespace testtables
