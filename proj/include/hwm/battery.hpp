/*
   Copyright 2026 The hwm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwm/instance.hpp"
#include "hwm/verify.hpp"

namespace hwm {

struct BatteryInstance {
  std::string key;
  HypersurfaceSpec spec;
};

struct BatteryOptions {
  unsigned workers = 1;
  /// Series order is |U^S_min| + extra_order.
  std::size_t extra_order = 2;
  std::uint64_t field_guard = std::uint64_t{1} << 24;
  std::uint64_t work_guard = std::uint64_t{1} << 36;
};

/// Full-monomial instances with (n, d) in {(2,2), (2,3), (3,2)}, p in {2,3,5},
/// a in {1,2} and uniformly random nonzero coefficient vectors.
std::vector<BatteryInstance> random_instances(std::uint64_t seed, std::size_t count);
/// Every *.hw file of a directory, sorted by file name.
std::vector<BatteryInstance> directory_instances(const std::string& dir);

struct BatteryResult {
  Json report;
  bool all_pass = false;
  bool internal_error = false;
};

/// Congruence, Hasse-Witt oracle (mu = 0), Euler and box checks per instance.
/// The report carries no timing, so it depends only on the instances.
BatteryResult run_battery(const std::vector<BatteryInstance>& instances, const BatteryOptions& options = {});

}  // namespace hwm
