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

#include "hwm/battery.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>

#include "hwm/errors.hpp"
#include "hwm/parallel.hpp"

namespace hwm {
namespace {

struct Outcome {
  Json record;
  bool pass = true;
  bool internal = false;
};

Json brief(const Report& r) {
  Json j{{"pass", r.pass}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

Outcome run_one(const BatteryInstance& inst, const BatteryOptions& options) {
  const HypersurfaceSpec& spec = inst.spec;
  Outcome out;
  out.record = Json{{"key", inst.key}, {"instance", instance_echo(spec)}};
  VerifyOptions vo;
  vo.series_order = enumerate_u_min(IndexSubset::full(spec.n), spec.n, spec.d).size() + options.extra_order;
  vo.field_guard = options.field_guard;
  vo.work_guard = options.work_guard;
  out.record["series_order"] = vo.series_order;
  Json checks = Json::object();
  try {
    const Report c = check_congruence(spec, vo);
    Json j = brief(c);
    j["theorem"] = c.check;
    j["det"] = c.details["det"];
    j["point_counts"] = c.details["point_counts"];
    j["scaled_mod_p"] = c.details["scaled_mod_p"];
    checks["congruence"] = j;
    if (spec.mu() == 0) checks["hw_oracle"] = brief(check_hw_oracle(spec, vo));
    checks["euler"] = brief(check_euler_all(spec, vo));
    checks["box"] = brief(check_box_all(spec, vo));
  } catch (const InternalError& e) {
    out.internal = true;
    out.record["internal_error"] = {{"code", e.code()}, {"witness", e.witness()}};
  } catch (const InputError& e) {
    out.record["input_error"] = e.what();
  }
  out.record["checks"] = checks;
  out.pass = !out.internal && !out.record.contains("input_error");
  for (const auto& [name, c] : checks.items()) out.pass = out.pass && c["pass"].get<bool>();
  out.record["pass"] = out.pass;
  return out;
}

}  // namespace

std::vector<BatteryInstance> random_instances(std::uint64_t seed, std::size_t count) {
  static constexpr std::pair<int, int> kShapes[] = {{2, 2}, {2, 3}, {3, 2}};
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  std::mt19937_64 rng(seed);
  std::vector<BatteryInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [n, d] = kShapes[rng() % 3];
    const std::uint32_t p = kPrimes[rng() % 3];
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(rng() % 2);
    const FieldPtr field = make_field(p, a);
    const auto monomials = all_monomials(n, d);
    std::vector<Term> terms;
    bool all_zero = true;
    while (all_zero) {
      terms.clear();
      for (const auto& m : monomials) {
        terms.push_back({m, field->element(static_cast<std::uint32_t>(rng() % field->size()))});
        all_zero = all_zero && terms.back().coeff.is_zero();
      }
    }
    char key[64];
    std::snprintf(key, sizeof key, "random-%03zu-p%u-a%u-n%d-d%d", i, p, a, n, d);
    out.push_back({key, make_spec(p, a, n, d, std::move(terms))});
  }
  return out;
}

std::vector<BatteryInstance> directory_instances(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".hw") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .hw files in " + dir);
  std::vector<BatteryInstance> out;
  for (const auto& f : files) out.push_back({f.filename().string(), load_spec(f.string())});
  return out;
}

BatteryResult run_battery(const std::vector<BatteryInstance>& instances, const BatteryOptions& options) {
  std::vector<Outcome> outcomes(instances.size());
  parallel_for(instances.size(), options.workers,
               [&](std::size_t i) { outcomes[i] = run_one(instances[i], options); });

  BatteryResult result;
  result.all_pass = true;
  Json records = Json::array();
  std::size_t passed = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // check -> (run, passed)
  for (const auto& o : outcomes) {
    records.push_back(o.record);
    if (o.pass) ++passed;
    result.all_pass = result.all_pass && o.pass;
    result.internal_error = result.internal_error || o.internal;
    for (const auto& [name, c] : o.record["checks"].items()) {
      auto& t = tally[name];
      ++t.first;
      if (c["pass"].get<bool>()) ++t.second;
    }
  }
  Json by_check = Json::object();
  for (const auto& [name, t] : tally) by_check[name] = {{"run", t.first}, {"passed", t.second}};
  result.report = Json{{"summary",
                        {{"instances", instances.size()},
                         {"passed", passed},
                         {"failed", instances.size() - passed},
                         {"by_check", by_check},
                         {"all_pass", result.all_pass}}},
                       {"instances", records}};
  return result;
}

}  // namespace hwm
