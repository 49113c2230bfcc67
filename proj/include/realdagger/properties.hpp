// Copyright 2026 The realdagger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded property suite over every module. Shared by the selftest command,
// the unit tests and the acceptance runner.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "realdagger/random.hpp"

namespace realdagger {

/// Per-property failure bookkeeping; keeps the first message only.
class Tally {
 public:
  void expect(bool ok, const std::string& what);
  void fail(const std::string& what) { expect(false, what); }
  int failures() const { return failures_; }
  const std::string& first_failure() const { return first_; }

 private:
  int failures_ = 0;
  std::string first_;
};

struct Property {
  std::string module;
  std::string name;
  /// Cases per unit of --cases; ignored when fixed_cases > 0.
  int weight = 1;
  int fixed_cases = 0;
  std::function<void(Rng& rng, int index, Tally& tally)> body;

  int case_count(int cases) const { return fixed_cases > 0 ? fixed_cases : weight * cases; }
};

struct PropertyResult {
  std::string module;
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool passed() const { return failures == 0 && cases > 0; }
};

const std::vector<Property>& properties();
/// Throws std::out_of_range for an unknown name.
const Property& find_property(const std::string& name);

/// Each property draws from its own generator seeded by (seed, name), so the
/// result does not depend on which other properties run.
PropertyResult run_property(const Property& p, std::uint64_t seed, int cases);
std::vector<PropertyResult> run_selftest(std::uint64_t seed, int cases);

}  // namespace realdagger
