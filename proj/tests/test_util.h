// Copyright 2026 The Authors.
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

#ifndef GENCONF_TESTS_TEST_UTIL_H_
#define GENCONF_TESTS_TEST_UTIL_H_

#include <initializer_list>
#include <vector>

#include "genconf/configuration.h"

namespace genconf::testing {

inline Configuration Config(
    int m, Space space,
    std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& row : rows) {
    out.emplace_back(row.begin(), row.end());
  }
  return Configuration(m, space, std::move(out));
}

// The reduced configuration e1, e2, e3, [1:1:1], [2:3:5].
inline Configuration Reduced235() {
  return Config(2, Space::kProjective,
                {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 3, 5}});
}

}  // namespace genconf::testing

#endif  // GENCONF_TESTS_TEST_UTIL_H_
