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

#ifndef GENCONF_JSON_IO_H_
#define GENCONF_JSON_IO_H_

#include <json.hpp>

#include <map>
#include <vector>

#include "genconf/complex.h"
#include "genconf/configuration.h"
#include "genconf/gaussian_rational.h"
#include "genconf/matrix.h"
#include "genconf/permutation.h"
#include "genconf/tame.h"

namespace genconf {

using Json = nlohmann::ordered_json;

// Scalars are {"re":"p/q","im":"r/s"}. The readers also accept a bare
// string or integer for a real scalar. All readers throw ParseError.
Json ToJson(const GaussianRational& z);
GaussianRational ScalarFromJson(const Json& j);

Json ToJson(const Matrix& a);
Matrix MatrixFromJson(const Json& j);

// {"m","n","space","rows"}.
Json ToJson(const Configuration& config);
Configuration ConfigurationFromJson(const Json& j);

Json ToJson(const Permutation& p);
Permutation PermutationFromJson(const Json& j);

// {"sigma":[...],"tau":{"kind":"constant","matrix":...}} or
// {"sigma":[...],"tau":{"kind":"parametric","orbit_dcr":...,"template":[...]}}
// where template lists the coefficient matrices of u^0, u^1, ...
Json ToJson(const TameMap& f);
TameMap TameMapFromJson(const Json& j);

// {"m","n","dimension","vertices","edges"} plus "orbits" keyed by t when
// given.
Json ToJson(const DivisibilityComplex& cx, int dimension,
            const std::map<int, std::vector<std::vector<std::vector<int>>>>*
                orbits = nullptr);

}  // namespace genconf

#endif  // GENCONF_JSON_IO_H_
