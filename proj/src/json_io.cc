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

#include "genconf/json_io.h"

#include <string>
#include <utility>

#include "genconf/dcr.h"
#include "genconf/errors.h"

namespace genconf {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

mpq_class RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

}  // namespace

Json ToJson(const GaussianRational& z) {
  return Json{{"re", z.re().get_str()}, {"im", z.im().get_str()}};
}

GaussianRational ScalarFromJson(const Json& j) {
  if (j.is_object()) {
    mpq_class re = RationalFromJson(Field(j, "re"));
    mpq_class im = j.contains("im") ? RationalFromJson(j.at("im")) : mpq_class(0);
    return GaussianRational(std::move(re), std::move(im));
  }
  return GaussianRational(RationalFromJson(j));
}

Json ToJson(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (const auto& z : a.row(r)) row.push_back(ToJson(z));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  const std::size_t cols = j.front().size();
  Matrix a(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError("matrix rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = ScalarFromJson(j[r][c]);
  }
  return a;
}

Json ToJson(const Configuration& config) {
  Json rows = Json::array();
  for (const auto& row : config.rows()) {
    Json out = Json::array();
    for (const auto& z : row) out.push_back(ToJson(z));
    rows.push_back(std::move(out));
  }
  return Json{{"m", config.m()},
              {"n", config.n()},
              {"space", SpaceName(config.space())},
              {"rows", std::move(rows)}};
}

Configuration ConfigurationFromJson(const Json& j) {
  const int m = IntField(j, "m");
  const Json& space_field = Field(j, "space");
  if (!space_field.is_string()) throw ParseError("\"space\" must be a string");
  const Space space = ParseSpace(space_field.get<std::string>());
  const Json& rows_field = Field(j, "rows");
  if (!rows_field.is_array()) throw ParseError("\"rows\" must be an array");
  std::vector<std::vector<GaussianRational>> rows;
  for (const Json& row : rows_field) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    std::vector<GaussianRational> out;
    for (const Json& z : row) out.push_back(ScalarFromJson(z));
    rows.push_back(std::move(out));
  }
  if (j.contains("n") && IntField(j, "n") != static_cast<int>(rows.size())) {
    throw ParseError("\"n\" does not match the number of rows");
  }
  return Configuration(m, space, std::move(rows));
}

Json ToJson(const Permutation& p) { return Json(p.images()); }

Permutation PermutationFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("permutation must be an array");
  std::vector<int> images;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  return Permutation(std::move(images));
}

Json ToJson(const TameMap& f) {
  Json tau;
  if (f.is_constant()) {
    tau = Json{{"kind", "constant"},
               {"matrix", ToJson(std::get<ProjectiveTransform>(f.tau()).matrix())}};
  } else {
    const auto& p = std::get<ParametricTau>(f.tau());
    Json coefficients = Json::array();
    for (const Matrix& a : p.coefficients) coefficients.push_back(ToJson(a));
    tau = Json{{"kind", "parametric"},
               {"orbit_dcr", p.orbit_dcr.ToString()},
               {"template", std::move(coefficients)}};
  }
  return Json{{"sigma", ToJson(f.sigma())}, {"tau", std::move(tau)}};
}

TameMap TameMapFromJson(const Json& j) {
  Permutation sigma = PermutationFromJson(Field(j, "sigma"));
  const Json& tau = Field(j, "tau");
  const Json& kind = Field(tau, "kind");
  if (kind == "constant") {
    return TameMap(std::move(sigma),
                   ProjectiveTransform(MatrixFromJson(Field(tau, "matrix"))));
  }
  if (kind == "parametric") {
    const Json& dcr = Field(tau, "orbit_dcr");
    const Json& tmpl = Field(tau, "template");
    if (!dcr.is_string()) throw ParseError("\"orbit_dcr\" must be a string");
    if (!tmpl.is_array()) throw ParseError("\"template\" must be an array");
    ParametricTau p{ParseDcr(dcr.get<std::string>()), {}};
    for (const Json& a : tmpl) p.coefficients.push_back(MatrixFromJson(a));
    return TameMap(std::move(sigma), std::move(p));
  }
  throw ParseError("tau kind must be \"constant\" or \"parametric\"");
}

Json ToJson(const DivisibilityComplex& cx, int dimension,
            const std::map<int, std::vector<std::vector<std::vector<int>>>>*
                orbits) {
  Json vertices = Json::array();
  for (const Dcr& d : cx.vertices()) vertices.push_back(d.ToString());
  Json edges = Json::array();
  for (const auto& [u, v] : cx.Edges()) edges.push_back(Json::array({u, v}));
  Json out{{"m", cx.m()},
           {"n", cx.n()},
           {"dimension", dimension},
           {"vertices", std::move(vertices)},
           {"edges", std::move(edges)}};
  if (orbits != nullptr) {
    Json by_t = Json::object();
    for (const auto& [t, list] : *orbits) by_t[std::to_string(t)] = list;
    out["orbits"] = std::move(by_t);
  }
  return out;
}

}  // namespace genconf
