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

#include <gtest/gtest.h>

#include "genconf/errors.h"
#include "test_util.h"

namespace genconf {
namespace {

TEST(JsonIoTest, ScalarCanonicalForm) {
  GaussianRational z(mpq_class(-6, 4), mpq_class(2, 1));
  Json j = ToJson(z);
  EXPECT_EQ(j.dump(), R"({"re":"-3/2","im":"2"})");
  EXPECT_EQ(ScalarFromJson(j), z);
  EXPECT_EQ(ScalarFromJson(Json("4/6")), GaussianRational(mpq_class(2, 3)));
  EXPECT_EQ(ScalarFromJson(Json(5)), GaussianRational(5));
  EXPECT_THROW(ScalarFromJson(Json(1.5)), ParseError);
  EXPECT_THROW(ScalarFromJson(Json{{"re", "0.5"}}), ParseError);
}

TEST(JsonIoTest, ConfigurationRoundTrip) {
  for (Space space : {Space::kProjective, Space::kAffine}) {
    Configuration q = SampleGeneric(3, 7, space, 4);
    Json j = ToJson(q);
    EXPECT_EQ(j.at("n"), 7);
    EXPECT_EQ(ConfigurationFromJson(j), q);
    EXPECT_EQ(ConfigurationFromJson(Json::parse(j.dump())), q);
  }
}

TEST(JsonIoTest, ConfigurationErrors) {
  Json j = ToJson(testing::Reduced235());
  Json missing = j;
  missing.erase("rows");
  EXPECT_THROW(ConfigurationFromJson(missing), ParseError);
  Json wrong_n = j;
  wrong_n["n"] = 6;
  EXPECT_THROW(ConfigurationFromJson(wrong_n), ParseError);
  Json wrong_space = j;
  wrong_space["space"] = "spherical";
  EXPECT_THROW(ConfigurationFromJson(wrong_space), Error);
}

TEST(JsonIoTest, MatrixRoundTrip) {
  Matrix a{{1, GaussianRational(0, 2)}, {mpq_class(1, 3), -4}};
  EXPECT_EQ(MatrixFromJson(ToJson(a)), a);
  EXPECT_THROW(MatrixFromJson(Json::parse("[[1,2],[3]]")), ParseError);
}

TEST(JsonIoTest, TameMapRoundTrip) {
  for (bool parametric : {false, true}) {
    TameMap f = RandomTameMap(2, 7, parametric, 3);
    TameMap g = TameMapFromJson(Json::parse(ToJson(f).dump()));
    EXPECT_EQ(g.sigma(), f.sigma());
    EXPECT_EQ(g.is_constant(), f.is_constant());
    Configuration q = SampleGeneric(2, 7, Space::kProjective, 1);
    EXPECT_EQ(EvalMap(g, q), EvalMap(f, q));
  }
  EXPECT_THROW(TameMapFromJson(Json::parse(
                   R"({"sigma":[1,2,3,4,5],"tau":{"kind":"other"}})")),
               ParseError);
}

TEST(JsonIoTest, ComplexExport) {
  DivisibilityComplex cx = BuildComplex(2, 5);
  std::map<int, std::vector<std::vector<std::vector<int>>>> orbits = {
      {0, Orbits(cx, 0)}};
  Json j = ToJson(cx, Dimension(cx), &orbits);
  EXPECT_EQ(j.at("vertices").size(), 30u);
  EXPECT_EQ(j.at("edges").size(), cx.edge_count());
  EXPECT_EQ(j.at("dimension"), 1);
  EXPECT_EQ(j.at("orbits").at("0").size(), 1u);
  EXPECT_EQ(ParseDcr(j.at("vertices")[0].get<std::string>()), cx.vertices()[0]);
}

}  // namespace
}  // namespace genconf
