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

// genconf: command-line front end for the configuration-space toolkit.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genconf/complex.h"
#include "genconf/configuration.h"
#include "genconf/dcr.h"
#include "genconf/errors.h"
#include "genconf/json_io.h"
#include "genconf/normalize.h"
#include "genconf/tame.h"

namespace {

using genconf::Json;

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw genconf::ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw genconf::ParseError(path + ": " + e.what());
  }
}

void Emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw genconf::ParseError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

void CheckDims(int m, int n) {
  if (m < 1 || n < m + 3) {
    throw genconf::InvalidConfiguration("need m >= 1 and n >= m+3");
  }
}

// check: validate any document this tool reads or writes.
Json CheckDocument(const Json& doc) {
  using namespace genconf;
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (doc.contains("rows")) {
    Configuration q = ConfigurationFromJson(doc);
    const bool generic = IsGeneric(q);
    return Json{{"kind", "configuration"},
                {"m", q.m()},
                {"n", q.n()},
                {"space", SpaceName(q.space())},
                {"generic", generic},
                {"reduced", IsReduced(q)}};
  }
  if (doc.contains("gamma") && doc.contains("reduced")) {
    Matrix g = MatrixFromJson(doc.at("gamma"));
    ReducedConfiguration r(ConfigurationFromJson(doc.at("reduced")));
    return Json{{"kind", "normalization"},
                {"m", r.m()},
                {"n", r.n()},
                {"gamma_invertible", !g.Determinant().is_zero()}};
  }
  if (doc.contains("vertices")) {
    std::vector<Dcr> vertices;
    for (const Json& v : doc.at("vertices")) {
      vertices.push_back(ParseDcr(v.get<std::string>()));
    }
    std::size_t bad_edges = 0;
    for (const Json& e : doc.value("edges", Json::array())) {
      const auto u = e.at(0).get<std::size_t>();
      const auto v = e.at(1).get<std::size_t>();
      if (u >= vertices.size() || v >= vertices.size() ||
          !Divides(vertices[u], vertices[v])) {
        ++bad_edges;
      }
    }
    return Json{{"kind", "complex"},
                {"vertices", vertices.size()},
                {"edges", doc.value("edges", Json::array()).size()},
                {"invalid_edges", bad_edges}};
  }
  if (doc.contains("sigma") && doc.contains("tau")) {
    TameMap f = TameMapFromJson(doc);
    return Json{{"kind", "tame_map"},
                {"m", f.m()},
                {"n", f.n()},
                {"tau", f.is_constant() ? "constant" : "parametric"}};
  }
  if (doc.contains("rho") && doc.contains("sigma")) {
    return Json{{"kind", "recovery"},
                {"sigma", ToJson(PermutationFromJson(doc.at("sigma")))}};
  }
  if (doc.contains("simplex") && doc.contains("stabilizer")) {
    return Json{{"kind", "stabilizer"},
                {"order", doc.at("stabilizer").size()}};
  }
  if (doc.contains("orbits")) {
    return Json{{"kind", "orbits"}, {"m", doc.at("m")}, {"n", doc.at("n")}};
  }
  throw ParseError("unrecognized document");
}

std::map<int, std::vector<std::vector<std::vector<int>>>> AllOrbits(
    const genconf::DivisibilityComplex& cx, int max_dim) {
  std::map<int, std::vector<std::vector<std::vector<int>>>> out;
  for (int t = 0; t <= max_dim; ++t) {
    auto orbits = genconf::Orbits(cx, t);
    if (orbits.empty()) break;
    out[t] = std::move(orbits);
  }
  return out;
}

Json OrbitSummary(const genconf::DivisibilityComplex& cx, int max_dim) {
  using namespace genconf;
  Json by_t = Json::object();
  for (const auto& [t, orbits] : AllOrbits(cx, max_dim)) {
    Json list = Json::array();
    for (const auto& orbit : orbits) {
      Simplex rep;
      for (int v : orbit.front()) rep.vertices.push_back(cx.vertices()[v]);
      Json reps = Json::array();
      for (const Dcr& d : rep.vertices) reps.push_back(d.ToString());
      Json entry{{"size", orbit.size()}, {"representative", std::move(reps)}};
      if (t >= 1) {
        entry["type"] = SimplexTypeName(Classify(rep));
      }
      list.push_back(std::move(entry));
    }
    by_t[std::to_string(t)] = std::move(list);
  }
  return by_t;
}

// selftest: a compact run of the invariant suites for one (m, n).
int SelfTest(int m, int n, std::uint64_t seed) {
  using namespace genconf;
  CheckDims(m, n);
  struct Row {
    std::string name;
    std::string result;
    std::string detail;
  };
  std::vector<Row> rows;
  auto run = [&](const std::string& name, const std::function<std::string()>& fn) {
    try {
      std::string detail = fn();
      rows.push_back({name, "PASS", detail});
    } catch (const std::exception& e) {
      rows.push_back({name, "FAIL", e.what()});
    }
  };
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
  };
  std::mt19937_64 rng(seed);
  const std::vector<Dcr> dcrs = EnumerateDcrs(m, n);
  auto random_dcrs = [&](std::size_t count) {
    std::vector<Dcr> out;
    std::uniform_int_distribution<std::size_t> pick(0, dcrs.size() - 1);
    for (std::size_t i = 0; i < count; ++i) out.push_back(dcrs[pick(rng)]);
    return out;
  };

  run("plucker", [&] {
    int checked = 0;
    for (int k = 0; k < 10; ++k) {
      Configuration q = SampleGeneric(m, n, Space::kProjective, seed + k);
      for (const Dcr& d : random_dcrs(5)) {
        const auto& x = d.quad();
        require(PlueckerDefect(q, d.essential_support(), x[0], x[1], x[2], x[3])
                    .is_zero(),
                "nonzero defect for " + d.ToString());
        ++checked;
      }
    }
    return std::to_string(checked) + " relations";
  });
  run("omit-0-1", [&] {
    for (int k = 0; k < 5; ++k) {
      MinorTable minors(SampleGeneric(m, n, Space::kProjective, seed + k));
      for (const Dcr& d : dcrs) {
        GaussianRational v = Evaluate(d, minors);
        require(!v.is_zero() && !v.is_one(), d.ToString() + " hits 0 or 1");
      }
    }
    return std::to_string(5 * dcrs.size()) + " values";
  });
  run("psl-invariance", [&] {
    for (int k = 0; k < 5; ++k) {
      Configuration q = SampleGeneric(m, n, Space::kProjective, seed + 100 + k);
      ProjectiveTransform t = ProjectiveTransform::Random(m, rng);
      Configuration tq = ActTransform(t, q);
      for (const Dcr& d : random_dcrs(20)) {
        require(Evaluate(d, q) == Evaluate(d, tq), d.ToString() + " changed");
      }
    }
    return std::string("100 values");
  });
  run("identities", [&] {
    Configuration q = SampleGeneric(m, n, Space::kProjective, seed + 200);
    for (const Dcr& d : random_dcrs(20)) {
      GaussianRational v = Evaluate(d, q);
      require(Evaluate(OneMinus(d), q) == GaussianRational(1) - v,
              "sum-to-one fails for " + d.ToString());
      require(Evaluate(Inverse(d), q) == v.reciprocal(),
              "reciprocal fails for " + d.ToString());
    }
    return std::string("20 DCRs");
  });
  run("normalization", [&] {
    for (int k = 0; k < 5; ++k) {
      Configuration q = SampleGeneric(m, n, Space::kProjective, seed + 300 + k);
      ProjectiveTransform t = ProjectiveTransform::Random(m, rng);
      auto [g, reduced] = Decompose(q);
      require(ReducedForm(ActTransform(t, q)) == reduced, "gamma(Tq)Tq differs");
      require(ProjectivelyEqual(Compose(g, reduced), q), "compose differs");
    }
    return std::string("5 pairs");
  });
  const DivisibilityComplex cx = BuildComplex(m, n);
  run("divisor-oracle", [&] {
    std::size_t checked = 0;
    const std::size_t stride = std::max<std::size_t>(1, dcrs.size() / 200);
    for (std::size_t v = 0; v < dcrs.size(); v += stride) {
      std::vector<Dcr> exhaustive;
      for (const Dcr& nu : dcrs) {
        if (Divides(nu, dcrs[v])) exhaustive.push_back(nu);
      }
      require(exhaustive == DivisorCandidates(dcrs[v], n),
              "candidates differ at " + dcrs[v].ToString());
      ++checked;
    }
    return std::to_string(checked) + " vertices";
  });
  const int dim = Dimension(cx);
  run("dimension", [&] {
    require(dim == std::max(n - m - 3, m - 1), "dimension " + std::to_string(dim));
    return "dim " + std::to_string(dim);
  });
  run("orbits", [&] {
    require(Orbits(cx, 0).size() == 1, "vertices form several orbits");
    std::string counts;
    for (int t = 0; t <= dim; ++t) {
      auto orbits = Orbits(cx, t);
      for (const auto& orbit : orbits) {
        if (t == 0) continue;
        std::optional<SimplexType> type;
        for (const auto& sx : orbit) {
          Simplex s;
          for (int v : sx) s.vertices.push_back(cx.vertices()[v]);
          SimplexType c = Classify(s);
          require(!type || *type == c, "classify varies on an orbit");
          type = c;
        }
      }
      counts += (t ? " " : "") + std::to_string(t) + ":" +
                std::to_string(orbits.size());
    }
    return counts;
  });
  run("stabilizers", [&] {
    std::string detail;
    const std::pair<SimplexType, int> cases[] = {
        {SimplexType::kFirst, n - m - 3}, {SimplexType::kSecond, m - 1}};
    for (const auto& [type, t] : cases) {
      if (t < 0) continue;
      Simplex sx = NormalSimplex(type, t, m, n);
      const std::uint64_t stab = Stabilizer(sx, n).size();
      require(stab * OrderedOrbitSize(cx, sx) == Factorial(n),
              "orbit-stabilizer fails");
      detail += std::string(detail.empty() ? "" : " ") + SimplexTypeName(type) +
                ":" + std::to_string(stab);
    }
    return detail;
  });
  if (m > 1 && n != 2 * m + 2) {
    run("tame-recovery", [&] {
      for (int k = 0; k < 2; ++k) {
        TameMap f = RandomTameMap(m, n, k == 1, seed + k);
        RecoveredMap rec = Recover(AsConfigMap(f), m, n, Space::kProjective, seed);
        require(rec.sigma() == f.sigma(), "sigma differs");
        Configuration q = SampleGeneric(m, n, Space::kProjective, seed + 500 + k);
        require(ProjectivelyEqual(rec(q), EvalMap(f, q)), "images differ");
      }
      return std::string("2 maps");
    });
  } else {
    rows.push_back({"tame-recovery", "SKIP", "outside the recoverable range"});
  }

  bool ok = true;
  for (const Row& r : rows) {
    std::cout << std::left << std::setw(16) << r.name << std::setw(6) << r.result
              << r.detail << "\n";
    ok = ok && r.result != "FAIL";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic point configurations, determinant cross ratios and "
               "their divisibility complex."};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  std::string dcr_text;
  std::string space_name = "projective";
  std::string type_name = "first";
  int m = 0;
  int n = 0;
  int max_dim = -1;
  int dim = -1;
  int samples = 3;
  std::uint64_t seed = 0;
  bool with_orbits = false;

  auto* check = app.add_subcommand("check", "Validate a JSON document.");
  check->add_option("file", path, "JSON file")->required();

  auto* normalize =
      app.add_subcommand("normalize", "Normalize a configuration into the reduced space.");
  normalize->add_option("config", path, "configuration JSON")->required();
  normalize->add_option("--out", out_path, "output path");

  auto* dcr_eval = app.add_subcommand("dcr-eval", "Evaluate a DCR at a configuration.");
  dcr_eval->add_option("dcr", dcr_text, "DCR such as e[{1};2,3,4,5]")->required();
  dcr_eval->add_option("config", path, "configuration JSON")->required();

  auto* complex = app.add_subcommand("complex", "Build the divisibility complex.");
  complex->add_option("m", m)->required();
  complex->add_option("n", n)->required();
  complex->add_option("--max-dim", max_dim, "largest simplex dimension for orbits");
  complex->add_flag("--orbits", with_orbits, "include S(n)-orbits of simplices");
  complex->add_option("--out", out_path, "output path");

  auto* orbits = app.add_subcommand("orbits", "Summarize S(n)-orbits of simplices.");
  orbits->add_option("m", m)->required();
  orbits->add_option("n", n)->required();
  orbits->add_option("--max-dim", max_dim, "largest simplex dimension");
  orbits->add_option("--out", out_path, "output path");

  auto* stabilizer =
      app.add_subcommand("stabilizer", "Stabilizer of a normal simplex.");
  stabilizer->add_option("m", m)->required();
  stabilizer->add_option("n", n)->required();
  stabilizer->add_option("--type", type_name, "first or second")
      ->check(CLI::IsMember({"first", "second"}));
  stabilizer->add_option("--dim", dim, "simplex dimension (default: largest)");
  stabilizer->add_option("--out", out_path, "output path");

  auto* recover =
      app.add_subcommand("recover", "Recover sigma and tau from a tame map.");
  recover->add_option("map", path, "tame map JSON")->required();
  recover->add_option("m", m)->required();
  recover->add_option("n", n)->required();
  recover->add_option("--seed", seed, "sampling seed");
  recover->add_option("--samples", samples, "number of tau samples")
      ->check(CLI::Range(1, 100));
  recover->add_option("--space", space_name, "projective or affine")
      ->check(CLI::IsMember({"projective", "affine"}));
  recover->add_option("--out", out_path, "output path");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites.");
  selftest->add_option("--m", m)->required();
  selftest->add_option("--n", n)->required();
  selftest->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace genconf;
    if (*check) {
      std::cout << CheckDocument(ReadJsonFile(path)).dump(2) << "\n";
    } else if (*normalize) {
      auto [g, reduced] = Decompose(ConfigurationFromJson(ReadJsonFile(path)));
      Emit(Json{{"gamma", ToJson(g.matrix())},
                {"reduced", ToJson(reduced.config())}},
           out_path);
    } else if (*dcr_eval) {
      Dcr d = ParseDcr(dcr_text);
      std::cout << Evaluate(d, ConfigurationFromJson(ReadJsonFile(path))) << "\n";
    } else if (*complex) {
      CheckDims(m, n);
      DivisibilityComplex cx = BuildComplex(m, n);
      const int dimension = Dimension(cx);
      if (with_orbits) {
        auto all = AllOrbits(cx, max_dim < 0 ? dimension : max_dim);
        Emit(ToJson(cx, dimension, &all), out_path);
      } else {
        Emit(ToJson(cx, dimension), out_path);
      }
    } else if (*orbits) {
      CheckDims(m, n);
      DivisibilityComplex cx = BuildComplex(m, n);
      const int dimension = Dimension(cx);
      Emit(Json{{"m", m},
                {"n", n},
                {"dimension", dimension},
                {"orbits", OrbitSummary(cx, max_dim < 0 ? dimension : max_dim)}},
           out_path);
    } else if (*stabilizer) {
      CheckDims(m, n);
      const SimplexType type =
          type_name == "first" ? SimplexType::kFirst : SimplexType::kSecond;
      if (dim < 0) dim = type == SimplexType::kFirst ? n - m - 3 : m - 1;
      Simplex sx = NormalSimplex(type, dim, m, n);
      DivisibilityComplex cx = BuildComplex(m, n);
      Json vertices = Json::array();
      for (const Dcr& d : sx.vertices) vertices.push_back(d.ToString());
      Json elements = Json::array();
      auto stab = Stabilizer(sx, n);
      for (const Permutation& p : stab) elements.push_back(ToJson(p));
      Emit(Json{{"m", m},
                {"n", n},
                {"type", SimplexTypeName(type)},
                {"dimension", dim},
                {"simplex", std::move(vertices)},
                {"stabilizer", std::move(elements)},
                {"ordered_orbit_size", OrderedOrbitSize(cx, sx)}},
           out_path);
    } else if (*recover) {
      TameMap f = TameMapFromJson(ReadJsonFile(path));
      if (f.m() != m || f.n() != n) {
        throw InvalidConfiguration("map does not match the given m and n");
      }
      const Space space = ParseSpace(space_name);
      RecoveredMap rec = Recover(AsConfigMap(f), m, n, space, seed);
      Json tau_samples = Json::array();
      for (int k = 0; k < samples; ++k) {
        Configuration q = SampleGeneric(m, n, space, seed + 1000 + k);
        tau_samples.push_back(
            Json{{"config", ToJson(q)},
                 {"tau", ToJson(rec.TauAt(q).matrix())},
                 {"matches", ProjectivelyEqual(rec(q), EvalMap(f, q))}});
      }
      Emit(Json{{"rho", ToJson(rec.rho())},
                {"sigma", ToJson(rec.sigma())},
                {"samples", std::move(tau_samples)}},
           out_path);
    } else if (*selftest) {
      return SelfTest(m, n, seed);
    }
  } catch (const genconf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
