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

#include "genconf/complex.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "genconf/errors.h"
#include "parallel.h"

namespace genconf {

Simplex Simplex::Unordered() const {
  Simplex s = *this;
  std::sort(s.vertices.begin(), s.vertices.end());
  return s;
}

const char* SimplexTypeName(SimplexType t) {
  return t == SimplexType::kFirst ? "first" : "second";
}

std::optional<int> DivisibilityComplex::IndexOf(const Dcr& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DivisibilityComplex::Adjacent(int u, int v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t DivisibilityComplex::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> DivisibilityComplex::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> DivisibilityComplex::VertexAction(
    const Permutation& sigma) const {
  std::vector<int> image(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    image[v] = index_.at(Permute(sigma, vertices_[v]));
  }
  return image;
}

DivisibilityComplex BuildComplex(int m, int n) {
  DivisibilityComplex cx;
  cx.m_ = m;
  cx.n_ = n;
  cx.vertices_ = EnumerateDcrs(m, n);
  for (int v = 0; v < static_cast<int>(cx.vertices_.size()); ++v) {
    cx.index_.emplace(cx.vertices_[v], v);
  }
  cx.adjacency_.resize(cx.vertices_.size());
  internal::ParallelFor(cx.vertices_.size(), [&](std::size_t v) {
    std::vector<int> nb;
    for (const Dcr& d : DivisorCandidates(cx.vertices_[v], n)) {
      nb.push_back(cx.index_.at(d));
    }
    std::sort(nb.begin(), nb.end());
    cx.adjacency_[v] = std::move(nb);
  });
  return cx;
}

DivisibilityComplex BuildComplexBruteForce(int m, int n) {
  DivisibilityComplex cx;
  cx.m_ = m;
  cx.n_ = n;
  cx.vertices_ = EnumerateDcrs(m, n);
  for (int v = 0; v < static_cast<int>(cx.vertices_.size()); ++v) {
    cx.index_.emplace(cx.vertices_[v], v);
  }
  const int count = static_cast<int>(cx.vertices_.size());
  cx.adjacency_.resize(count);
  internal::ParallelFor(count, [&](std::size_t u) {
    for (int v = 0; v < count; ++v) {
      if (static_cast<int>(u) != v &&
          Divides(cx.vertices_[v], cx.vertices_[u])) {
        cx.adjacency_[u].push_back(v);
      }
    }
  });
  return cx;
}

namespace {

void ExtendCliques(const DivisibilityComplex& cx, int size,
                   std::vector<int>& current, const std::vector<int>& candidates,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int v = candidates[i];
    std::vector<int> next;
    const auto& nb = cx.neighbors(v);
    std::set_intersection(candidates.begin() + i + 1, candidates.end(),
                          nb.begin(), nb.end(), std::back_inserter(next));
    if (static_cast<int>(current.size() + 1 + next.size()) < size) continue;
    current.push_back(v);
    ExtendCliques(cx, size, current, next, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> CliqueIndices(const DivisibilityComplex& cx,
                                            int t) {
  std::vector<std::vector<int>> out;
  if (t < 0) return out;
  std::vector<int> all(cx.vertices().size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> current;
  ExtendCliques(cx, t + 1, current, all, out);
  return out;
}

std::vector<Simplex> Simplices(const DivisibilityComplex& cx, int t) {
  std::vector<Simplex> out;
  for (const auto& clique : CliqueIndices(cx, t)) {
    Simplex s;
    for (int v : clique) s.vertices.push_back(cx.vertices()[v]);
    out.push_back(std::move(s));
  }
  return out;
}

int Dimension(const DivisibilityComplex& cx) {
  if (cx.vertices().empty()) return -1;
  int t = 0;
  while (!CliqueIndices(cx, t + 1).empty()) ++t;
  return t;
}

Simplex NormalSimplex(SimplexType type, int t, int m, int n) {
  const int max_t = type == SimplexType::kFirst ? n - m - 3 : m - 1;
  if (t < 0 || t > max_t) {
    throw InvalidDimension("normal simplex of the " +
                           std::string(SimplexTypeName(type)) +
                           " type needs 0 <= t <= " + std::to_string(max_t));
  }
  auto ess_without = [m](int s) {
    std::vector<int> e;
    for (int i = 1; i <= m; ++i) {
      if (i != s) e.push_back(i);
    }
    return e;
  };
  Simplex sx;
  if (type == SimplexType::kFirst) {
    for (int u = 0; u <= t; ++u) {
      sx.vertices.push_back(MakeDcr(ess_without(m), m, m + 1, m + 2, m + 3 + u));
    }
  } else {
    for (int s = m - t; s <= m; ++s) {
      sx.vertices.push_back(MakeDcr(ess_without(s), s, m + 1, m + 2, m + 3));
    }
  }
  return sx;
}

SimplexType Classify(const Simplex& sx) {
  if (sx.dimension() < 1) {
    throw InvalidDimension("classification needs dimension >= 1");
  }
  const auto& vs = sx.vertices;
  bool same_support = true;
  bool same_ess = true;
  bool distinct_supports = true;
  std::set<std::vector<int>> supports;
  for (const Dcr& v : vs) {
    supports.insert(v.support());
    if (v.support() != vs[0].support()) same_support = false;
    if (v.essential_support() != vs[0].essential_support()) same_ess = false;
  }
  distinct_supports = supports.size() == vs.size();
  if (same_support) return SimplexType::kSecond;
  if (same_ess && distinct_supports) return SimplexType::kFirst;
  throw ClassificationContradiction("simplex of mixed shape");
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<std::vector<int>>> Orbits(const DivisibilityComplex& cx,
                                                  int t) {
  const auto cliques = CliqueIndices(cx, t);
  std::map<std::vector<int>, std::size_t> id;
  for (std::size_t i = 0; i < cliques.size(); ++i) id.emplace(cliques[i], i);

  std::vector<std::vector<int>> actions;
  for (const auto& g : AdjacentTranspositions(cx.n())) {
    actions.push_back(cx.VertexAction(g));
  }
  UnionFind uf(cliques.size());
  for (const auto& act : actions) {
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      std::vector<int> image;
      image.reserve(cliques[i].size());
      for (int v : cliques[i]) image.push_back(act[v]);
      std::sort(image.begin(), image.end());
      uf.Union(i, id.at(image));
    }
  }
  std::map<std::size_t, std::vector<std::vector<int>>> groups;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    groups[uf.Find(i)].push_back(cliques[i]);
  }
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

namespace {

enum Role : char { kOutside = 0, kEssential = 1, kQuad = 2 };

std::vector<char> Roles(const Dcr& d, int n) {
  std::vector<char> role(n + 1, kOutside);
  for (int i : d.essential_support()) role[i] = kEssential;
  for (int i : d.quad()) role[i] = kQuad;
  return role;
}

struct IndexMapSearch {
  int n;
  const std::vector<Dcr>& sources;
  const std::vector<Dcr>& targets;
  std::size_t limit;
  std::vector<std::vector<int>> domain;    // domain[x]: allowed images.
  std::vector<std::vector<int>> check_at;  // constraints completed at x.
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<Permutation> found;

  void Run(int x) {
    if (found.size() >= limit) return;
    if (x > n) {
      found.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
      return;
    }
    for (int y : domain[x]) {
      if (used[y]) continue;
      image[x] = y;
      used[y] = true;
      bool ok = true;
      for (int c : check_at[x]) {
        if (!Matches(c)) {
          ok = false;
          break;
        }
      }
      if (ok) Run(x + 1);
      used[y] = false;
      image[x] = 0;
      if (found.size() >= limit) return;
    }
  }

  bool Matches(int c) const {
    const Dcr& s = sources[c];
    std::vector<int> ess;
    for (int i : s.essential_support()) ess.push_back(image[i]);
    const auto [j, k, l, r] = s.quad();
    return MakeDcr(std::move(ess), image[j], image[k], image[l], image[r]) ==
           targets[c];
  }
};

}  // namespace

std::vector<Permutation> SolveIndexMaps(int n, const std::vector<Dcr>& sources,
                                        const std::vector<Dcr>& targets,
                                        std::size_t limit) {
  if (sources.size() != targets.size()) {
    throw std::invalid_argument("sources and targets differ in length");
  }
  IndexMapSearch search{n, sources, targets, limit, {}, {}, {}, {}, {}};
  search.domain.assign(n + 1, {});
  search.check_at.assign(n + 1, {});
  std::vector<std::vector<char>> src_roles;
  std::vector<std::vector<char>> dst_roles;
  for (std::size_t c = 0; c < sources.size(); ++c) {
    if (sources[c].max_index() > n || targets[c].max_index() > n ||
        sources[c].m() != targets[c].m()) {
      return {};
    }
    src_roles.push_back(Roles(sources[c], n));
    dst_roles.push_back(Roles(targets[c], n));
    search.check_at[sources[c].max_index()].push_back(static_cast<int>(c));
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      bool ok = true;
      for (std::size_t c = 0; c < sources.size() && ok; ++c) {
        ok = src_roles[c][x] == dst_roles[c][y];
      }
      if (ok) search.domain[x].push_back(y);
    }
  }
  search.image.assign(n + 1, 0);
  search.used.assign(n + 1, false);
  search.Run(1);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::vector<Permutation> Stabilizer(const Simplex& sx, int n) {
  return SolveIndexMaps(n, sx.vertices, sx.vertices);
}

std::vector<Permutation> StabilizerBruteForce(const Simplex& sx, int n) {
  std::vector<Permutation> out;
  for (const Permutation& p : AllPermutations(n)) {
    bool fixes = true;
    for (const Dcr& v : sx.vertices) {
      if (Permute(p, v) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(p);
  }
  return out;
}

std::uint64_t OrderedOrbitSize(const DivisibilityComplex& cx,
                               const Simplex& sx) {
  std::vector<int> start;
  for (const Dcr& v : sx.vertices) {
    auto idx = cx.IndexOf(v);
    if (!idx) throw InvalidDcr(v.ToString() + " is not a vertex of the complex");
    start.push_back(*idx);
  }
  std::vector<std::vector<int>> actions;
  for (const auto& g : AdjacentTranspositions(cx.n())) {
    actions.push_back(cx.VertexAction(g));
  }
  std::set<std::vector<int>> seen = {start};
  std::vector<std::vector<int>> frontier = {start};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& tuple : frontier) {
      for (const auto& act : actions) {
        std::vector<int> image;
        image.reserve(tuple.size());
        for (int v : tuple) image.push_back(act[v]);
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace genconf
