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

#ifndef GENCONF_COMPLEX_H_
#define GENCONF_COMPLEX_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "genconf/dcr.h"
#include "genconf/permutation.h"

namespace genconf {

// A set of pairwise dividing DCRs. Vertex order is significant for
// stabilizers; orbit and face computations treat it as unordered.
struct Simplex {
  std::vector<Dcr> vertices;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  // Same vertices, sorted.
  Simplex Unordered() const;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

enum class SimplexType { kFirst, kSecond };

const char* SimplexTypeName(SimplexType t);

// The divisibility complex on all DCRs for (m, n). Vertices are
// EnumerateDcrs(m, n); simplices are the cliques of the divisibility graph.
class DivisibilityComplex {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Dcr>& vertices() const { return vertices_; }
  // Sorted neighbour indices of vertex v.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  std::optional<int> IndexOf(const Dcr& d) const;
  bool Adjacent(int u, int v) const;
  std::size_t edge_count() const;
  // Pairs (u, v) with u < v.
  std::vector<std::pair<int, int>> Edges() const;

  // Image of each vertex index under sigma.
  std::vector<int> VertexAction(const Permutation& sigma) const;

 private:
  friend DivisibilityComplex BuildComplex(int m, int n);
  friend DivisibilityComplex BuildComplexBruteForce(int m, int n);

  int m_ = 0;
  int n_ = 0;
  std::vector<Dcr> vertices_;
  std::map<Dcr, int> index_;
  std::vector<std::vector<int>> adjacency_;
};

// Adjacency from DivisorCandidates; parallel over vertices (GENCONF_THREADS).
DivisibilityComplex BuildComplex(int m, int n);
// Adjacency from Divides on every pair. Quadratic; for cross-checks.
DivisibilityComplex BuildComplexBruteForce(int m, int n);

// All t-simplices as sorted vertex-index tuples, lexicographically ordered.
std::vector<std::vector<int>> CliqueIndices(const DivisibilityComplex& cx, int t);
std::vector<Simplex> Simplices(const DivisibilityComplex& cx, int t);

// Largest t with a t-simplex.
int Dimension(const DivisibilityComplex& cx);

// Normal simplices, in vertex order:
//   first:  {e_{(1..m-1);m,m+1,m+2,m+3+u}} for u = 0..t, needs t <= n-m-3;
//   second: {e_{(1..m minus s);s,m+1,m+2,m+3}} for s = m-t..m, needs t <= m-1.
// Throws InvalidDimension out of range.
Simplex NormalSimplex(SimplexType type, int t, int m, int n);

// For dimension >= 1: first type when all vertices share the essential
// support and have pairwise distinct supports, second type when all supports
// coincide. Throws InvalidDimension for a vertex and
// ClassificationContradiction for anything else.
SimplexType Classify(const Simplex& sx);

// Orbits of S(n) on the t-simplices. Each orbit is a list of sorted
// vertex-index tuples; orbits are ordered by their least member.
std::vector<std::vector<std::vector<int>>> Orbits(const DivisibilityComplex& cx,
                                                  int t);

// All sigma in S(n) with Permute(sigma, sources[i]) == targets[i] for every
// i, found by backtracking over index images. Results are sorted.
std::vector<Permutation> SolveIndexMaps(int n, const std::vector<Dcr>& sources,
                                        const std::vector<Dcr>& targets,
                                        std::size_t limit = SIZE_MAX);

// Pointwise stabilizer of an ordered simplex in S(n).
std::vector<Permutation> Stabilizer(const Simplex& sx, int n);
// Same, by testing every element of S(n).
std::vector<Permutation> StabilizerBruteForce(const Simplex& sx, int n);

// Size of the S(n)-orbit of an ordered simplex, by closure under the
// adjacent transpositions.
std::uint64_t OrderedOrbitSize(const DivisibilityComplex& cx, const Simplex& sx);

}  // namespace genconf

#endif  // GENCONF_COMPLEX_H_
