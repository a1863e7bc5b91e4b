#pragma once

// Seeded random complexes for the property suites.

#include <algorithm>
#include <random>
#include <vector>

#include "deltacx/complex.hpp"
#include "deltacx/constructions.hpp"

namespace corpus {

using deltacx::Cell;
using deltacx::RegularDeltaComplex;
using deltacx::VertexId;

// Random simplicial complex on at most max_vertices vertices with maximal
// simplices of dimension <= max_dim.
inline std::vector<std::vector<VertexId>> random_simplices(std::mt19937_64& rng,
                                                           int max_vertices, int max_dim) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> dim(0, std::min(max_dim, n - 1));
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
  std::vector<std::vector<VertexId>> out;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    const int d = dim(rng);
    std::vector<VertexId> s(all.begin(), all.begin() + d + 1);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

// Appends a second copy of some maximal cells of dimension >= 1. Each copy
// shares all proper faces with the original, as in the two-simplex sphere.
inline RegularDeltaComplex duplicate_maximal(const RegularDeltaComplex& k, std::mt19937_64& rng) {
  std::vector<Cell> cells(k.cells().begin(), k.cells().end());
  std::bernoulli_distribution pick(0.5);
  bool any = false;
  for (const Cell& c : k.cells()) {
    if (c.dim >= 1 && k.cofacets(c.id).empty() && pick(rng)) {
      cells.push_back(c);
      any = true;
    }
  }
  if (!any) return k;
  return RegularDeltaComplex(std::move(cells));
}

// Deterministic corpus: simplicial complexes and non-simplicial variants,
// dimension <= max_dim.
inline std::vector<RegularDeltaComplex> make(std::size_t count, std::uint64_t seed,
                                             int max_vertices = 7, int max_dim = 4) {
  std::mt19937_64 rng(seed);
  std::vector<RegularDeltaComplex> out;
  while (out.size() < count) {
    RegularDeltaComplex k =
        deltacx::simplicial_closure(random_simplices(rng, max_vertices, max_dim));
    if (out.size() % 3 == 2) k = duplicate_maximal(k, rng);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace corpus
