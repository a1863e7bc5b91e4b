#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deltacx/complex.hpp"

namespace deltacx {

// Simplicial complex generated by the given simplices (vertex label sets,
// any order). Cells are ordered by dimension, then lexicographically.
RegularDeltaComplex simplicial_closure(
    const std::vector<std::vector<VertexId>>& simplices);

// sigma^m on vertices 0..m.
RegularDeltaComplex standard_simplex(int m);
// All proper faces of sigma^m; m >= 1.
RegularDeltaComplex boundary_simplex(int m);
// Two n-cells on vertices 0..n sharing every proper face; n >= 1.
RegularDeltaComplex nonsimplicial_sphere(int n);

struct Subcomplex {
  RegularDeltaComplex complex;
  std::vector<CellId> to_parent;
};

// Subcomplex on the kept cells, renumbered in parent order. `keep` must be
// closed under taking facets.
Subcomplex restrict_to(const RegularDeltaComplex& complex,
                       const std::vector<bool>& keep);

// Cells of dimension <= i.
RegularDeltaComplex skeleton(const RegularDeltaComplex& complex, int i);

// Cells having `cell` as a face, including `cell`.
std::vector<CellId> star(const RegularDeltaComplex& complex, CellId cell);
Subcomplex closed_star(const RegularDeltaComplex& complex, CellId cell);

// Link built from the cofaces of `cell`: one link cell per proper coface d,
// spanned by the vertices of d not in `cell`. On simplicial complexes this
// is the usual closed-star-minus-star subcomplex; on non-simplicial ones it
// keeps cofaces that share a vertex set apart. Link vertices are relabelled
// 0..k-1; to_coface maps each link cell to its coface in the input.
struct Link {
  RegularDeltaComplex complex;
  std::vector<CellId> to_coface;
};
Link link_with_cofaces(const RegularDeltaComplex& complex, CellId cell);
RegularDeltaComplex link(const RegularDeltaComplex& complex, CellId cell);

// Join; a's labels are kept and b's are shifted past them. parts[c] holds
// the (a-cell, b-cell) pair a join cell is built from, kNoCell for "absent".
struct JoinResult {
  RegularDeltaComplex complex;
  std::vector<std::pair<CellId, CellId>> parts;
};
JoinResult join_with_parts(const RegularDeltaComplex& a,
                           const RegularDeltaComplex& b);
RegularDeltaComplex join(const RegularDeltaComplex& a,
                         const RegularDeltaComplex& b);
RegularDeltaComplex cone(const RegularDeltaComplex& complex);
RegularDeltaComplex suspension(const RegularDeltaComplex& complex);

// Partial map a -> b (kNoCell where unmatched) pairing each cell of a in
// `domain` with the cell of b carrying the same vertex tuple.
CellMap match_by_vertices(const ComplexPtr& a, const ComplexPtr& b,
                          const std::vector<bool>& domain);

// Pushout of a and b along `matching` (source a, target b, partial). The
// matched cells must form isomorphic subcomplexes; b's unmatched vertices
// receive fresh labels above a's. Throws GlueError when the matching is not
// an isomorphism or the result is not regular.
class GlueError : public Error {
 public:
  using Error::Error;
};
RegularDeltaComplex glue_along_boundary(const RegularDeltaComplex& a,
                                        const RegularDeltaComplex& b,
                                        const CellMap& matching);

// Barycentric subdivision. Vertices are the input cells, labelled by their
// rank in (dim, id) order; cells are strict chains of faces. carrier maps each
// chain to its largest cell; flags lists the chain for each output cell.
struct Subdivision {
  RegularDeltaComplex complex;
  CellMap carrier;
  std::vector<std::vector<CellId>> flags;
};
Subdivision barycentric_subdivision(const RegularDeltaComplex& complex);

bool is_simplicial(const RegularDeltaComplex& complex);

// Facet-respecting cell bijection a -> b, if one exists. Backtracking with
// invariant pruning; meant for complexes of at most a few thousand cells.
std::optional<std::vector<CellId>> is_isomorphic(const RegularDeltaComplex& a,
                                                 const RegularDeltaComplex& b);

// Checks that `bijection` is a facet-respecting isomorphism a -> b.
bool verify_isomorphism(const RegularDeltaComplex& a,
                        const RegularDeltaComplex& b,
                        const std::vector<CellId>& bijection);

}  // namespace deltacx
