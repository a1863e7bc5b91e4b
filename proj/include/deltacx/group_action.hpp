#pragma once

#include <string>
#include <vector>

#include "deltacx/complex.hpp"
#include "deltacx/constructions.hpp"

namespace deltacx {

// A permutation of cell ids: perm[c] is the image of cell c.
using CellPermutation = std::vector<CellId>;

// Finite group acting on a complex, presented by generators. The group is
// enumerated by closure under composition and must not exceed order_bound.
struct GroupAction {
  std::string name;
  std::vector<CellPermutation> generators;
  std::size_t order_bound = 16;
};

struct ActionReport {
  bool ok = true;
  std::size_t order = 0;  // 0 when closure exceeded the bound
  std::vector<std::string> problems;
  std::vector<CellId> incompatible_cells;
};

ActionReport verify_action(const RegularDeltaComplex& complex,
                           const GroupAction& action);

// All group elements, identity first, in BFS order over the generators.
// Throws Error when the closure exceeds the order bound.
std::vector<CellPermutation> group_elements(const RegularDeltaComplex& complex,
                                            const GroupAction& action);

CellPermutation compose(const CellPermutation& outer, const CellPermutation& inner);
CellPermutation identity_permutation(std::size_t n);

// Action induced on a barycentric subdivision (permuting flags).
GroupAction subdivide_action(const Subdivision& subdivision,
                             const GroupAction& action);

// Action on a join induced from actions on its two factors (one generator
// pair per generator; missing generators act trivially).
GroupAction join_action(const JoinResult& joined, const GroupAction& on_a,
                        const GroupAction& on_b, std::size_t a_size,
                        std::size_t b_size);

class QuotientError : public Error {
 public:
  using Error::Error;
};

// Orbit complex. Subdivides barycentrically (at most twice) until every
// group element maps each cell's faces position-for-position and distinct
// faces of a cell lie in distinct orbits, which makes the orbit complex a
// regular Delta-complex homeomorphic to the quotient space.
struct Quotient {
  RegularDeltaComplex complex;
  CellMap projection;        // from `source` onto `complex`
  RegularDeltaComplex source;  // input after the applied subdivisions
  int subdivisions = 0;
  std::vector<CellId> source_to_input;  // carrier of each source cell
};

Quotient quotient(const RegularDeltaComplex& complex, const GroupAction& action);

// Cells fixed by every group element.
Subcomplex fixed_subcomplex(const RegularDeltaComplex& complex,
                            const GroupAction& action);

}  // namespace deltacx
