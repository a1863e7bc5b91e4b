#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "deltacx/complex.hpp"
#include "deltacx/constructions.hpp"

namespace deltacx {

using Rational = boost::rational<std::int64_t>;

enum class VertexLabel { kHorizontal, kVertical };

std::string to_string(VertexLabel label);

// Dual complex with each vertex marked as a horizontal or vertical divisor.
struct LabeledComplex {
  RegularDeltaComplex complex;
  std::map<VertexId, VertexLabel> labels;
};

// Throws Error unless every vertex carries a label.
void require_labeled(const LabeledComplex& lc);

// Full subcomplex on the vertices with the given label; a cell belongs to it
// iff all of its vertices do.
Subcomplex labeled_subcomplex(const LabeledComplex& lc, VertexLabel label);
Subcomplex horizontal_subcomplex(const LabeledComplex& lc);
Subcomplex vertical_subcomplex(const LabeledComplex& lc);

struct ProductTypeWitness {
  bool product_type = false;
  bool is_join = false;  // complex = D^vert * D^hor, fixing both parts
  bool fiber_matches = false;
  // join(D^vert, D^hor) cell id -> complex cell id, when is_join
  std::vector<CellId> join_to_complex;
  // D^hor cell -> fiber cell, when fiber_matches
  std::vector<CellId> horizontal_to_fiber;
  std::string reason;
};

ProductTypeWitness is_combinatorial_product_type(const LabeledComplex& lc,
                                                 const RegularDeltaComplex& fiber);

// r^*: generic-fibre dual complex -> D^hor of the target.
struct RestrictionMapData {
  CellMap map;  // target is the labelled complex's cells
  std::map<VertexId, VertexLabel> target_labels;
};

struct RestrictionReport {
  bool into_horizontal = true;
  bool injective = true;
  bool surjective = true;  // onto D^hor
  // iso_on_skeleton[k]: bijective onto the horizontal k-skeleton, k < r
  std::vector<bool> iso_on_skeleton;
  // target cells of dimension r-1 hit by exactly two source cells
  std::vector<CellId> two_to_one;
  bool degenerate_context = false;
};

class MapError : public Error {
 public:
  using Error::Error;
};

// Throws MapError if the assignment is not facet-compatible. When n is given
// and r == n the report is flagged as a degenerate context.
RestrictionReport check_restriction_map(const RestrictionMapData& data, int r,
                                        std::optional<int> n = std::nullopt);

struct DiscrepancyRecord {
  Rational discrepancy;   // a(Y, Delta, E) >= -1
  std::int64_t multiplicity = 1;  // mult_E(pi^* D) >= 1
};

// max over records of 1 - (1 + a) / mult. Throws std::invalid_argument on an
// empty list or a record violating a >= -1, mult >= 1.
Rational boundary_coefficient(std::span<const DiscrepancyRecord> records);

enum class CoverKind { kDegreeOne, kDegreeTwo, kNonCover };

std::string to_string(CoverKind kind);

struct CoverReport {
  CoverKind kind = CoverKind::kNonCover;
  std::size_t max_fiber = 0;
  bool fibers_at_most_two = true;
  bool links_bijective = true;
  std::vector<CellId> bad_fibers;     // target cells with fiber size != degree
  std::vector<CellId> link_failures;  // source cells whose cofaces do not biject
  std::string reason;
};

CoverReport check_cell_cover(const CellMap& map);

}  // namespace deltacx
