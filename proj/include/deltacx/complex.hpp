#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltacx {

using VertexId = std::uint32_t;
using CellId = std::uint32_t;

inline constexpr CellId kNoCell = std::numeric_limits<CellId>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCellError : public Error {
 public:
  explicit UnknownCellError(CellId id)
      : Error("unknown cell id " + std::to_string(id)) {}
};

// One cell of a regular Delta-complex. facets[i] is the face spanned by
// omitting vertices[i]; vertex tuples are strictly increasing.
struct Cell {
  CellId id = 0;
  int dim = 0;
  std::vector<VertexId> vertices;
  std::vector<CellId> facets;

  bool operator==(const Cell&) const = default;
};

// Immutable face poset of a regular Delta-complex. Cell ids are dense and
// equal to the cell's position. Construction does not validate; call
// validate() before handing a complex to any other operation.
class RegularDeltaComplex {
 public:
  RegularDeltaComplex() = default;
  explicit RegularDeltaComplex(std::vector<Cell> cells);

  int dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  const Cell& cell(CellId id) const;
  bool contains(CellId id) const { return id < cells_.size(); }
  std::span<const Cell> cells() const { return cells_; }

  // Cells of dimension d in id order; empty span outside [0, dim].
  std::span<const CellId> cells_of_dim(int d) const;
  // Position of a cell within cells_of_dim(cell.dim).
  std::size_t index_in_dim(CellId id) const { return index_in_dim_.at(id); }
  // Cells having `id` as a facet.
  std::span<const CellId> cofacets(CellId id) const;

  std::vector<std::size_t> f_vector() const;
  // Sorted labels of the 0-cells.
  std::vector<VertexId> vertex_labels() const;
  // The 0-cell carrying a vertex label, or kNoCell.
  CellId vertex_cell(VertexId v) const;

  bool operator==(const RegularDeltaComplex& other) const {
    return cells_ == other.cells_;
  }

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<CellId>> by_dim_;
  std::vector<std::size_t> index_in_dim_;
  std::vector<std::vector<CellId>> cofacets_;
  std::vector<std::pair<VertexId, CellId>> vertex_index_;
  int dim_ = -1;
};

using ComplexPtr = std::shared_ptr<const RegularDeltaComplex>;

inline ComplexPtr share(RegularDeltaComplex complex) {
  return std::make_shared<const RegularDeltaComplex>(std::move(complex));
}

// Cell-level map between two complexes. assignment is indexed by source
// cell id; kNoCell marks an unmapped cell (partial maps are used for glue
// matchings).
struct CellMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<CellId> assignment;

  CellId operator()(CellId c) const { return assignment.at(c); }
  bool is_total() const;
};

enum class ViolationKind {
  kShape,
  kDanglingFacet,
  kFacetDimension,
  kFacetVertices,
  kFacetIdentity,
  kRegularity,
  kDuplicateVertex,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  CellId cell;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

ValidationReport validate(const RegularDeltaComplex& complex);

// Throws Error carrying the report summary when validation fails.
void require_valid(const RegularDeltaComplex& complex);

// Face of `cell` spanned by the given vertex labels (a subset of its vertex
// tuple), reached by iterated facet pointers.
CellId face_spanned(const RegularDeltaComplex& complex, CellId cell,
                    std::span<const VertexId> labels);

// All faces of a cell including itself, in increasing id order.
std::vector<CellId> closure(const RegularDeltaComplex& complex, CellId cell);

// Whether the map sends every facet of a mapped cell to a face of the image.
// Unmapped cells count as incompatible.
struct FacetCompatibility {
  bool ok = true;
  std::vector<CellId> offending;
};
FacetCompatibility check_facet_compatible(const CellMap& map);

}  // namespace deltacx
