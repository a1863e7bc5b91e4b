#include "deltacx/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace deltacx {

RegularDeltaComplex::RegularDeltaComplex(std::vector<Cell> cells)
    : cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].id = static_cast<CellId>(i);
    dim_ = std::max(dim_, cells_[i].dim);
  }
  by_dim_.resize(static_cast<std::size_t>(dim_ + 1));
  index_in_dim_.resize(cells_.size());
  cofacets_.resize(cells_.size());
  for (const Cell& c : cells_) {
    if (c.dim < 0) continue;
    auto& bucket = by_dim_[static_cast<std::size_t>(c.dim)];
    index_in_dim_[c.id] = bucket.size();
    bucket.push_back(c.id);
    for (CellId f : c.facets) {
      if (f < cells_.size()) cofacets_[f].push_back(c.id);
    }
    if (c.dim == 0 && c.vertices.size() == 1) {
      vertex_index_.emplace_back(c.vertices.front(), c.id);
    }
  }
  for (auto& up : cofacets_) {
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
  }
  std::sort(vertex_index_.begin(), vertex_index_.end());
}

const Cell& RegularDeltaComplex::cell(CellId id) const {
  if (id >= cells_.size()) throw UnknownCellError(id);
  return cells_[id];
}

std::span<const CellId> RegularDeltaComplex::cells_of_dim(int d) const {
  if (d < 0 || d > dim_) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

std::span<const CellId> RegularDeltaComplex::cofacets(CellId id) const {
  if (id >= cells_.size()) throw UnknownCellError(id);
  return cofacets_[id];
}

std::vector<std::size_t> RegularDeltaComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(by_dim_.size());
  for (const auto& bucket : by_dim_) f.push_back(bucket.size());
  return f;
}

std::vector<VertexId> RegularDeltaComplex::vertex_labels() const {
  std::vector<VertexId> out;
  out.reserve(vertex_index_.size());
  for (const auto& [label, id] : vertex_index_) out.push_back(label);
  return out;
}

CellId RegularDeltaComplex::vertex_cell(VertexId v) const {
  auto it = std::lower_bound(
      vertex_index_.begin(), vertex_index_.end(), v,
      [](const auto& entry, VertexId key) { return entry.first < key; });
  if (it == vertex_index_.end() || it->first != v) return kNoCell;
  return it->second;
}

bool CellMap::is_total() const {
  return std::none_of(assignment.begin(), assignment.end(),
                      [](CellId c) { return c == kNoCell; });
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kShape: return "shape";
    case ViolationKind::kDanglingFacet: return "dangling-facet";
    case ViolationKind::kFacetDimension: return "facet-dimension";
    case ViolationKind::kFacetVertices: return "facet-vertices";
    case ViolationKind::kFacetIdentity: return "facet-identity";
    case ViolationKind::kRegularity: return "regularity";
    case ViolationKind::kDuplicateVertex: return "duplicate-vertex";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream out;
  out << violations.size() << " violation(s):";
  for (const Violation& v : violations) {
    out << "\n  cell " << v.cell << " [" << to_string(v.kind) << "] "
        << v.detail;
  }
  return out.str();
}

namespace {

std::vector<VertexId> drop_position(const std::vector<VertexId>& v,
                                    std::size_t i) {
  std::vector<VertexId> out;
  out.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != i) out.push_back(v[k]);
  }
  return out;
}

// Local checks that only look at a cell and its immediate facets.
bool check_local(const RegularDeltaComplex& k, const Cell& c,
                 std::vector<Violation>& out) {
  const auto n = static_cast<std::size_t>(c.dim) + 1;
  if (c.dim < 0 || c.vertices.size() != n ||
      c.facets.size() != (c.dim == 0 ? 0 : n)) {
    out.push_back({ViolationKind::kShape, c.id,
                   "vertex/facet tuple length does not match dimension"});
    return false;
  }
  bool ok = true;
  if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
      std::adjacent_find(c.vertices.begin(), c.vertices.end()) !=
          c.vertices.end()) {
    out.push_back({ViolationKind::kShape, c.id,
                   "vertex tuple is not strictly increasing"});
    ok = false;
    // keep going: a repeated facet pointer is reported as a regularity issue
  }
  for (CellId f : c.facets) {
    if (!k.contains(f)) {
      out.push_back({ViolationKind::kDanglingFacet, c.id,
                     "facet " + std::to_string(f) + " does not exist"});
      return false;
    }
  }
  {
    std::vector<CellId> sorted = c.facets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back({ViolationKind::kRegularity, c.id,
                     "two facet pointers reference the same cell"});
      ok = false;
    }
  }
  if (!ok) return false;
  for (std::size_t i = 0; i < c.facets.size(); ++i) {
    const Cell& f = k.cell(c.facets[i]);
    if (f.dim != c.dim - 1) {
      out.push_back({ViolationKind::kFacetDimension, c.id,
                     "facet " + std::to_string(i) + " has dimension " +
                         std::to_string(f.dim)});
      ok = false;
    } else if (f.vertices != drop_position(c.vertices, i)) {
      out.push_back({ViolationKind::kFacetVertices, c.id,
                     "facet " + std::to_string(i) +
                         " does not omit exactly vertex position " +
                         std::to_string(i)});
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate(const RegularDeltaComplex& complex) {
  ValidationReport report;
  std::vector<bool> locally_ok(complex.size(), false);
  for (const Cell& c : complex.cells()) {
    locally_ok[c.id] = check_local(complex, c, report.violations);
  }
  {
    std::vector<std::pair<VertexId, CellId>> labels;
    for (CellId v : complex.cells_of_dim(0)) {
      const Cell& c = complex.cell(v);
      if (c.vertices.size() == 1) labels.emplace_back(c.vertices[0], v);
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i].first == labels[i - 1].first) {
        report.violations.push_back(
            {ViolationKind::kDuplicateVertex, labels[i].second,
             "vertex label " + std::to_string(labels[i].first) +
                 " carried by two 0-cells"});
      }
    }
  }

  for (const Cell& c : complex.cells()) {
    if (!locally_ok[c.id] || c.dim < 1) continue;
    bool facets_ok = std::all_of(c.facets.begin(), c.facets.end(),
                                 [&](CellId f) { return locally_ok[f]; });
    if (!facets_ok) continue;
    bool identity_ok = true;
    if (c.dim >= 2) {
      for (std::size_t j = 1; j < c.facets.size() && identity_ok; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          CellId lhs = complex.cell(c.facets[j]).facets[i];
          CellId rhs = complex.cell(c.facets[i]).facets[j - 1];
          if (lhs != rhs) {
            report.violations.push_back(
                {ViolationKind::kFacetIdentity, c.id,
                 "facet " + std::to_string(i) + " of facet " +
                     std::to_string(j) + " differs from facet " +
                     std::to_string(j - 1) + " of facet " +
                     std::to_string(i)});
            identity_ok = false;
            break;
          }
        }
      }
    }
    if (!identity_ok) continue;

    // Regularity: distinct vertex subsets reach distinct cells.
    const std::size_t n = c.vertices.size();
    if (n > 20) {
      report.violations.push_back(
          {ViolationKind::kShape, c.id, "cell dimension too large to check"});
      continue;
    }
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<CellId> face(full + 1, kNoCell);
    face[full] = c.id;
    std::unordered_set<CellId> seen;
    seen.insert(c.id);
    bool regular = true;
    for (std::uint32_t mask = full; mask-- > 1 && regular;) {
      const int missing = std::countr_zero(~mask & full);
      const std::uint32_t parent = mask | (1u << missing);
      const CellId up = face[parent];
      const std::uint32_t below = parent & ((1u << missing) - 1u);
      const auto pos = static_cast<std::size_t>(std::popcount(below));
      const Cell& pc = complex.cell(up);
      if (pc.dim == 0 || pos >= pc.facets.size()) {
        regular = false;
        break;
      }
      face[mask] = pc.facets[pos];
      if (!seen.insert(face[mask]).second) regular = false;
    }
    if (!regular) {
      report.violations.push_back(
          {ViolationKind::kRegularity, c.id,
           "two distinct faces of the cell are the same cell"});
    }
  }
  return report;
}

void require_valid(const RegularDeltaComplex& complex) {
  ValidationReport report = validate(complex);
  if (!report.ok()) throw Error("invalid complex: " + report.summary());
}

CellId face_spanned(const RegularDeltaComplex& complex, CellId cell,
                    std::span<const VertexId> labels) {
  CellId current = cell;
  while (true) {
    const Cell& c = complex.cell(current);
    if (c.vertices.size() == labels.size()) {
      if (!std::equal(c.vertices.begin(), c.vertices.end(), labels.begin(),
                      labels.end())) {
        throw Error("vertex set is not a face of cell " +
                    std::to_string(cell));
      }
      return current;
    }
    // drop the highest vertex not in the requested subset
    std::size_t drop = c.vertices.size();
    for (std::size_t i = c.vertices.size(); i-- > 0;) {
      if (!std::binary_search(labels.begin(), labels.end(), c.vertices[i])) {
        drop = i;
        break;
      }
    }
    if (drop == c.vertices.size() || c.dim == 0) {
      throw Error("vertex set is not a face of cell " + std::to_string(cell));
    }
    current = c.facets[drop];
  }
}

std::vector<CellId> closure(const RegularDeltaComplex& complex, CellId cell) {
  std::vector<char> seen(complex.size(), 0);
  std::vector<CellId> stack{cell};
  std::vector<CellId> out;
  complex.cell(cell);
  seen[cell] = 1;
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    out.push_back(c);
    for (CellId f : complex.cell(c).facets) {
      if (!seen[f]) {
        seen[f] = 1;
        stack.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FacetCompatibility check_facet_compatible(const CellMap& map) {
  FacetCompatibility result;
  const auto& src = *map.source;
  const auto& dst = *map.target;
  if (map.assignment.size() != src.size()) {
    result.ok = false;
    return result;
  }
  for (const Cell& c : src.cells()) {
    const CellId image = map.assignment[c.id];
    bool good = image != kNoCell && dst.contains(image);
    if (good) {
      const auto faces = closure(dst, image);
      for (CellId f : c.facets) {
        const CellId fi = map.assignment[f];
        if (fi == kNoCell || !std::binary_search(faces.begin(), faces.end(), fi)) {
          good = false;
          break;
        }
      }
    }
    if (!good) {
      result.ok = false;
      result.offending.push_back(c.id);
    }
  }
  return result;
}

}  // namespace deltacx
