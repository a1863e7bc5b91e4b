#include "deltacx/mfs_combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltacx {

std::string to_string(VertexLabel label) {
  return label == VertexLabel::kHorizontal ? "horizontal" : "vertical";
}

std::string to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::kDegreeOne: return "degree-1 cover";
    case CoverKind::kDegreeTwo: return "degree-2 cover";
    case CoverKind::kNonCover: return "non-cover";
  }
  return "unknown";
}

void require_labeled(const LabeledComplex& lc) {
  for (VertexId v : lc.complex.vertex_labels()) {
    if (!lc.labels.contains(v)) {
      throw Error("vertex " + std::to_string(v) + " has no horizontal/vertical label");
    }
  }
}

Subcomplex labeled_subcomplex(const LabeledComplex& lc, VertexLabel label) {
  require_labeled(lc);
  std::vector<bool> keep(lc.complex.size());
  for (const Cell& c : lc.complex.cells()) {
    keep[c.id] = std::all_of(c.vertices.begin(), c.vertices.end(),
                             [&](VertexId v) { return lc.labels.at(v) == label; });
  }
  return restrict_to(lc.complex, keep);
}

Subcomplex horizontal_subcomplex(const LabeledComplex& lc) {
  return labeled_subcomplex(lc, VertexLabel::kHorizontal);
}

Subcomplex vertical_subcomplex(const LabeledComplex& lc) {
  return labeled_subcomplex(lc, VertexLabel::kVertical);
}

ProductTypeWitness is_combinatorial_product_type(const LabeledComplex& lc,
                                                 const RegularDeltaComplex& fiber) {
  ProductTypeWitness w;
  const Subcomplex vert = vertical_subcomplex(lc);
  const Subcomplex hor = horizontal_subcomplex(lc);
  std::vector<CellId> in_vert(lc.complex.size(), kNoCell);
  std::vector<CellId> in_hor(lc.complex.size(), kNoCell);
  for (std::size_t i = 0; i < vert.to_parent.size(); ++i) {
    in_vert[vert.to_parent[i]] = static_cast<CellId>(i);
  }
  for (std::size_t i = 0; i < hor.to_parent.size(); ++i) {
    in_hor[hor.to_parent[i]] = static_cast<CellId>(i);
  }

  const JoinResult joined = join_with_parts(vert.complex, hor.complex);
  std::map<std::pair<CellId, CellId>, CellId> by_parts;
  for (std::size_t c = 0; c < joined.parts.size(); ++c) {
    by_parts.emplace(joined.parts[c], static_cast<CellId>(c));
  }
  std::vector<CellId> join_to_complex(joined.complex.size(), kNoCell);
  bool join_ok = lc.complex.size() == joined.complex.size();
  for (const Cell& c : lc.complex.cells()) {
    if (!join_ok) break;
    std::vector<VertexId> vs, hs;
    for (VertexId v : c.vertices) {
      (lc.labels.at(v) == VertexLabel::kVertical ? vs : hs).push_back(v);
    }
    const CellId s = vs.empty() ? kNoCell : in_vert[face_spanned(lc.complex, c.id, vs)];
    const CellId t = hs.empty() ? kNoCell : in_hor[face_spanned(lc.complex, c.id, hs)];
    auto it = by_parts.find({s, t});
    if (it == by_parts.end() || join_to_complex[it->second] != kNoCell) {
      join_ok = false;
      break;
    }
    join_to_complex[it->second] = c.id;
  }
  if (join_ok) join_ok = verify_isomorphism(joined.complex, lc.complex, join_to_complex);
  w.is_join = join_ok;
  if (join_ok) {
    w.join_to_complex = std::move(join_to_complex);
  } else {
    w.reason = "complex is not the join of its vertical and horizontal parts";
  }

  if (auto iso = is_isomorphic(hor.complex, fiber)) {
    w.fiber_matches = true;
    w.horizontal_to_fiber = std::move(*iso);
  } else if (w.reason.empty()) {
    w.reason = "horizontal part is not isomorphic to the fibre complex";
  }
  w.product_type = w.is_join && w.fiber_matches;
  return w;
}

RestrictionReport check_restriction_map(const RestrictionMapData& data, int r,
                                        std::optional<int> n) {
  const CellMap& map = data.map;
  const FacetCompatibility compat = check_facet_compatible(map);
  if (!compat.ok) {
    std::string which;
    for (std::size_t i = 0; i < compat.offending.size() && i < 5; ++i) {
      which += (i ? ", " : "") + std::to_string(compat.offending[i]);
    }
    throw MapError("assignment is not facet-compatible (source cells: " + which + ")");
  }
  const RegularDeltaComplex& src = *map.source;
  const RegularDeltaComplex& dst = *map.target;
  LabeledComplex target{dst, data.target_labels};
  const Subcomplex hor = horizontal_subcomplex(target);
  std::vector<char> horizontal(dst.size(), 0);
  for (CellId p : hor.to_parent) horizontal[p] = 1;

  RestrictionReport report;
  report.degenerate_context = n && r == *n;
  std::vector<std::size_t> fiber(dst.size(), 0);
  for (const Cell& c : src.cells()) {
    const CellId image = map.assignment[c.id];
    if (!horizontal[image]) report.into_horizontal = false;
    ++fiber[image];
  }
  for (CellId p : hor.to_parent) {
    if (fiber[p] == 0) report.surjective = false;
    if (fiber[p] > 1) report.injective = false;
    if (dst.cell(p).dim == r - 1 && fiber[p] == 2) report.two_to_one.push_back(p);
  }
  for (int k = 0; k < r; ++k) {
    std::vector<std::size_t> hits(dst.size(), 0);
    bool ok = true;
    for (const Cell& c : src.cells()) {
      if (c.dim > k) continue;
      const CellId image = map.assignment[c.id];
      if (dst.cell(image).dim != c.dim || !horizontal[image]) ok = false;
      ++hits[image];
    }
    for (CellId p : hor.to_parent) {
      if (dst.cell(p).dim <= k && hits[p] != 1) ok = false;
    }
    report.iso_on_skeleton.push_back(ok);
  }
  return report;
}

Rational boundary_coefficient(std::span<const DiscrepancyRecord> records) {
  if (records.empty()) {
    throw std::invalid_argument("boundary_coefficient needs at least one record");
  }
  std::optional<Rational> best;
  for (const DiscrepancyRecord& rec : records) {
    if (rec.discrepancy < Rational(-1)) {
      throw std::invalid_argument("discrepancy below -1 (not log canonical)");
    }
    if (rec.multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
    const Rational value = Rational(1) - (Rational(1) + rec.discrepancy) / rec.multiplicity;
    if (!best || value > *best) best = value;
  }
  return *best;
}

CoverReport check_cell_cover(const CellMap& map) {
  CoverReport report;
  const RegularDeltaComplex& src = *map.source;
  const RegularDeltaComplex& dst = *map.target;
  if (map.assignment.size() != src.size() || !map.is_total()) {
    report.reason = "map is not total";
    return report;
  }
  if (!check_facet_compatible(map).ok) {
    report.reason = "map is not facet-compatible";
    return report;
  }
  std::vector<std::size_t> fiber(dst.size(), 0);
  for (const Cell& c : src.cells()) {
    if (dst.cell(map.assignment[c.id]).dim != c.dim) {
      report.reason = "map does not preserve dimension";
      return report;
    }
    ++fiber[map.assignment[c.id]];
  }
  report.max_fiber = dst.empty() ? 0 : *std::max_element(fiber.begin(), fiber.end());
  report.fibers_at_most_two = report.max_fiber <= 2;
  for (const Cell& t : dst.cells()) {
    if (fiber[t.id] != report.max_fiber) report.bad_fibers.push_back(t.id);
  }
  for (const Cell& c : src.cells()) {
    std::vector<CellId> up = star(src, c.id);
    std::vector<CellId> images;
    for (CellId d : up) {
      if (d != c.id) images.push_back(map.assignment[d]);
    }
    std::sort(images.begin(), images.end());
    std::vector<CellId> expected = star(dst, map.assignment[c.id]);
    expected.erase(std::find(expected.begin(), expected.end(), map.assignment[c.id]));
    if (images != expected) report.link_failures.push_back(c.id);
  }
  report.links_bijective = report.link_failures.empty();
  if (!report.bad_fibers.empty()) {
    report.reason = "fibre sizes are not constant";
  } else if (!report.fibers_at_most_two) {
    report.reason = "fibres larger than two";
  } else if (!report.links_bijective) {
    report.reason = "cofaces do not map bijectively";
  } else if (report.max_fiber == 1) {
    report.kind = CoverKind::kDegreeOne;
  } else if (report.max_fiber == 2) {
    report.kind = CoverKind::kDegreeTwo;
  }
  return report;
}

}  // namespace deltacx
