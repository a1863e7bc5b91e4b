#include "deltacx/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace deltacx {

namespace {

struct BySizeThenLex {
  bool operator()(const std::vector<VertexId>& x,
                  const std::vector<VertexId>& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// Builds a simplicial complex from a face-closed family of vertex sets.
RegularDeltaComplex from_face_family(
    const std::set<std::vector<VertexId>, BySizeThenLex>& faces) {
  std::map<std::vector<VertexId>, CellId> ids;
  std::vector<Cell> cells;
  cells.reserve(faces.size());
  for (const auto& f : faces) {
    Cell c;
    c.id = static_cast<CellId>(cells.size());
    c.dim = static_cast<int>(f.size()) - 1;
    c.vertices = f;
    if (c.dim > 0) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<VertexId> sub;
        sub.reserve(f.size() - 1);
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (k != i) sub.push_back(f[k]);
        }
        c.facets.push_back(ids.at(sub));
      }
    }
    ids.emplace(f, c.id);
    cells.push_back(std::move(c));
  }
  return RegularDeltaComplex(std::move(cells));
}

}  // namespace

RegularDeltaComplex simplicial_closure(
    const std::vector<std::vector<VertexId>>& simplices) {
  std::set<std::vector<VertexId>, BySizeThenLex> faces;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 24) throw Error("simplex too large");
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> sub;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) sub.push_back(s[k]);
      }
      faces.insert(std::move(sub));
    }
  }
  return from_face_family(faces);
}

RegularDeltaComplex standard_simplex(int m) {
  if (m < 0) throw Error("standard_simplex: dimension must be >= 0");
  std::vector<VertexId> all(static_cast<std::size_t>(m) + 1);
  std::iota(all.begin(), all.end(), VertexId{0});
  return simplicial_closure({all});
}

RegularDeltaComplex boundary_simplex(int m) {
  if (m < 1) throw Error("boundary_simplex: dimension must be >= 1");
  std::vector<std::vector<VertexId>> facets;
  for (int skip = 0; skip <= m; ++skip) {
    std::vector<VertexId> f;
    for (int v = 0; v <= m; ++v) {
      if (v != skip) f.push_back(static_cast<VertexId>(v));
    }
    facets.push_back(std::move(f));
  }
  return simplicial_closure(facets);
}

RegularDeltaComplex nonsimplicial_sphere(int n) {
  if (n < 1) throw Error("nonsimplicial_sphere: dimension must be >= 1");
  RegularDeltaComplex shell = boundary_simplex(n);
  std::vector<Cell> cells(shell.cells().begin(), shell.cells().end());
  Cell top;
  top.dim = n;
  for (int v = 0; v <= n; ++v) top.vertices.push_back(static_cast<VertexId>(v));
  for (CellId f : shell.cells_of_dim(n - 1)) {
    // facet i omits vertex i; boundary_simplex lists them lexicographically,
    // i.e. in reverse order of the omitted vertex
    top.facets.insert(top.facets.begin(), f);
  }
  cells.push_back(top);
  cells.push_back(top);
  return RegularDeltaComplex(std::move(cells));
}

Subcomplex restrict_to(const RegularDeltaComplex& complex,
                       const std::vector<bool>& keep) {
  Subcomplex out;
  std::vector<CellId> remap(complex.size(), kNoCell);
  for (const Cell& c : complex.cells()) {
    if (keep.at(c.id)) {
      remap[c.id] = static_cast<CellId>(out.to_parent.size());
      out.to_parent.push_back(c.id);
    }
  }
  std::vector<Cell> cells;
  cells.reserve(out.to_parent.size());
  for (CellId parent : out.to_parent) {
    Cell c = complex.cell(parent);
    for (CellId& f : c.facets) {
      f = remap[f];
      if (f == kNoCell) throw Error("restrict_to: kept cells not closed under facets");
    }
    cells.push_back(std::move(c));
  }
  out.complex = RegularDeltaComplex(std::move(cells));
  return out;
}

RegularDeltaComplex skeleton(const RegularDeltaComplex& complex, int i) {
  if (i >= complex.dim()) return complex;
  std::vector<bool> keep(complex.size());
  for (const Cell& c : complex.cells()) keep[c.id] = c.dim <= i;
  return restrict_to(complex, keep).complex;
}

std::vector<CellId> star(const RegularDeltaComplex& complex, CellId cell) {
  complex.cell(cell);
  std::vector<char> seen(complex.size(), 0);
  std::vector<CellId> stack{cell}, out;
  seen[cell] = 1;
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    out.push_back(c);
    for (CellId up : complex.cofacets(c)) {
      if (!seen[up]) {
        seen[up] = 1;
        stack.push_back(up);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subcomplex closed_star(const RegularDeltaComplex& complex, CellId cell) {
  std::vector<bool> keep(complex.size(), false);
  for (CellId s : star(complex, cell)) {
    for (CellId f : closure(complex, s)) keep[f] = true;
  }
  return restrict_to(complex, keep);
}

Link link_with_cofaces(const RegularDeltaComplex& complex, CellId cell) {
  const Cell& base = complex.cell(cell);
  std::vector<CellId> cofaces = star(complex, cell);
  cofaces.erase(std::find(cofaces.begin(), cofaces.end(), cell));

  auto extra_vertices = [&](const Cell& d) {
    std::vector<VertexId> out;
    std::set_difference(d.vertices.begin(), d.vertices.end(),
                        base.vertices.begin(), base.vertices.end(),
                        std::back_inserter(out));
    return out;
  };

  // link vertices: cofacets of `cell`, ordered by (extra vertex, id)
  std::vector<std::pair<VertexId, CellId>> tips;
  for (CellId e : complex.cofacets(cell)) {
    tips.emplace_back(extra_vertices(complex.cell(e)).front(), e);
  }
  std::sort(tips.begin(), tips.end());
  std::unordered_map<CellId, VertexId> tip_label;
  for (std::size_t i = 0; i < tips.size(); ++i) {
    tip_label[tips[i].second] = static_cast<VertexId>(i);
  }

  std::stable_sort(cofaces.begin(), cofaces.end(), [&](CellId x, CellId y) {
    return complex.cell(x).dim < complex.cell(y).dim;
  });
  std::unordered_map<CellId, CellId> link_id;
  for (std::size_t i = 0; i < cofaces.size(); ++i) {
    link_id[cofaces[i]] = static_cast<CellId>(i);
  }

  Link out;
  std::vector<Cell> cells;
  cells.reserve(cofaces.size());
  for (CellId d_id : cofaces) {
    const Cell& d = complex.cell(d_id);
    const std::vector<VertexId> extra = extra_vertices(d);
    Cell c;
    c.dim = static_cast<int>(extra.size()) - 1;
    for (VertexId x : extra) {
      std::vector<VertexId> span = base.vertices;
      span.insert(std::upper_bound(span.begin(), span.end(), x), x);
      c.vertices.push_back(tip_label.at(face_spanned(complex, d_id, span)));
    }
    if (c.dim > 0) {
      for (VertexId x : extra) {
        auto pos = std::lower_bound(d.vertices.begin(), d.vertices.end(), x) -
                   d.vertices.begin();
        c.facets.push_back(link_id.at(d.facets[static_cast<std::size_t>(pos)]));
      }
    }
    cells.push_back(std::move(c));
    out.to_coface.push_back(d_id);
  }
  out.complex = RegularDeltaComplex(std::move(cells));
  return out;
}

RegularDeltaComplex link(const RegularDeltaComplex& complex, CellId cell) {
  return link_with_cofaces(complex, cell).complex;
}

JoinResult join_with_parts(const RegularDeltaComplex& a,
                           const RegularDeltaComplex& b) {
  const auto na = static_cast<CellId>(a.size());
  const auto nb = static_cast<CellId>(b.size());
  VertexId offset = 0;
  for (VertexId v : a.vertex_labels()) offset = std::max(offset, v + 1);

  auto join_id = [&](CellId s, CellId t) { return na + nb + s * nb + t; };

  JoinResult out;
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(na) + nb + std::size_t{na} * nb);
  for (const Cell& c : a.cells()) {
    cells.push_back(c);
    out.parts.emplace_back(c.id, kNoCell);
  }
  for (const Cell& c : b.cells()) {
    Cell shifted = c;
    for (VertexId& v : shifted.vertices) v += offset;
    for (CellId& f : shifted.facets) f += na;
    cells.push_back(std::move(shifted));
    out.parts.emplace_back(kNoCell, c.id);
  }
  for (const Cell& s : a.cells()) {
    for (const Cell& t : b.cells()) {
      Cell c;
      c.dim = s.dim + t.dim + 1;
      c.vertices = s.vertices;
      for (VertexId v : t.vertices) c.vertices.push_back(v + offset);
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        c.facets.push_back(s.dim == 0 ? na + t.id : join_id(s.facets[i], t.id));
      }
      for (std::size_t j = 0; j < t.vertices.size(); ++j) {
        c.facets.push_back(t.dim == 0 ? s.id : join_id(s.id, t.facets[j]));
      }
      cells.push_back(std::move(c));
      out.parts.emplace_back(s.id, t.id);
    }
  }
  out.complex = RegularDeltaComplex(std::move(cells));
  return out;
}

RegularDeltaComplex join(const RegularDeltaComplex& a,
                         const RegularDeltaComplex& b) {
  return join_with_parts(a, b).complex;
}

RegularDeltaComplex cone(const RegularDeltaComplex& complex) {
  return join(standard_simplex(0), complex);
}

RegularDeltaComplex suspension(const RegularDeltaComplex& complex) {
  return join(complex, boundary_simplex(1));
}

CellMap match_by_vertices(const ComplexPtr& a, const ComplexPtr& b,
                          const std::vector<bool>& domain) {
  std::map<std::vector<VertexId>, std::vector<CellId>> by_tuple;
  for (const Cell& c : b->cells()) by_tuple[c.vertices].push_back(c.id);
  CellMap map{a, b, std::vector<CellId>(a->size(), kNoCell)};
  for (const Cell& c : a->cells()) {
    if (!domain.at(c.id)) continue;
    auto it = by_tuple.find(c.vertices);
    if (it == by_tuple.end() || it->second.size() != 1) {
      throw GlueError("match_by_vertices: cell " + std::to_string(c.id) +
                      " has no unique partner");
    }
    map.assignment[c.id] = it->second.front();
  }
  return map;
}

RegularDeltaComplex glue_along_boundary(const RegularDeltaComplex& a,
                                        const RegularDeltaComplex& b,
                                        const CellMap& matching) {
  if (matching.assignment.size() != a.size()) {
    throw GlueError("matching size differs from the first complex");
  }
  std::vector<CellId> inverse(b.size(), kNoCell);
  for (const Cell& c : a.cells()) {
    const CellId m = matching.assignment[c.id];
    if (m == kNoCell) continue;
    if (!b.contains(m)) throw GlueError("matching points outside the second complex");
    if (inverse[m] != kNoCell) throw GlueError("matching is not injective");
    inverse[m] = c.id;
    if (b.cell(m).dim != c.dim) throw GlueError("matching changes dimension");
    for (CellId f : c.facets) {
      if (matching.assignment[f] == kNoCell) {
        throw GlueError("matched cells of the first complex are not a subcomplex");
      }
    }
  }
  for (const Cell& c : b.cells()) {
    if (inverse[c.id] == kNoCell) continue;
    for (CellId f : c.facets) {
      if (inverse[f] == kNoCell) {
        throw GlueError("matched cells of the second complex are not a subcomplex");
      }
    }
  }

  // vertex correspondence b -> result labels
  std::map<VertexId, VertexId> relabel;
  VertexId next = 0;
  for (VertexId v : a.vertex_labels()) next = std::max(next, v + 1);
  for (VertexId v : b.vertex_labels()) {
    const CellId bc = b.vertex_cell(v);
    if (inverse[bc] != kNoCell) {
      relabel[v] = a.cell(inverse[bc]).vertices.front();
    } else {
      relabel[v] = next++;
    }
  }
  // facet-respecting check on matched cells
  for (const Cell& c : b.cells()) {
    const CellId ac = inverse[c.id];
    if (ac == kNoCell) continue;
    const Cell& src = a.cell(ac);
    std::vector<VertexId> image;
    for (VertexId v : c.vertices) image.push_back(relabel.at(v));
    std::vector<VertexId> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != src.vertices) {
      throw GlueError("matching does not respect vertices at cell " +
                      std::to_string(ac));
    }
    for (std::size_t j = 0; j < c.facets.size(); ++j) {
      const auto pos = std::lower_bound(src.vertices.begin(), src.vertices.end(),
                                        image[j]) -
                       src.vertices.begin();
      if (inverse[c.facets[j]] != src.facets[static_cast<std::size_t>(pos)]) {
        throw GlueError("matching does not respect facets at cell " +
                        std::to_string(ac));
      }
    }
  }

  std::vector<CellId> new_id(b.size(), kNoCell);
  CellId counter = static_cast<CellId>(a.size());
  for (const Cell& c : b.cells()) {
    new_id[c.id] = inverse[c.id] != kNoCell ? inverse[c.id] : counter++;
  }
  std::vector<Cell> cells(a.cells().begin(), a.cells().end());
  for (const Cell& c : b.cells()) {
    if (inverse[c.id] != kNoCell) continue;
    std::vector<std::pair<VertexId, CellId>> entries;
    for (std::size_t j = 0; j < c.vertices.size(); ++j) {
      entries.emplace_back(relabel.at(c.vertices[j]),
                           c.dim == 0 ? kNoCell : new_id[c.facets[j]]);
    }
    std::sort(entries.begin(), entries.end());
    Cell g;
    g.dim = c.dim;
    for (const auto& [v, f] : entries) {
      g.vertices.push_back(v);
      if (c.dim > 0) g.facets.push_back(f);
    }
    cells.push_back(std::move(g));
  }
  RegularDeltaComplex result(std::move(cells));
  ValidationReport report = validate(result);
  if (!report.ok()) {
    throw GlueError("glued complex is not a regular Delta-complex: " +
                    report.summary());
  }
  return result;
}

Subdivision barycentric_subdivision(const RegularDeltaComplex& complex) {
  // vertex label of each input cell = rank in (dim, id) order
  std::vector<VertexId> label(complex.size());
  {
    VertexId next = 0;
    for (int d = 0; d <= complex.dim(); ++d) {
      for (CellId c : complex.cells_of_dim(d)) label[c] = next++;
    }
  }
  // chains ending at each cell, memoised bottom-up
  std::vector<std::vector<std::vector<CellId>>> chains(complex.size());
  for (int d = 0; d <= complex.dim(); ++d) {
    for (CellId c : complex.cells_of_dim(d)) {
      auto& mine = chains[c];
      mine.push_back({c});
      for (CellId f : closure(complex, c)) {
        if (f == c) continue;
        for (const auto& below : chains[f]) {
          auto chain = below;
          chain.push_back(c);
          mine.push_back(std::move(chain));
        }
      }
    }
  }
  std::set<std::vector<VertexId>, BySizeThenLex> faces;
  std::map<std::vector<VertexId>, std::vector<CellId>> flag_of;
  for (const auto& per_cell : chains) {
    for (const auto& chain : per_cell) {
      std::vector<VertexId> key;
      key.reserve(chain.size());
      for (CellId c : chain) key.push_back(label[c]);
      flag_of.emplace(key, chain);
      faces.insert(std::move(key));
    }
  }
  Subdivision out;
  out.complex = from_face_family(faces);
  ComplexPtr fine = share(out.complex);
  out.carrier = CellMap{fine, share(complex), {}};
  out.carrier.assignment.reserve(out.complex.size());
  for (const Cell& c : out.complex.cells()) {
    const auto& chain = flag_of.at(c.vertices);
    out.flags.push_back(chain);
    out.carrier.assignment.push_back(chain.back());
  }
  return out;
}

bool is_simplicial(const RegularDeltaComplex& complex) {
  std::set<std::vector<VertexId>> seen;
  for (const Cell& c : complex.cells()) {
    if (!seen.insert(c.vertices).second) return false;
  }
  return true;
}

bool verify_isomorphism(const RegularDeltaComplex& a,
                        const RegularDeltaComplex& b,
                        const std::vector<CellId>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (CellId c : f) {
    if (c >= b.size() || hit[c]) return false;
    hit[c] = 1;
  }
  std::map<VertexId, VertexId> phi;
  for (CellId v : a.cells_of_dim(0)) {
    const Cell& image = b.cell(f[v]);
    if (image.dim != 0) return false;
    phi[a.cell(v).vertices[0]] = image.vertices[0];
  }
  for (const Cell& c : a.cells()) {
    const Cell& d = b.cell(f[c.id]);
    if (d.dim != c.dim) return false;
    std::vector<VertexId> image;
    for (VertexId v : c.vertices) image.push_back(phi.at(v));
    std::vector<VertexId> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.vertices) return false;
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
      const auto pos =
          std::lower_bound(d.vertices.begin(), d.vertices.end(), image[i]) -
          d.vertices.begin();
      if (f[c.facets[i]] != d.facets[static_cast<std::size_t>(pos)]) return false;
    }
  }
  return true;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const RegularDeltaComplex& a, const RegularDeltaComplex& b)
      : a_(a), b_(b) {}

  std::optional<std::vector<CellId>> run() {
    if (a_.f_vector() != b_.f_vector()) return std::nullopt;
    if (a_.empty()) return std::vector<CellId>{};
    prepare(a_, va_, sig_a_, pair_a_);
    prepare(b_, vb_, sig_b_, pair_b_);
    {
      auto x = sig_a_, y = sig_b_;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return std::nullopt;
    }
    order_vertices();
    for (const Cell& c : b_.cells()) by_tuple_[c.vertices].push_back(c.id);
    phi_.assign(va_.size(), kNoVertex);
    used_.assign(vb_.size(), 0);
    if (assign_vertex(0)) return cell_map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);
  using Signature = std::vector<std::size_t>;

  void prepare(const RegularDeltaComplex& k, std::vector<VertexId>& verts,
               std::vector<Signature>& sig,
               std::vector<std::vector<std::size_t>>& pair) {
    verts = k.vertex_labels();
    const std::size_t n = verts.size();
    std::map<VertexId, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[verts[i]] = i;
    const auto dims = static_cast<std::size_t>(k.dim() + 1);
    std::vector<Signature> base(n, Signature(dims, 0));
    pair.assign(n, std::vector<std::size_t>(n, 0));
    for (const Cell& c : k.cells()) {
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const std::size_t u = idx.at(c.vertices[i]);
        ++base[u][static_cast<std::size_t>(c.dim)];
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
          const std::size_t w = idx.at(c.vertices[j]);
          ++pair[u][w];
          ++pair[w][u];
        }
      }
    }
    // one refinement round over the pair-count graph
    sig.assign(n, {});
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<Signature> around;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || pair[u][w] == 0) continue;
        Signature s = base[w];
        s.insert(s.begin(), pair[u][w]);
        around.push_back(std::move(s));
      }
      std::sort(around.begin(), around.end());
      sig[u] = base[u];
      sig[u].push_back(around.size());
      for (const auto& s : around) sig[u].insert(sig[u].end(), s.begin(), s.end());
    }
  }

  void order_vertices() {
    const std::size_t n = va_.size();
    std::map<Signature, std::size_t> freq;
    for (const auto& s : sig_b_) ++freq[s];
    std::vector<char> placed(n, 0);
    while (order_.size() < n) {
      std::size_t best = kNoVertex;
      std::size_t best_links = 0, best_freq = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (placed[u]) continue;
        std::size_t links = 0;
        for (std::size_t w : order_) links += pair_a_[u][w] > 0 ? 1 : 0;
        const std::size_t f = freq[sig_a_[u]];
        if (best == kNoVertex || links > best_links ||
            (links == best_links && f < best_freq)) {
          best = u;
          best_links = links;
          best_freq = f;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  bool assign_vertex(std::size_t depth) {
    if (depth == order_.size()) return match_cells();
    const std::size_t u = order_[depth];
    for (std::size_t w = 0; w < vb_.size(); ++w) {
      if (used_[w] || sig_b_[w] != sig_a_[u]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t x = order_[k];
        consistent = pair_a_[u][x] == pair_b_[w][phi_[x]];
      }
      if (!consistent) continue;
      phi_[u] = w;
      used_[w] = 1;
      if (assign_vertex(depth + 1)) return true;
      used_[w] = 0;
      phi_[u] = kNoVertex;
    }
    return false;
  }

  bool match_cells() {
    label_map_.clear();
    for (std::size_t i = 0; i < va_.size(); ++i) label_map_[va_[i]] = vb_[phi_[i]];
    cell_order_.clear();
    for (int d = 0; d <= a_.dim(); ++d) {
      for (CellId c : a_.cells_of_dim(d)) cell_order_.push_back(c);
    }
    cell_map_.assign(a_.size(), kNoCell);
    cell_used_.assign(b_.size(), 0);
    return assign_cell(0);
  }

  bool fits(const Cell& c, const Cell& d) const {
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
      const VertexId image = label_map_.at(c.vertices[i]);
      const auto pos =
          std::lower_bound(d.vertices.begin(), d.vertices.end(), image) -
          d.vertices.begin();
      if (cell_map_[c.facets[i]] != d.facets[static_cast<std::size_t>(pos)]) {
        return false;
      }
    }
    return true;
  }

  bool assign_cell(std::size_t k) {
    if (k == cell_order_.size()) return true;
    const Cell& c = a_.cell(cell_order_[k]);
    std::vector<VertexId> key;
    for (VertexId v : c.vertices) key.push_back(label_map_.at(v));
    std::sort(key.begin(), key.end());
    auto it = by_tuple_.find(key);
    if (it == by_tuple_.end()) return false;
    for (CellId d : it->second) {
      if (cell_used_[d] || !fits(c, b_.cell(d))) continue;
      cell_map_[c.id] = d;
      cell_used_[d] = 1;
      if (assign_cell(k + 1)) return true;
      cell_used_[d] = 0;
      cell_map_[c.id] = kNoCell;
    }
    return false;
  }

  const RegularDeltaComplex& a_;
  const RegularDeltaComplex& b_;
  std::vector<VertexId> va_, vb_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<std::vector<std::size_t>> pair_a_, pair_b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> phi_;
  std::vector<char> used_;
  std::map<std::vector<VertexId>, std::vector<CellId>> by_tuple_;
  std::map<VertexId, VertexId> label_map_;
  std::vector<CellId> cell_order_;
  std::vector<CellId> cell_map_;
  std::vector<char> cell_used_;
};

}  // namespace

std::optional<std::vector<CellId>> is_isomorphic(const RegularDeltaComplex& a,
                                                 const RegularDeltaComplex& b) {
  return IsomorphismSearch(a, b).run();
}

}  // namespace deltacx
