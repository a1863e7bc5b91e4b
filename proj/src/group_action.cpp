#include "deltacx/group_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace deltacx {

CellPermutation identity_permutation(std::size_t n) {
  CellPermutation p(n);
  std::iota(p.begin(), p.end(), CellId{0});
  return p;
}

CellPermutation compose(const CellPermutation& outer, const CellPermutation& inner) {
  CellPermutation out(inner.size());
  for (std::size_t c = 0; c < inner.size(); ++c) out[c] = outer.at(inner[c]);
  return out;
}

namespace {

bool generator_problems(const RegularDeltaComplex& complex,
                        const CellPermutation& g, std::size_t index,
                        ActionReport& report) {
  const std::string tag = "generator " + std::to_string(index) + ": ";
  if (g.size() != complex.size()) {
    report.problems.push_back(tag + "length differs from the cell count");
    return false;
  }
  std::vector<char> hit(g.size(), 0);
  for (CellId c : g) {
    if (c >= g.size() || hit[c]) {
      report.problems.push_back(tag + "not a bijection on cell ids");
      return false;
    }
    hit[c] = 1;
  }
  bool ok = true;
  for (const Cell& c : complex.cells()) {
    const Cell& image = complex.cell(g[c.id]);
    bool good = image.dim == c.dim;
    for (CellId f : c.facets) {
      if (!good) break;
      good = std::find(image.facets.begin(), image.facets.end(), g[f]) !=
             image.facets.end();
    }
    if (!good) {
      report.incompatible_cells.push_back(c.id);
      ok = false;
    }
  }
  if (!ok) report.problems.push_back(tag + "does not commute with the facet maps");
  return ok;
}

}  // namespace

std::vector<CellPermutation> group_elements(const RegularDeltaComplex& complex,
                                            const GroupAction& action) {
  std::vector<CellPermutation> elements{identity_permutation(complex.size())};
  std::set<CellPermutation> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const CellPermutation& g : action.generators) {
      CellPermutation next = compose(g, elements[head]);
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > action.order_bound) {
          throw Error("group generated by '" + action.name +
                      "' exceeds the declared order bound " +
                      std::to_string(action.order_bound));
        }
      }
    }
  }
  return elements;
}

ActionReport verify_action(const RegularDeltaComplex& complex,
                           const GroupAction& action) {
  ActionReport report;
  for (std::size_t i = 0; i < action.generators.size(); ++i) {
    if (!generator_problems(complex, action.generators[i], i, report)) report.ok = false;
  }
  std::sort(report.incompatible_cells.begin(), report.incompatible_cells.end());
  report.incompatible_cells.erase(
      std::unique(report.incompatible_cells.begin(), report.incompatible_cells.end()),
      report.incompatible_cells.end());
  if (!report.ok) return report;
  try {
    report.order = group_elements(complex, action).size();
  } catch (const Error& e) {
    report.ok = false;
    report.problems.emplace_back(e.what());
  }
  return report;
}

GroupAction subdivide_action(const Subdivision& subdivision,
                             const GroupAction& action) {
  std::map<std::vector<CellId>, CellId> by_flag;
  for (std::size_t c = 0; c < subdivision.flags.size(); ++c) {
    by_flag.emplace(subdivision.flags[c], static_cast<CellId>(c));
  }
  GroupAction out{action.name, {}, action.order_bound};
  for (const CellPermutation& g : action.generators) {
    CellPermutation lifted(subdivision.flags.size());
    for (std::size_t c = 0; c < subdivision.flags.size(); ++c) {
      std::vector<CellId> image;
      image.reserve(subdivision.flags[c].size());
      for (CellId x : subdivision.flags[c]) image.push_back(g.at(x));
      auto it = by_flag.find(image);
      if (it == by_flag.end()) throw Error("action does not preserve the face poset");
      lifted[c] = it->second;
    }
    out.generators.push_back(std::move(lifted));
  }
  return out;
}

GroupAction join_action(const JoinResult& joined, const GroupAction& on_a,
                        const GroupAction& on_b, std::size_t a_size,
                        std::size_t b_size) {
  std::map<std::pair<CellId, CellId>, CellId> by_parts;
  for (std::size_t c = 0; c < joined.parts.size(); ++c) {
    by_parts.emplace(joined.parts[c], static_cast<CellId>(c));
  }
  const std::size_t count = std::max(on_a.generators.size(), on_b.generators.size());
  GroupAction out{on_a.name.empty() ? on_b.name : on_a.name, {},
                  std::max(on_a.order_bound, on_b.order_bound)};
  const CellPermutation id_a = identity_permutation(a_size);
  const CellPermutation id_b = identity_permutation(b_size);
  for (std::size_t k = 0; k < count; ++k) {
    const CellPermutation& ga = k < on_a.generators.size() ? on_a.generators[k] : id_a;
    const CellPermutation& gb = k < on_b.generators.size() ? on_b.generators[k] : id_b;
    CellPermutation g(joined.parts.size());
    for (std::size_t c = 0; c < joined.parts.size(); ++c) {
      auto [s, t] = joined.parts[c];
      const CellId s2 = s == kNoCell ? kNoCell : ga.at(s);
      const CellId t2 = t == kNoCell ? kNoCell : gb.at(t);
      g[c] = by_parts.at({s2, t2});
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

namespace {

struct OrbitAttempt {
  bool regular = false;
  std::string reason;
  RegularDeltaComplex complex;
  std::vector<CellId> projection;
};

OrbitAttempt try_orbit_complex(const RegularDeltaComplex& k,
                               const std::vector<CellPermutation>& elements) {
  OrbitAttempt out;
  // each element must carry facet i to facet i
  for (const CellPermutation& g : elements) {
    for (const Cell& c : k.cells()) {
      const Cell& image = k.cell(g[c.id]);
      for (std::size_t i = 0; i < c.facets.size(); ++i) {
        if (g[c.facets[i]] != image.facets[i]) {
          out.reason = "an element permutes the vertices of a cell";
          return out;
        }
      }
    }
  }
  std::vector<CellId> rep(k.size(), kNoCell);
  for (const Cell& c : k.cells()) {
    CellId r = c.id;
    for (const CellPermutation& g : elements) r = std::min(r, g[c.id]);
    rep[c.id] = r;
  }
  for (const Cell& c : k.cells()) {
    std::vector<CellId> reps;
    for (CellId f : closure(k, c.id)) reps.push_back(rep[f]);
    std::sort(reps.begin(), reps.end());
    if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) {
      out.reason = "two faces of cell " + std::to_string(c.id) + " share an orbit";
      return out;
    }
  }
  // order vertex orbits compatibly with every cell's vertex tuple
  std::map<CellId, std::set<CellId>> after;
  std::map<CellId, std::size_t> indegree;
  for (CellId v : k.cells_of_dim(0)) indegree.emplace(rep[v], 0);
  for (const Cell& c : k.cells()) {
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      const CellId lo = rep[k.vertex_cell(c.vertices[i])];
      const CellId hi = rep[k.vertex_cell(c.vertices[i + 1])];
      if (after[lo].insert(hi).second) ++indegree[hi];
    }
  }
  std::priority_queue<CellId, std::vector<CellId>, std::greater<>> ready;
  for (const auto& [v, deg] : indegree) {
    if (deg == 0) ready.push(v);
  }
  std::map<CellId, VertexId> orbit_label;
  while (!ready.empty()) {
    const CellId v = ready.top();
    ready.pop();
    orbit_label[v] = static_cast<VertexId>(orbit_label.size());
    for (CellId w : after[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (orbit_label.size() != indegree.size()) {
    out.reason = "vertex orbits admit no consistent order";
    return out;
  }

  std::map<CellId, CellId> orbit_id;
  for (const Cell& c : k.cells()) {
    if (rep[c.id] == c.id) orbit_id.emplace(c.id, static_cast<CellId>(orbit_id.size()));
  }
  std::vector<Cell> cells;
  cells.reserve(orbit_id.size());
  for (const auto& [r, id] : orbit_id) {
    const Cell& c = k.cell(r);
    Cell q;
    q.dim = c.dim;
    for (VertexId v : c.vertices) q.vertices.push_back(orbit_label.at(rep[k.vertex_cell(v)]));
    for (CellId f : c.facets) q.facets.push_back(orbit_id.at(rep[f]));
    cells.push_back(std::move(q));
  }
  out.complex = RegularDeltaComplex(std::move(cells));
  ValidationReport report = validate(out.complex);
  if (!report.ok()) {
    out.reason = "orbit complex is not regular: " + report.summary();
    return out;
  }
  out.projection.resize(k.size());
  for (const Cell& c : k.cells()) out.projection[c.id] = orbit_id.at(rep[c.id]);
  out.regular = true;
  return out;
}

}  // namespace

Quotient quotient(const RegularDeltaComplex& complex, const GroupAction& action) {
  ActionReport report = verify_action(complex, action);
  if (!report.ok) {
    std::string why = "action is not valid";
    if (!report.problems.empty()) why += ": " + report.problems.front();
    throw QuotientError(why);
  }
  RegularDeltaComplex current = complex;
  GroupAction current_action = action;
  std::vector<CellId> to_input = identity_permutation(complex.size());
  std::string last_reason;
  for (int level = 0; level <= 2; ++level) {
    if (level > 0) {
      Subdivision sd = barycentric_subdivision(current);
      current_action = subdivide_action(sd, current_action);
      std::vector<CellId> composed(sd.complex.size());
      for (std::size_t c = 0; c < composed.size(); ++c) {
        composed[c] = to_input[sd.carrier.assignment[c]];
      }
      to_input = std::move(composed);
      current = std::move(sd.complex);
    }
    const std::vector<CellPermutation> elements = group_elements(current, current_action);
    OrbitAttempt attempt = try_orbit_complex(current, elements);
    if (attempt.regular) {
      Quotient q;
      q.subdivisions = level;
      q.source = current;
      q.complex = std::move(attempt.complex);
      q.projection = CellMap{share(current), share(q.complex), std::move(attempt.projection)};
      q.source_to_input = std::move(to_input);
      return q;
    }
    last_reason = attempt.reason;
  }
  throw QuotientError("action is not regular after 2 barycentric subdivisions (" +
                      last_reason + ")");
}

Subcomplex fixed_subcomplex(const RegularDeltaComplex& complex,
                            const GroupAction& action) {
  std::vector<bool> keep(complex.size(), false);
  auto fixed = [&](CellId c) {
    return std::all_of(action.generators.begin(), action.generators.end(),
                       [c](const CellPermutation& g) { return g.at(c) == c; });
  };
  // a cell is kept when it and all its faces are fixed (pointwise fixed)
  for (const Cell& c : complex.cells()) {
    const auto faces = closure(complex, c.id);
    keep[c.id] = std::all_of(faces.begin(), faces.end(), fixed);
  }
  return restrict_to(complex, keep);
}

}  // namespace deltacx
