#include "deltacx/arrangements.hpp"

#include <numeric>
#include <stdexcept>

#include "deltacx/constructions.hpp"

namespace deltacx {

std::string to_string(DivisorLabel label) {
  switch (label) {
    case DivisorLabel::kHorizontal: return "horizontal";
    case DivisorLabel::kVertical: return "vertical";
    case DivisorLabel::kUnlabeled: return "unlabeled";
  }
  return "unlabeled";
}

namespace {

void subsets_of_size(int k, int size, int start, std::vector<VertexId>& current,
                     std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int v = start; v < k; ++v) {
    current.push_back(static_cast<VertexId>(v));
    subsets_of_size(k, size, v + 1, current, out);
    current.pop_back();
  }
}

// Which factor a 0-cell of a join came from, and its label there.
struct JoinVertex {
  bool from_a;
  VertexId source_label;
  VertexId label;
};

std::vector<JoinVertex> join_vertices(const JoinResult& j, const RegularDeltaComplex& a,
                                      const RegularDeltaComplex& b) {
  std::vector<JoinVertex> out;
  for (CellId c : j.complex.cells_of_dim(0)) {
    const auto [s, t] = j.parts[c];
    const bool from_a = t == kNoCell;
    const VertexId src = from_a ? a.cell(s).vertices[0] : b.cell(t).vertices[0];
    out.push_back({from_a, src, j.complex.cell(c).vertices[0]});
  }
  return out;
}

bool in_unit_interval(const Rational& q) { return q > Rational(0) && q <= Rational(1); }

void check_divisors(const std::vector<DivisorSpec>& divisors) {
  for (const DivisorSpec& d : divisors) {
    if (!in_unit_interval(d.coefficient)) {
      throw SpecError("divisor '" + d.name + "' has coefficient " +
                      std::to_string(d.coefficient.numerator()) + "/" +
                      std::to_string(d.coefficient.denominator()) + " outside (0, 1]");
    }
  }
}

std::vector<std::string> unit_names(const std::vector<DivisorSpec>& divisors, int factor,
                                    bool by_factor, std::vector<DivisorSpec>& dropped) {
  std::vector<std::string> names;
  for (const DivisorSpec& d : divisors) {
    if (by_factor && d.factor != factor) continue;
    if (d.coefficient == Rational(1)) {
      names.push_back(d.name);
    } else {
      dropped.push_back(d);
    }
  }
  return names;
}

}  // namespace

RegularDeltaComplex build_generic_hyperplanes(int N, int k) {
  if (N < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (k < 0) throw std::invalid_argument("divisor count must be >= 0");
  if (k == 0) return RegularDeltaComplex{};
  std::vector<std::vector<VertexId>> generators;
  std::vector<VertexId> current;
  subsets_of_size(k, std::min(k, N), 0, current, generators);
  return simplicial_closure(generators);
}

LabeledComplex build_product_arrangement(int a, int r, int k1, int k2) {
  const RegularDeltaComplex base = build_generic_hyperplanes(a, k1);
  const RegularDeltaComplex fibre = build_generic_hyperplanes(r, k2);
  JoinResult j = join_with_parts(base, fibre);
  LabeledComplex out;
  for (const JoinVertex& v : join_vertices(j, base, fibre)) {
    out.labels[v.label] = v.from_a ? VertexLabel::kVertical : VertexLabel::kHorizontal;
  }
  out.complex = std::move(j.complex);
  return out;
}

QuadricBuild build_quadric_example(int n) {
  if (n < 3) throw std::invalid_argument("quadric example needs n >= 3");
  const RegularDeltaComplex s0 = boundary_simplex(1);
  const GroupAction swap_points{"tau", {CellPermutation{1, 0}}, 2};
  const JoinResult xy = join_with_parts(s0, s0);
  const GroupAction on_xy = join_action(xy, swap_points, swap_points, s0.size(), s0.size());

  const RegularDeltaComplex z = nonsimplicial_sphere(n - 2);
  CellPermutation swap_tops = identity_permutation(z.size());
  std::swap(swap_tops[z.size() - 1], swap_tops[z.size() - 2]);
  const GroupAction on_z{"tau", {swap_tops}, 2};

  JoinResult whole = join_with_parts(xy.complex, z);
  QuadricBuild out;
  out.tau = join_action(whole, on_xy, on_z, xy.complex.size(), z.size());
  out.tau.name = "tau";
  out.tau.order_bound = 2;
  static const char* kXY[] = {"x0", "x1", "y0", "y1"};
  for (const JoinVertex& v : join_vertices(whole, xy.complex, z)) {
    out.labeled.labels[v.label] = v.from_a ? VertexLabel::kVertical : VertexLabel::kHorizontal;
    if (out.vertex_names.size() <= v.label) out.vertex_names.resize(v.label + 1);
    out.vertex_names[v.label] =
        v.from_a ? kXY[v.source_label]
                 : (v.source_label == 0 ? "Q" : "z" + std::to_string(v.source_label + 1));
  }
  out.labeled.complex = std::move(whole.complex);
  return out;
}

void check_spec(const ArrangementSpec& spec) {
  if (const auto* g = std::get_if<GenericHyperplanes>(&spec)) {
    if (g->ambient_dim < 1) throw SpecError("ambient_dim must be >= 1");
    check_divisors(g->divisors);
    for (const DivisorSpec& d : g->divisors) {
      if (d.label == DivisorLabel::kVertical) {
        throw SpecError("divisor '" + d.name +
                        "' is labelled vertical but a generic arrangement has a point base");
      }
    }
  } else if (const auto* p = std::get_if<ProductHyperplanes>(&spec)) {
    if (p->a < 1 || p->r < 1) throw SpecError("factor dimensions must be >= 1");
    check_divisors(p->divisors);
    for (const DivisorSpec& d : p->divisors) {
      if (d.factor != 0 && d.factor != 1) {
        throw SpecError("divisor '" + d.name + "' has factor outside {0, 1}");
      }
      const DivisorLabel expected =
          d.factor == 0 ? DivisorLabel::kVertical : DivisorLabel::kHorizontal;
      if (d.label != DivisorLabel::kUnlabeled && d.label != expected) {
        throw SpecError("divisor '" + d.name + "' is labelled " + to_string(d.label) +
                        " but its factor makes it " + to_string(expected));
      }
    }
  } else if (const auto* q = std::get_if<QuadricExample>(&spec)) {
    if (q->n < 3) throw SpecError("quadric example needs n >= 3");
  } else {
    const auto& e = std::get<ExplicitPoset>(spec);
    const ValidationReport report = validate(e.complex);
    if (!report.ok()) throw SpecError("explicit complex is not regular: " + report.summary());
    for (const auto& [v, label] : e.labels) {
      if (e.complex.vertex_cell(v) == kNoCell) {
        throw SpecError("label given for unknown vertex " + std::to_string(v));
      }
    }
    for (const GroupAction& action : e.actions) {
      const ActionReport ar = verify_action(e.complex, action);
      if (!ar.ok) {
        throw SpecError("action '" + action.name + "' is invalid: " +
                        (ar.problems.empty() ? std::string("unknown") : ar.problems.front()));
      }
    }
  }
}

BuiltArrangement dual_complex_from_spec(const ArrangementSpec& spec) {
  check_spec(spec);
  BuiltArrangement out;
  if (const auto* g = std::get_if<GenericHyperplanes>(&spec)) {
    out.vertex_names = unit_names(g->divisors, 0, false, out.dropped);
    out.labeled.complex =
        build_generic_hyperplanes(g->ambient_dim, static_cast<int>(out.vertex_names.size()));
    for (VertexId v : out.labeled.complex.vertex_labels()) {
      out.labeled.labels[v] = VertexLabel::kHorizontal;
    }
  } else if (const auto* p = std::get_if<ProductHyperplanes>(&spec)) {
    const auto base = unit_names(p->divisors, 0, true, out.dropped);
    const auto fibre = unit_names(p->divisors, 1, true, out.dropped);
    const RegularDeltaComplex a = build_generic_hyperplanes(p->a, static_cast<int>(base.size()));
    const RegularDeltaComplex b = build_generic_hyperplanes(p->r, static_cast<int>(fibre.size()));
    JoinResult j = join_with_parts(a, b);
    for (const JoinVertex& v : join_vertices(j, a, b)) {
      out.labeled.labels[v.label] = v.from_a ? VertexLabel::kVertical : VertexLabel::kHorizontal;
      if (out.vertex_names.size() <= v.label) out.vertex_names.resize(v.label + 1);
      out.vertex_names[v.label] = v.from_a ? base[v.source_label] : fibre[v.source_label];
    }
    out.labeled.complex = std::move(j.complex);
  } else if (const auto* q = std::get_if<QuadricExample>(&spec)) {
    QuadricBuild built = build_quadric_example(q->n);
    out.labeled = std::move(built.labeled);
    out.actions.push_back(std::move(built.tau));
    out.vertex_names = std::move(built.vertex_names);
  } else {
    const auto& e = std::get<ExplicitPoset>(spec);
    out.labeled.complex = e.complex;
    for (VertexId v : e.complex.vertex_labels()) {
      auto it = e.labels.find(v);
      out.labeled.labels[v] = it == e.labels.end() ? VertexLabel::kHorizontal : it->second;
    }
    out.actions = e.actions;
  }
  return out;
}

}  // namespace deltacx
