#include "deltacx/serialization.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace deltacx {

namespace {

std::string child(const std::string& path, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') {
      escaped += "~0";
    } else if (ch == '/') {
      escaped += "~1";
    } else {
      escaped += ch;
    }
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

void require_object(const Json& j, const std::string& path,
                    const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ParseError(child(path, key), "unknown field");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) throw ParseError(child(path, key), "missing required field");
  }
}

const Json& array_at(const Json& j, const std::string& key, const std::string& path) {
  const Json& value = j.at(key);
  if (!value.is_array()) throw ParseError(child(path, key), "expected an array");
  return value;
}

std::uint64_t unsigned_value(const Json& j, const std::string& path) {
  // values built in memory may be stored as signed integers
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw ParseError(path, "expected a non-negative integer");
}

std::int64_t int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint32_t u32_value(const Json& j, const std::string& path) {
  const std::uint64_t v = unsigned_value(j, path);
  if (v >= kNoCell) throw ParseError(path, "value out of range");
  return static_cast<std::uint32_t>(v);
}

int small_int(const Json& j, const std::string& path) {
  const std::int64_t v = int_value(j, path);
  if (v < -1000000 || v > 1000000) throw ParseError(path, "value out of range");
  return static_cast<int>(v);
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

void check_version(const Json& j, const std::string& path) {
  if (!j.contains("format_version")) return;
  const std::int64_t v = int_value(j.at("format_version"), child(path, "format_version"));
  if (v != kFormatVersion) {
    throw ParseError(child(path, "format_version"),
                     "unsupported format version " + std::to_string(v));
  }
}

VertexLabel parse_vertex_label(const Json& j, const std::string& path) {
  const std::string s = string_value(j, path);
  if (s == "horizontal") return VertexLabel::kHorizontal;
  if (s == "vertical") return VertexLabel::kVertical;
  throw ParseError(path, "expected \"horizontal\" or \"vertical\"");
}

ComplexDocument parse_document_at(const Json& j, const std::string& path) {
  require_object(j, path,
                 {"format_version", "vertices", "vertex_names", "cells", "labels", "actions"},
                 {"vertices", "cells"});
  check_version(j, path);

  const Json& cells_json = array_at(j, "cells", path);
  const std::string cells_path = child(path, "cells");
  std::unordered_map<std::uint64_t, CellId> by_doc_id;
  for (std::size_t i = 0; i < cells_json.size(); ++i) {
    const std::string cp = child(cells_path, i);
    require_object(cells_json[i], cp, {"id", "dim", "vertices", "facets"},
                   {"id", "dim", "vertices", "facets"});
    const std::uint64_t id = unsigned_value(cells_json[i].at("id"), child(cp, "id"));
    if (!by_doc_id.emplace(id, static_cast<CellId>(i)).second) {
      throw ParseError(child(cp, "id"), "duplicate cell id " + std::to_string(id));
    }
  }
  std::vector<Cell> cells;
  cells.reserve(cells_json.size());
  for (std::size_t i = 0; i < cells_json.size(); ++i) {
    const std::string cp = child(cells_path, i);
    const Json& cj = cells_json[i];
    Cell c;
    c.dim = small_int(cj.at("dim"), child(cp, "dim"));
    const Json& vs = array_at(cj, "vertices", cp);
    for (std::size_t k = 0; k < vs.size(); ++k) {
      c.vertices.push_back(u32_value(vs[k], child(child(cp, "vertices"), k)));
    }
    const Json& fs = array_at(cj, "facets", cp);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const std::string fp = child(child(cp, "facets"), k);
      auto it = by_doc_id.find(unsigned_value(fs[k], fp));
      if (it == by_doc_id.end()) throw ParseError(fp, "facet refers to an unknown cell id");
      c.facets.push_back(it->second);
    }
    cells.push_back(std::move(c));
  }

  ComplexDocument doc;
  doc.complex = RegularDeltaComplex(std::move(cells));

  const Json& vertices = array_at(j, "vertices", path);
  std::vector<VertexId> listed;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    listed.push_back(u32_value(vertices[k], child(child(path, "vertices"), k)));
  }
  std::vector<VertexId> sorted = listed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(child(path, "vertices"), "duplicate vertex");
  }
  std::vector<VertexId> from_cells;
  for (const Cell& c : doc.complex.cells()) {
    if (c.vertices.size() == 1) from_cells.push_back(c.vertices[0]);
  }
  std::sort(from_cells.begin(), from_cells.end());
  if (sorted != from_cells) {
    throw ParseError(child(path, "vertices"),
                     "vertex list does not match the labels of the 0-cells");
  }

  if (j.contains("vertex_names")) {
    const Json& names = array_at(j, "vertex_names", path);
    if (names.size() != listed.size()) {
      throw ParseError(child(path, "vertex_names"), "length differs from vertices");
    }
    std::map<VertexId, std::string> by_vertex;
    for (std::size_t k = 0; k < names.size(); ++k) {
      by_vertex[listed[k]] = string_value(names[k], child(child(path, "vertex_names"), k));
    }
    for (const auto& [v, name] : by_vertex) doc.vertex_names.push_back(name);
  }
  if (j.contains("labels")) {
    const Json& labels = array_at(j, "labels", path);
    if (labels.size() != listed.size()) {
      throw ParseError(child(path, "labels"), "length differs from vertices");
    }
    std::map<VertexId, VertexLabel> out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      out[listed[k]] = parse_vertex_label(labels[k], child(child(path, "labels"), k));
    }
    doc.labels = std::move(out);
  }
  if (j.contains("actions")) {
    const Json& actions = array_at(j, "actions", path);
    for (std::size_t a = 0; a < actions.size(); ++a) {
      const std::string ap = child(child(path, "actions"), a);
      require_object(actions[a], ap, {"name", "order_bound", "generators"},
                     {"name", "generators"});
      GroupAction action;
      action.name = string_value(actions[a].at("name"), child(ap, "name"));
      if (actions[a].contains("order_bound")) {
        action.order_bound = unsigned_value(actions[a].at("order_bound"),
                                            child(ap, "order_bound"));
      }
      const Json& gens = array_at(actions[a], "generators", ap);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string gp = child(child(ap, "generators"), g);
        if (!gens[g].is_array()) throw ParseError(gp, "expected an array");
        if (gens[g].size() != cells_json.size()) {
          throw ParseError(gp, "generator length differs from the cell count");
        }
        CellPermutation perm;
        for (std::size_t k = 0; k < gens[g].size(); ++k) {
          const std::string ep = child(gp, k);
          auto it = by_doc_id.find(unsigned_value(gens[g][k], ep));
          if (it == by_doc_id.end()) throw ParseError(ep, "unknown cell id");
          perm.push_back(it->second);
        }
        action.generators.push_back(std::move(perm));
      }
      doc.actions.push_back(std::move(action));
    }
  }
  return doc;
}

Rational parse_coefficient(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    throw ParseError(path, "coefficients must be integers or \"p/q\" strings");
  }
  const std::string s = string_value(j, path);
  const std::size_t slash = s.find('/');
  auto parse_int = [&](const std::string& text) -> std::int64_t {
    if (text.empty()) throw ParseError(path, "malformed rational '" + s + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      throw ParseError(path, "malformed rational '" + s + "'");
    }
    if (used != text.size()) throw ParseError(path, "malformed rational '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const std::int64_t num = parse_int(s.substr(0, slash));
  const std::int64_t den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError(path, "zero denominator");
  return Rational(num, den);
}

Json coefficient_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

DivisorLabel parse_divisor_label(const Json& j, const std::string& path) {
  const std::string s = string_value(j, path);
  if (s == "horizontal") return DivisorLabel::kHorizontal;
  if (s == "vertical") return DivisorLabel::kVertical;
  if (s == "unlabeled") return DivisorLabel::kUnlabeled;
  throw ParseError(path, "expected \"horizontal\", \"vertical\" or \"unlabeled\"");
}

std::vector<DivisorSpec> parse_divisors(const Json& j, const std::string& path,
                                        bool product) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<DivisorSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string dp = child(path, i);
    std::set<std::string> allowed{"name", "coefficient", "label"};
    std::set<std::string> required{};
    if (product) {
      allowed.insert("factor");
      required.insert("factor");
    }
    require_object(j[i], dp, allowed, required);
    DivisorSpec d;
    d.name = j[i].contains("name") ? string_value(j[i].at("name"), child(dp, "name"))
                                   : "D" + std::to_string(i);
    if (j[i].contains("coefficient")) {
      d.coefficient = parse_coefficient(j[i].at("coefficient"), child(dp, "coefficient"));
    }
    if (j[i].contains("label")) {
      d.label = parse_divisor_label(j[i].at("label"), child(dp, "label"));
    }
    if (product) d.factor = small_int(j[i].at("factor"), child(dp, "factor"));
    out.push_back(std::move(d));
  }
  return out;
}

Json divisors_json(const std::vector<DivisorSpec>& divisors, bool product) {
  Json out = Json::array();
  for (const DivisorSpec& d : divisors) {
    Json dj{{"name", d.name},
            {"coefficient", coefficient_json(d.coefficient)},
            {"label", to_string(d.label)}};
    if (product) dj["factor"] = d.factor;
    out.push_back(std::move(dj));
  }
  return out;
}

}  // namespace

ComplexDocument parse_complex_document(const Json& j) { return parse_document_at(j, ""); }

Json to_json(const ComplexDocument& doc) {
  const RegularDeltaComplex& k = doc.complex;
  Json cells = Json::array();
  for (const Cell& c : k.cells()) {
    cells.push_back(Json{{"id", c.id}, {"dim", c.dim}, {"vertices", c.vertices},
                         {"facets", c.facets}});
  }
  const std::vector<VertexId> vertices = k.vertex_labels();
  Json out{{"format_version", kFormatVersion}, {"vertices", vertices}, {"cells", cells}};
  if (!doc.vertex_names.empty()) out["vertex_names"] = doc.vertex_names;
  if (doc.labels) {
    Json labels = Json::array();
    for (VertexId v : vertices) {
      auto it = doc.labels->find(v);
      if (it == doc.labels->end()) throw Error("vertex " + std::to_string(v) + " has no label");
      labels.push_back(to_string(it->second));
    }
    out["labels"] = std::move(labels);
  }
  if (!doc.actions.empty()) {
    Json actions = Json::array();
    for (const GroupAction& a : doc.actions) {
      actions.push_back(Json{{"name", a.name}, {"order_bound", a.order_bound},
                             {"generators", a.generators}});
    }
    out["actions"] = std::move(actions);
  }
  return out;
}

ComplexDocument make_document(const RegularDeltaComplex& complex) {
  return ComplexDocument{complex, {}, std::nullopt, {}};
}

ComplexDocument make_document(const BuiltArrangement& built) {
  ComplexDocument doc{built.labeled.complex, {}, built.labeled.labels, built.actions};
  if (!built.vertex_names.empty()) {
    for (VertexId v : built.labeled.complex.vertex_labels()) {
      doc.vertex_names.push_back(v < built.vertex_names.size() ? built.vertex_names[v]
                                                               : std::to_string(v));
    }
  }
  return doc;
}

ArrangementSpec parse_arrangement_spec(const Json& j) {
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (!j.contains("kind")) throw ParseError("/kind", "missing required field");
  const std::string kind = string_value(j.at("kind"), "/kind");
  if (kind == "generic_hyperplanes") {
    require_object(j, "", {"format_version", "kind", "ambient_dim", "divisors", "divisor_count"},
                   {"ambient_dim"});
    check_version(j, "");
    GenericHyperplanes g;
    g.ambient_dim = small_int(j.at("ambient_dim"), "/ambient_dim");
    if (j.contains("divisors") == j.contains("divisor_count")) {
      throw ParseError("", "exactly one of divisors and divisor_count is required");
    }
    if (j.contains("divisors")) {
      g.divisors = parse_divisors(j.at("divisors"), "/divisors", false);
    } else {
      const int k = small_int(j.at("divisor_count"), "/divisor_count");
      if (k < 0) throw ParseError("/divisor_count", "must be non-negative");
      for (int i = 0; i < k; ++i) g.divisors.push_back({"H" + std::to_string(i)});
    }
    return g;
  }
  if (kind == "product_hyperplanes") {
    require_object(j, "",
                   {"format_version", "kind", "factor_dims", "divisors", "divisor_counts"},
                   {"factor_dims"});
    check_version(j, "");
    const Json& dims = array_at(j, "factor_dims", "");
    if (dims.size() != 2) throw ParseError("/factor_dims", "expected two entries");
    ProductHyperplanes p;
    p.a = small_int(dims[0], "/factor_dims/0");
    p.r = small_int(dims[1], "/factor_dims/1");
    if (j.contains("divisors") == j.contains("divisor_counts")) {
      throw ParseError("", "exactly one of divisors and divisor_counts is required");
    }
    if (j.contains("divisors")) {
      p.divisors = parse_divisors(j.at("divisors"), "/divisors", true);
    } else {
      const Json& counts = array_at(j, "divisor_counts", "");
      if (counts.size() != 2) throw ParseError("/divisor_counts", "expected two entries");
      for (int f = 0; f < 2; ++f) {
        const std::string cp = "/divisor_counts/" + std::to_string(f);
        const int k = small_int(counts[static_cast<std::size_t>(f)], cp);
        if (k < 0) throw ParseError(cp, "must be non-negative");
        for (int i = 0; i < k; ++i) {
          DivisorSpec d{(f == 0 ? "B" : "F") + std::to_string(i)};
          d.factor = f;
          p.divisors.push_back(std::move(d));
        }
      }
    }
    return p;
  }
  if (kind == "quadric_example") {
    require_object(j, "", {"format_version", "kind", "n"}, {"n"});
    check_version(j, "");
    return QuadricExample{small_int(j.at("n"), "/n")};
  }
  if (kind == "explicit_poset") {
    require_object(j, "", {"format_version", "kind", "complex"}, {"complex"});
    check_version(j, "");
    ComplexDocument doc = parse_document_at(j.at("complex"), "/complex");
    ExplicitPoset e;
    e.complex = std::move(doc.complex);
    if (doc.labels) e.labels = std::move(*doc.labels);
    e.actions = std::move(doc.actions);
    return e;
  }
  throw ParseError("/kind", "unknown arrangement kind '" + kind + "'");
}

Json to_json(const ArrangementSpec& spec) {
  Json out{{"format_version", kFormatVersion}};
  if (const auto* g = std::get_if<GenericHyperplanes>(&spec)) {
    out["kind"] = "generic_hyperplanes";
    out["ambient_dim"] = g->ambient_dim;
    out["divisors"] = divisors_json(g->divisors, false);
  } else if (const auto* p = std::get_if<ProductHyperplanes>(&spec)) {
    out["kind"] = "product_hyperplanes";
    out["factor_dims"] = {p->a, p->r};
    out["divisors"] = divisors_json(p->divisors, true);
  } else if (const auto* q = std::get_if<QuadricExample>(&spec)) {
    out["kind"] = "quadric_example";
    out["n"] = q->n;
  } else {
    const auto& e = std::get<ExplicitPoset>(spec);
    out["kind"] = "explicit_poset";
    ComplexDocument doc{e.complex, {}, std::nullopt, e.actions};
    if (!e.labels.empty()) doc.labels = e.labels;
    Json cj = to_json(doc);
    cj.erase("format_version");
    out["complex"] = std::move(cj);
  }
  return out;
}

Json to_json(const HomologyProfile& profile) {
  Json degrees = Json::array();
  for (std::size_t d = 0; d < profile.degrees.size(); ++d) {
    degrees.push_back(Json{{"degree", d},
                           {"rank", profile.degrees[d].rank},
                           {"torsion", profile.degrees[d].torsion}});
  }
  return Json{{"reduced", profile.reduced},
              {"coefficients", profile.coefficients == Coefficients::kIntegers ? "z" : "z2"},
              {"degrees", std::move(degrees)},
              {"text", profile.to_string()}};
}

Json to_json(const PLVerdict& v) {
  Json out{{"structure", v.structure == StructuralTag::kNone ? Json(nullptr)
                                                             : Json(to_string(v.structure))},
           {"structure_dim", v.structure == StructuralTag::kNone ? Json(nullptr)
                                                                 : Json(v.structure_dim)},
           {"signature", to_string(v.signature)},
           {"signature_dim", v.signature == SignatureKind::kUnrecognized
                                 ? Json(nullptr)
                                 : Json(v.signature_dim)},
           {"summary", v.summary()},
           {"manifold_consistent", v.manifold_consistent},
           {"manifold_failures", v.manifold_failures},
           {"degenerate_context", v.degenerate_context},
           {"homology", to_json(v.profile)}};
  out["join_of_labeled_parts"] =
      v.join_of_labeled_parts ? Json(*v.join_of_labeled_parts) : Json(nullptr);
  return out;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(Json{{"kind", to_string(v.kind)}, {"cell", v.cell},
                              {"detail", v.detail}});
  }
  return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const ActionReport& report) {
  return Json{{"ok", report.ok},
              {"order", report.order},
              {"problems", report.problems},
              {"incompatible_cells", report.incompatible_cells}};
}

Json to_json(const RestrictionReport& report) {
  return Json{{"into_horizontal", report.into_horizontal},
              {"injective", report.injective},
              {"surjective", report.surjective},
              {"iso_on_skeleton", report.iso_on_skeleton},
              {"two_to_one", report.two_to_one},
              {"degenerate_context", report.degenerate_context}};
}

Json to_json(const CoverReport& report) {
  return Json{{"kind", to_string(report.kind)},
              {"max_fiber", report.max_fiber},
              {"fibers_at_most_two", report.fibers_at_most_two},
              {"links_bijective", report.links_bijective},
              {"bad_fibers", report.bad_fibers},
              {"link_failures", report.link_failures},
              {"reason", report.reason}};
}

Json to_json(const TableReport& report) {
  Json rows = Json::array();
  for (const TableRow& row : report.rows) {
    Json rj{{"key", row.key},
            {"block", row.block},
            {"entry", row.entry},
            {"construction", row.construction},
            {"explicit_poset", row.explicit_poset},
            {"expected", Json{{"signature", to_string(row.expected_kind)},
                              {"dim", row.expected_dim}}},
            {"dim", row.dim},
            {"f_vector", row.f_vector},
            {"pass", row.pass}};
    if (row.error.empty()) {
      rj["verdict"] = to_json(row.verdict);
    } else {
      rj["error"] = row.error;
    }
    rows.push_back(std::move(rj));
  }
  return Json{{"format_version", kFormatVersion},
              {"n", report.n},
              {"r", report.r},
              {"degenerate_context", report.degenerate_context},
              {"rows", std::move(rows)},
              {"pass", report.pass}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace deltacx
