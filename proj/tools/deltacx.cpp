// Command-line front end for the deltacx library.
//
// Exit codes: 0 success, 1 domain error (invalid complex, failed check,
// failing table rows), 2 I/O, parse or usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "deltacx/arrangements.hpp"
#include "deltacx/classify.hpp"
#include "deltacx/constructions.hpp"
#include "deltacx/group_action.hpp"
#include "deltacx/homology.hpp"
#include "deltacx/serialization.hpp"
#include "deltacx/table.hpp"

namespace {

using namespace deltacx;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ComplexDocument load_document(const std::string& path) {
  return parse_complex_document(read_json_file(path));
}

// Parses and validates; invalid complexes are a domain error.
ComplexDocument load_valid(const std::string& path) {
  ComplexDocument doc = load_document(path);
  require_valid(doc.complex);
  return doc;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int cmd_validate(const std::string& path, bool as_json) {
  const ComplexDocument doc = load_document(path);
  const ValidationReport report = validate(doc.complex);
  Json actions = Json::array();
  bool ok = report.ok();
  if (ok) {
    for (const GroupAction& a : doc.actions) {
      const ActionReport ar = verify_action(doc.complex, a);
      ok = ok && ar.ok;
      Json aj = to_json(ar);
      aj["name"] = a.name;
      actions.push_back(std::move(aj));
    }
  }
  if (as_json) {
    Json j = to_json(report);
    j["actions"] = std::move(actions);
    j["ok"] = ok;
    std::cout << dump(j);
  } else if (!report.ok()) {
    std::cout << "invalid: " << report.summary() << "\n";
  } else {
    std::cout << "valid regular Delta-complex: dim " << doc.complex.dim() << ", "
              << doc.complex.size() << " cells\n";
    for (const Json& a : actions) {
      std::cout << "action " << a["name"].get<std::string>() << ": "
                << (a["ok"].get<bool>() ? "ok, order " + std::to_string(a["order"].get<std::size_t>())
                                        : "invalid")
                << "\n";
    }
  }
  return ok ? kOk : kDomain;
}

int cmd_homology(const std::string& path, const std::string& coefficients, bool unreduced,
                 bool as_json) {
  const ComplexDocument doc = load_valid(path);
  const Coefficients c = coefficients == "z2" ? Coefficients::kMod2 : Coefficients::kIntegers;
  const HomologyProfile p = homology(doc.complex, c, !unreduced);
  std::cout << (as_json ? dump(to_json(p)) : p.to_string() + "\n");
  return kOk;
}

int cmd_link(const std::string& path, std::uint64_t cell, const std::string& out) {
  const ComplexDocument doc = load_valid(path);
  if (cell >= doc.complex.size()) throw UnknownCellError(static_cast<CellId>(cell));
  emit(dump(to_json(make_document(link(doc.complex, static_cast<CellId>(cell))))), out);
  return kOk;
}

int cmd_join(const std::string& a, const std::string& b, const std::string& out) {
  const ComplexDocument da = load_valid(a);
  const ComplexDocument db = load_valid(b);
  emit(dump(to_json(make_document(join(da.complex, db.complex)))), out);
  return kOk;
}

int cmd_subdivide(const std::string& path, const std::string& out) {
  const ComplexDocument doc = load_valid(path);
  emit(dump(to_json(make_document(barycentric_subdivision(doc.complex).complex))), out);
  return kOk;
}

int cmd_quotient(const std::string& path, const std::string& action_name,
                 const std::string& out) {
  const ComplexDocument doc = load_valid(path);
  const GroupAction* action = nullptr;
  for (const GroupAction& a : doc.actions) {
    if (action_name.empty() || a.name == action_name) {
      action = &a;
      break;
    }
  }
  if (action == nullptr) {
    throw UsageError(action_name.empty() ? "document carries no action"
                                         : "no action named '" + action_name + "'");
  }
  const Quotient q = quotient(doc.complex, *action);
  ComplexDocument result = make_document(q.complex);
  // labels survive when no subdivision was needed and orbits agree on them
  if (doc.labels && q.subdivisions == 0) {
    std::map<VertexId, VertexLabel> labels;
    bool consistent = true;
    for (CellId v : doc.complex.cells_of_dim(0)) {
      const VertexId image = q.complex.cell(q.projection(v)).vertices[0];
      const VertexLabel label = doc.labels->at(doc.complex.cell(v).vertices[0]);
      auto [it, inserted] = labels.emplace(image, label);
      if (!inserted && it->second != label) consistent = false;
    }
    if (consistent) result.labels = std::move(labels);
  }
  emit(dump(to_json(result)), out);
  std::cerr << "quotient by '" << action->name << "' after " << q.subdivisions
            << " subdivision(s): " << q.complex.size() << " cells\n";
  return kOk;
}

int cmd_classify(const std::string& path, std::optional<int> n, std::optional<int> r,
                 bool as_json) {
  const ComplexDocument doc = load_valid(path);
  std::optional<ClassifyContext> context;
  if (n || r || doc.labels) context = ClassifyContext{n, r, doc.labels};
  const PLVerdict v = classify(doc.complex, context);
  if (as_json) {
    std::cout << dump(to_json(v));
  } else {
    std::cout << v.summary() << "\n"
              << v.profile.to_string() << "\n"
              << "manifold-consistent links: " << (v.manifold_consistent ? "yes" : "no")
              << "\n";
    if (v.join_of_labeled_parts) {
      std::cout << "join of labelled parts: " << (*v.join_of_labeled_parts ? "yes" : "no")
                << "\n";
    }
    if (v.degenerate_context) std::cout << "note: degenerate context r = n\n";
  }
  return kOk;
}

int cmd_build(const std::string& spec_path, const std::string& out) {
  const ArrangementSpec spec = parse_arrangement_spec(read_json_file(spec_path));
  const BuiltArrangement built = dual_complex_from_spec(spec);
  for (const DivisorSpec& d : built.dropped) {
    std::cerr << "divisor '" << d.name << "' has coefficient < 1 and contributes no vertex\n";
  }
  emit(dump(to_json(make_document(built))), out);
  return kOk;
}

int cmd_verify_table(int n, int r, bool as_json, const std::string& out) {
  if (n < 3 || n > 6 || r < 1 || r > n) {
    throw UsageError("verify-table needs 3 <= n <= 6 and 1 <= r <= n");
  }
  const TableReport report = verify_table(n, r);
  const std::string json = dump(to_json(report));
  if (!out.empty()) write_text_file(out, json);
  std::cout << (as_json ? json : to_text(report));
  return report.pass ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular Delta-complexes: construction, homology and classification"};
  app.require_subcommand(1);

  std::string path, path_b, out, coefficients = "z", action_name;
  bool as_json = false, unreduced = false, reduced = false;
  std::uint64_t cell = 0;
  std::optional<int> ctx_n, ctx_r;
  int n = 0, r = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check regularity and any attached actions");
  validate_cmd->add_option("path", path, "ComplexDocument")->required();
  validate_cmd->add_flag("--json", as_json, "Print a JSON report");

  auto* homology_cmd = app.add_subcommand("homology", "Homology profile");
  homology_cmd->add_option("path", path, "ComplexDocument")->required();
  homology_cmd->add_option("--coefficients", coefficients, "z or z2")
      ->check(CLI::IsMember({"z", "z2"}));
  auto* reduced_flag = homology_cmd->add_flag("--reduced", reduced, "Reduced homology (default)");
  homology_cmd->add_flag("--unreduced", unreduced, "Unreduced homology")->excludes(reduced_flag);
  homology_cmd->add_flag("--json", as_json, "Print JSON");

  auto* link_cmd = app.add_subcommand("link", "Link of a cell");
  link_cmd->add_option("path", path, "ComplexDocument")->required();
  link_cmd->add_option("cell", cell, "Cell id")->required();
  link_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* join_cmd = app.add_subcommand("join", "Join of two complexes");
  join_cmd->add_option("a", path, "First ComplexDocument")->required();
  join_cmd->add_option("b", path_b, "Second ComplexDocument")->required();
  join_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide_cmd->add_option("path", path, "ComplexDocument")->required();
  subdivide_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by an attached action");
  quotient_cmd->add_option("path", path, "ComplexDocument with actions")->required();
  quotient_cmd->add_option("action", action_name, "Action name (default: the first)");
  quotient_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Structural and homological verdict");
  classify_cmd->add_option("path", path, "ComplexDocument")->required();
  classify_cmd->add_option("--n", ctx_n, "Context: dim Y - 1");
  classify_cmd->add_option("--r", ctx_r, "Context: relative dimension");
  classify_cmd->add_flag("--json", as_json, "Print JSON");

  auto* build_cmd = app.add_subcommand("build", "Build the dual complex of an ArrangementSpec");
  build_cmd->add_option("spec", path, "ArrangementSpec")->required();
  build_cmd->add_option("--out", out, "Output path (default stdout)");

  auto* table_cmd = app.add_subcommand("verify-table", "Check one witness per table entry");
  table_cmd->add_option("--n", n, "3..6")->required();
  table_cmd->add_option("--r", r, "1..n")->required();
  table_cmd->add_flag("--json", as_json, "Print the JSON report");
  table_cmd->add_option("--out", out, "Also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, as_json);
    if (homology_cmd->parsed()) return cmd_homology(path, coefficients, unreduced, as_json);
    if (link_cmd->parsed()) return cmd_link(path, cell, out);
    if (join_cmd->parsed()) return cmd_join(path, path_b, out);
    if (subdivide_cmd->parsed()) return cmd_subdivide(path, out);
    if (quotient_cmd->parsed()) return cmd_quotient(path, action_name, out);
    if (classify_cmd->parsed()) return cmd_classify(path, ctx_n, ctx_r, as_json);
    if (build_cmd->parsed()) return cmd_build(path, out);
    if (table_cmd->parsed()) return cmd_verify_table(n, r, as_json, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kInput;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kInput;
}
