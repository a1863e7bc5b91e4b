#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "deltacx/arrangements.hpp"
#include "deltacx/classify.hpp"
#include "deltacx/complex.hpp"
#include "deltacx/group_action.hpp"
#include "deltacx/homology.hpp"
#include "deltacx/mfs_combinatorics.hpp"
#include "deltacx/table.hpp"

namespace deltacx {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Malformed document. `path` is a JSON pointer to the offending value.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error((path.empty() ? std::string("/") : path) + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

struct ComplexDocument {
  RegularDeltaComplex complex;
  std::vector<std::string> vertex_names;  // aligned with vertex_labels(), optional
  std::optional<std::map<VertexId, VertexLabel>> labels;
  std::vector<GroupAction> actions;
};

// Cells may carry arbitrary unique ids; they are renumbered to their
// position in the cells array. Does not validate regularity.
ComplexDocument parse_complex_document(const Json& j);
Json to_json(const ComplexDocument& doc);
ComplexDocument make_document(const RegularDeltaComplex& complex);
ComplexDocument make_document(const BuiltArrangement& built);

ArrangementSpec parse_arrangement_spec(const Json& j);
Json to_json(const ArrangementSpec& spec);

Json to_json(const HomologyProfile& profile);
Json to_json(const PLVerdict& verdict);
Json to_json(const ValidationReport& report);
Json to_json(const ActionReport& report);
Json to_json(const RestrictionReport& report);
Json to_json(const CoverReport& report);
Json to_json(const TableReport& report);

Json read_json_file(const std::filesystem::path& path);
// Two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace deltacx
