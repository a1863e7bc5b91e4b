#pragma once

#include <string>
#include <vector>

#include "deltacx/classify.hpp"

namespace deltacx {

struct TableRow {
  std::string key;           // "<block>/<entry>", unique within a report
  std::string block;         // rho=1, rho=2, dimZ=1, dimZ=2
  std::string entry;         // symbolic table entry, e.g. "S^{n-r}"
  std::string construction;  // witness used to realize the entry
  bool explicit_poset = false;
  SignatureKind expected_kind = SignatureKind::kUnrecognized;
  int expected_dim = -1;
  int dim = -1;
  std::vector<std::size_t> f_vector;
  PLVerdict verdict;
  std::string error;  // set when the witness could not be built
  bool pass = false;
};

struct TableReport {
  int n = 0;
  int r = 0;
  bool degenerate_context = false;  // r == n
  std::vector<TableRow> rows;
  bool pass = false;
};

// One witness per table entry for the given (n, r). Throws std::out_of_range
// unless 3 <= n <= 6 and 1 <= r <= n. Rows are built concurrently and
// reported in a fixed order.
TableReport verify_table(int n, int r);

std::string to_text(const TableReport& report);

}  // namespace deltacx
