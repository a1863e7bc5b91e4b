#include "deltacx/table.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "deltacx/arrangements.hpp"
#include "deltacx/constructions.hpp"
#include "deltacx/group_action.hpp"

namespace deltacx {

namespace {

struct Witness {
  std::string construction;
  bool explicit_poset = false;
  std::function<LabeledComplex()> build;
};

struct RowPlan {
  TableRow row;
  Witness witness;
};

LabeledComplex all_horizontal(RegularDeltaComplex complex) {
  LabeledComplex lc;
  for (VertexId v : complex.vertex_labels()) lc.labels[v] = VertexLabel::kHorizontal;
  lc.complex = std::move(complex);
  return lc;
}

std::string product_name(int a, int r, int k1, int k2) {
  return "product P^" + std::to_string(a) + " x P^" + std::to_string(r) +
         ", k=(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
}

Witness product_witness(int a, int r, int k1, int k2) {
  return {product_name(a, r, k1, k2), false,
          [=] { return build_product_arrangement(a, r, k1, k2); }};
}

void add(std::vector<RowPlan>& plan, const std::string& block, const std::string& entry,
         SignatureKind kind, int dim, Witness witness) {
  RowPlan p;
  p.row.key = block + "/" + entry;
  p.row.block = block;
  p.row.entry = entry;
  p.row.expected_kind = kind;
  p.row.expected_dim = dim;
  p.row.construction = witness.construction;
  p.row.explicit_poset = witness.explicit_poset;
  p.witness = std::move(witness);
  plan.push_back(std::move(p));
}

// Balls B^0..B^n inside a product P^a x P^b (a + b = n + 1).
void add_product_balls(std::vector<RowPlan>& plan, const std::string& block, int n, int a,
                       int b) {
  for (int m = 0; m <= n; ++m) {
    const int k1 = std::min(m + 1, a);
    const int k2 = m + 1 - k1;
    add(plan, block, "B^" + std::to_string(m), SignatureKind::kBall, m,
        product_witness(a, b, k1, k2));
  }
}

std::vector<RowPlan> make_plan(int n, int r) {
  std::vector<RowPlan> plan;
  const auto sphere = SignatureKind::kSphere;

  for (int m = 0; m <= n; ++m) {
    add(plan, "rho=1", "B^" + std::to_string(m), SignatureKind::kBall, m,
        {"generic hyperplanes N=" + std::to_string(n + 1) + ", k=" + std::to_string(m + 1),
         false, [=] { return all_horizontal(build_generic_hyperplanes(n + 1, m + 1)); }});
  }
  add(plan, "rho=1", "S^n", sphere, n,
      {"generic hyperplanes N=" + std::to_string(n + 1) + ", k=" + std::to_string(n + 2),
       false, [=] { return all_horizontal(build_generic_hyperplanes(n + 1, n + 2)); }});

  const int a = n - r + 1;
  add_product_balls(plan, "rho=2", n, a, r);
  add(plan, "rho=2", "S^{r-1}", sphere, r - 1, product_witness(a, r, 0, r + 1));
  add(plan, "rho=2", "S^{n-r}", sphere, n - r, product_witness(a, r, a + 1, 0));
  add(plan, "rho=2", "S^n", sphere, n, product_witness(a, r, a + 1, r + 1));

  add_product_balls(plan, "dimZ=1", n, 1, n);
  add(plan, "dimZ=1", "S^0", sphere, 0,
      {"explicit poset: two disjoint horizontal sections", true,
       [] { return all_horizontal(boundary_simplex(1)); }});
  add(plan, "dimZ=1", "S^{n-1}", sphere, n - 1, product_witness(1, n, 0, n + 1));
  add(plan, "dimZ=1", "S^n", sphere, n, product_witness(1, n, 2, n + 1));

  add_product_balls(plan, "dimZ=2", n, 2, n - 1);
  add(plan, "dimZ=2", "S^1", sphere, 1, product_witness(2, n - 1, 3, 0));
  add(plan, "dimZ=2", "S^{n-2}", sphere, n - 2, product_witness(2, n - 1, 0, n));
  add(plan, "dimZ=2", "S^{n-1}", sphere, n - 1,
      {"explicit poset: two " + std::to_string(n - 1) + "-simplices glued along the boundary",
       true, [=] { return all_horizontal(nonsimplicial_sphere(n - 1)); }});
  add(plan, "dimZ=2", "S^n", sphere, n, product_witness(2, n - 1, 3, n));
  add(plan, "dimZ=2", "P^2(R)*S^{n-3}", SignatureKind::kRP2JoinSphere, n - 3,
      {"quadric example n=" + std::to_string(n) + " modulo its involution", false, [=] {
         QuadricBuild q = build_quadric_example(n);
         return all_horizontal(quotient(q.labeled.complex, q.tau).complex);
       }});
  return plan;
}

void run_row(RowPlan& p, int n, int r) {
  TableRow& row = p.row;
  try {
    const LabeledComplex lc = p.witness.build();
    row.dim = lc.complex.dim();
    row.f_vector = lc.complex.f_vector();
    row.verdict = classify(lc.complex, ClassifyContext{n, r, std::nullopt});
    row.pass = row.verdict.signature == row.expected_kind &&
               row.verdict.signature_dim == row.expected_dim;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.pass = false;
  }
}

std::string expected_text(SignatureKind kind, int dim) {
  switch (kind) {
    case SignatureKind::kBall: return "B^" + std::to_string(dim);
    case SignatureKind::kSphere: return "S^" + std::to_string(dim);
    case SignatureKind::kRP2JoinSphere: return "P^2(R)*S^" + std::to_string(dim);
    case SignatureKind::kUnrecognized: break;
  }
  return "?";
}

}  // namespace

TableReport verify_table(int n, int r) {
  if (n < 3 || n > 6 || r < 1 || r > n) {
    throw std::out_of_range("verify-table needs 3 <= n <= 6 and 1 <= r <= n");
  }
  std::vector<RowPlan> plan = make_plan(n, r);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, plan.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < plan.size(); i += workers) run_row(plan[i], n, r);
      });
    }
  }
  TableReport report;
  report.n = n;
  report.r = r;
  report.degenerate_context = r == n;
  for (RowPlan& p : plan) report.rows.push_back(std::move(p.row));
  report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                            [](const TableRow& row) { return row.pass; });
  return report;
}

std::string to_text(const TableReport& report) {
  std::ostringstream out;
  out << "verify-table n=" << report.n << " r=" << report.r;
  if (report.degenerate_context) out << " (degenerate context r = n)";
  out << "\n";
  out << std::left << std::setw(8) << "block" << std::setw(18) << "entry" << std::setw(14)
      << "expected" << std::setw(58) << "verdict" << "result  witness\n";
  for (const TableRow& row : report.rows) {
    const std::string verdict = row.error.empty() ? row.verdict.summary() : "error: " + row.error;
    std::string witness = row.construction;
    if (row.explicit_poset) witness += " [explicit poset]";
    out << std::left << std::setw(8) << row.block << std::setw(18) << row.entry
        << std::setw(14) << expected_text(row.expected_kind, row.expected_dim)
        << std::setw(58) << verdict << std::setw(8) << (row.pass ? "PASS" : "FAIL") << witness
        << "\n";
  }
  const auto passed = std::count_if(report.rows.begin(), report.rows.end(),
                                    [](const TableRow& row) { return row.pass; });
  out << "overall: " << (report.pass ? "PASS" : "FAIL") << " (" << passed << "/"
      << report.rows.size() << " rows)\n";
  return out.str();
}

}  // namespace deltacx
