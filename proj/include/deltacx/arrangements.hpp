#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "deltacx/complex.hpp"
#include "deltacx/group_action.hpp"
#include "deltacx/mfs_combinatorics.hpp"

namespace deltacx {

enum class DivisorLabel { kHorizontal, kVertical, kUnlabeled };

std::string to_string(DivisorLabel label);

struct DivisorSpec {
  std::string name;
  Rational coefficient{1};  // in (0, 1]; only coefficient 1 yields a vertex
  DivisorLabel label = DivisorLabel::kUnlabeled;
  int factor = 0;  // product arrangements: 0 = base factor, 1 = fibre factor
};

// k generic hyperplanes in P^N.
struct GenericHyperplanes {
  int ambient_dim = 1;
  std::vector<DivisorSpec> divisors;
};

// Generic hyperplanes pulled back from each factor of P^a x P^r.
struct ProductHyperplanes {
  int a = 1;
  int r = 1;
  std::vector<DivisorSpec> divisors;
};

struct QuadricExample {
  int n = 3;
};

// A complex supplied cell by cell. Unlabelled vertices count as horizontal.
struct ExplicitPoset {
  RegularDeltaComplex complex;
  std::map<VertexId, VertexLabel> labels;
  std::vector<GroupAction> actions;
};

using ArrangementSpec =
    std::variant<GenericHyperplanes, ProductHyperplanes, QuadricExample, ExplicitPoset>;

// Violation of an arrangement invariant (coefficient range, label conflict,
// parameter range, non-regular explicit complex).
class SpecError : public Error {
 public:
  using Error::Error;
};

// Dual complex of k generic hyperplanes in P^N: every set of at most N
// hyperplanes spans a cell. k = 0 gives the empty complex.
RegularDeltaComplex build_generic_hyperplanes(int N, int k);

// join(generic(a, k1), generic(r, k2)); first-factor vertices vertical,
// second-factor vertices horizontal.
LabeledComplex build_product_arrangement(int a, int r, int k1, int k2);

struct QuadricBuild {
  LabeledComplex labeled;
  GroupAction tau;
  std::vector<std::string> vertex_names;  // indexed by vertex label
};

// S^0_x * S^0_y * nonsimplicial_sphere(n-2) with the involution swapping the
// x pair, the y pair and the two top cells of the last factor.
QuadricBuild build_quadric_example(int n);

struct BuiltArrangement {
  LabeledComplex labeled;
  std::vector<GroupAction> actions;
  std::vector<std::string> vertex_names;  // indexed by vertex label, may be empty
  std::vector<DivisorSpec> dropped;       // coefficient < 1, kept for reporting
};

// Throws SpecError when an ArrangementSpec invariant fails.
void check_spec(const ArrangementSpec& spec);

BuiltArrangement dual_complex_from_spec(const ArrangementSpec& spec);

}  // namespace deltacx
