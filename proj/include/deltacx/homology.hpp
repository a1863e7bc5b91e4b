#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deltacx/complex.hpp"

namespace deltacx {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix stored by columns; entries within a column are
// sorted by row and nonzero.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
  std::vector<std::vector<std::int64_t>> to_dense() const;
};

// Boundary map in degree d: rows are (d-1)-cells, columns d-cells, both in
// cells_of_dim order. Column j holds sum_i (-1)^i [facet_i].
struct BoundaryMatrix {
  int degree = 0;
  SparseMatrix matrix;
};

std::vector<BoundaryMatrix> boundary_matrices(const RegularDeltaComplex& complex);

struct SmithResult {
  // Nonzero diagonal entries d_1 | d_2 | ... (all positive).
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

// Sparse elimination with minimal-|pivot| choice in machine words; restarts
// in arbitrary precision if any intermediate would overflow.
SmithResult smith_normal_form(const SparseMatrix& m);

// Dense variant that also records the transformations: input = left * diag
// * right with left, right unimodular. Intended for small matrices.
struct TrackedSmith {
  std::vector<std::vector<BigInt>> left;
  std::vector<std::vector<BigInt>> diagonal;
  std::vector<std::vector<BigInt>> right;
  std::vector<BigInt> invariant_factors;
};
TrackedSmith smith_normal_form_tracked(const std::vector<std::vector<BigInt>>& m);

std::vector<std::vector<BigInt>> multiply(const std::vector<std::vector<BigInt>>& x,
                                          const std::vector<std::vector<BigInt>>& y);

// Rank over Z/2 (independent bit-packed elimination).
std::size_t rank_mod2(const SparseMatrix& m);

enum class Coefficients { kIntegers, kMod2 };

struct DegreeHomology {
  std::size_t rank = 0;
  std::vector<std::uint64_t> torsion;  // invariant factors > 1; empty over Z/2

  bool operator==(const DegreeHomology&) const = default;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

struct HomologyProfile {
  bool reduced = true;
  Coefficients coefficients = Coefficients::kIntegers;
  std::vector<DegreeHomology> degrees;  // index = degree, 0..dim

  bool operator==(const HomologyProfile&) const = default;
  const DegreeHomology& at(int d) const;
  bool all_zero() const;
  // Degrees carrying a nonzero group.
  std::vector<int> support() const;
  std::string to_string() const;
};

HomologyProfile homology(const RegularDeltaComplex& complex,
                         Coefficients coefficients = Coefficients::kIntegers,
                         bool reduced = true);

long long euler_characteristic(const RegularDeltaComplex& complex);
// Alternating sum of ranks of an unreduced profile (reduced profiles are
// shifted back by one in degree 0 when nonempty).
long long euler_characteristic(const HomologyProfile& profile, bool nonempty);

// Profile of S^n (reduced: Z in degree n) padded to `dim` degrees.
HomologyProfile sphere_profile(int n, int dim);

}  // namespace deltacx
