#include "deltacx/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace deltacx {

namespace {

struct Overflow {};

// Checked machine-word arithmetic; throws Overflow so the caller can retry
// with BigInt.
struct Checked {
  static std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t abs(std::int64_t x) {
    if (x == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return x < 0 ? -x : x;
  }
  static std::int64_t div_floor(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  }
};

struct Exact {
  static BigInt sub(const BigInt& x, const BigInt& y) { return x - y; }
  static BigInt mul(const BigInt& x, const BigInt& y) { return x * y; }
  static BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
  static BigInt div_floor(const BigInt& x, const BigInt& y) {
    BigInt q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  }
};

template <typename T, typename Ops>
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m) : rows_(m.rows), cols_(m.cols) {
    col_.resize(m.cols);
    row_.resize(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j) {
      for (const auto& [i, v] : m.columns[j]) {
        if (v == 0) continue;
        col_[j][i] = T(v);
        row_[i].insert(j);
      }
    }
  }

  // Returns |pivot| values of a diagonal form equivalent to the input.
  std::vector<T> run() {
    std::vector<T> diag;
    // pass 1: unit pivots in column order
    for (std::size_t j = 0; j < cols_; ++j) {
      if (col_[j].empty()) continue;
      std::size_t best_row = rows_;
      std::size_t best_fill = 0;
      for (const auto& [i, v] : col_[j]) {
        if (Ops::abs(v) != 1) continue;
        if (best_row == rows_ || row_[i].size() < best_fill) {
          best_row = i;
          best_fill = row_[i].size();
        }
      }
      if (best_row != rows_) diag.push_back(eliminate(best_row, j));
    }
    // pass 2: general pivots of minimal magnitude
    while (true) {
      std::size_t pr = rows_, pc = cols_;
      T best{};
      for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : col_[j]) {
          T a = Ops::abs(v);
          if (pr == rows_ || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows_) break;
      diag.push_back(eliminate(pr, pc));
    }
    return diag;
  }

 private:
  void set(std::size_t i, std::size_t j, const T& v) {
    if (v == 0) {
      col_[j].erase(i);
      row_[i].erase(j);
    } else {
      col_[j][i] = v;
      row_[i].insert(j);
    }
  }

  T get(std::size_t i, std::size_t j) const {
    auto it = col_[j].find(i);
    return it == col_[j].end() ? T(0) : it->second;
  }

  // col_k -= q * col_j
  void column_op(std::size_t k, std::size_t j, const T& q) {
    const auto source = col_[j];
    for (const auto& [i, v] : source) set(i, k, Ops::sub(get(i, k), Ops::mul(q, v)));
  }

  // row_k -= q * row_i
  void row_op(std::size_t k, std::size_t i, const T& q) {
    const auto cols = row_[i];
    for (std::size_t j : cols) set(k, j, Ops::sub(get(k, j), Ops::mul(q, get(i, j))));
  }

  // Clears row r and column c around the pivot at (r, c), shrinking the
  // pivot by Euclidean steps when it does not divide its row or column.
  T eliminate(std::size_t r, std::size_t c) {
    while (true) {
      const T p = get(r, c);
      bool moved = false;
      const std::vector<std::size_t> others_in_row(row_[r].begin(), row_[r].end());
      for (std::size_t k : others_in_row) {
        if (k == c) continue;
        column_op(k, c, Ops::div_floor(get(r, k), p));
      }
      std::vector<std::size_t> others_in_col;
      for (const auto& [i, v] : col_[c]) {
        if (i != r) others_in_col.push_back(i);
      }
      for (std::size_t i : others_in_col) row_op(i, r, Ops::div_floor(get(i, c), p));
      // any remainder smaller than |p| becomes the new pivot
      std::size_t nr = r, nc = c;
      T best = Ops::abs(p);
      for (std::size_t k : row_[r]) {
        if (k == c) continue;
        T a = Ops::abs(get(r, k));
        if (a < best) {
          best = a;
          nr = r;
          nc = k;
          moved = true;
        }
      }
      for (const auto& [i, v] : col_[c]) {
        if (i == r) continue;
        T a = Ops::abs(v);
        if (a < best) {
          best = a;
          nr = i;
          nc = c;
          moved = true;
        }
      }
      if (!moved) break;
      r = nr;
      c = nc;
    }
    const T p = Ops::abs(get(r, c));
    // row r and column c are now zero apart from the pivot
    const std::vector<std::size_t> rest(row_[r].begin(), row_[r].end());
    for (std::size_t k : rest) set(r, k, T(0));
    std::vector<std::size_t> rest_c;
    for (const auto& [i, v] : col_[c]) rest_c.push_back(i);
    for (std::size_t i : rest_c) set(i, c, T(0));
    return p;
  }

  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, T>> col_;
  std::vector<std::set<std::size_t>> row_;
};

std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
  // (a, b) -> (gcd, lcm) pairwise yields a divisibility chain
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& rows) {
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  m.columns.resize(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (rows[i][j] != 0) m.columns[j].emplace_back(i, rows[i][j]);
    }
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) out[i][j] = v;
  }
  return out;
}

std::vector<BoundaryMatrix> boundary_matrices(const RegularDeltaComplex& complex) {
  std::vector<BoundaryMatrix> out;
  for (int d = 1; d <= complex.dim(); ++d) {
    BoundaryMatrix bm;
    bm.degree = d;
    bm.matrix.rows = complex.cells_of_dim(d - 1).size();
    bm.matrix.cols = complex.cells_of_dim(d).size();
    bm.matrix.columns.resize(bm.matrix.cols);
    for (CellId c : complex.cells_of_dim(d)) {
      std::map<std::size_t, std::int64_t> acc;
      const Cell& cell = complex.cell(c);
      for (std::size_t i = 0; i < cell.facets.size(); ++i) {
        acc[complex.index_in_dim(cell.facets[i])] += (i % 2 == 0) ? 1 : -1;
      }
      auto& column = bm.matrix.columns[complex.index_in_dim(c)];
      for (const auto& [row, v] : acc) {
        if (v != 0) column.emplace_back(row, v);
      }
    }
    out.push_back(std::move(bm));
  }
  return out;
}

SmithResult smith_normal_form(const SparseMatrix& m) {
  std::vector<BigInt> diag;
  try {
    for (std::int64_t v : Eliminator<std::int64_t, Checked>(m).run()) diag.emplace_back(v);
  } catch (const Overflow&) {
    diag = Eliminator<BigInt, Exact>(m).run();
  }
  SmithResult result;
  result.rank = diag.size();
  result.invariant_factors = normalize_diagonal(std::move(diag));
  return result;
}

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense identity(std::size_t n) {
  Dense id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

Dense multiply(const Dense& x, const Dense& y) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  const std::size_t m = k == 0 ? 0 : y.front().size();
  Dense out(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (x[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][t] * y[t][j];
    }
  }
  return out;
}

TrackedSmith smith_normal_form_tracked(const Dense& input) {
  // Maintains input = left * work * right. A row op on work (row_a += q
  // row_b) is undone on left by col_b -= q col_a; column ops symmetric.
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input.front().size();
  Dense work = input;
  Dense left = identity(rows);
  Dense right = identity(cols);

  auto row_add = [&](std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) work[a][j] += q * work[b][j];
    for (std::size_t i = 0; i < rows; ++i) left[i][b] -= q * left[i][a];
  };
  auto col_add = [&](std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) work[i][a] += q * work[i][b];
    for (std::size_t j = 0; j < cols; ++j) right[b][j] -= q * right[a][j];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(work[a], work[b]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(left[i][a], left[i][b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(work[i][a], work[i][b]);
    std::swap(right[a], right[b]);
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) work[a][j] = -work[a][j];
    for (std::size_t i = 0; i < rows; ++i) left[i][a] = -left[i][a];
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry in the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (work[i][j] == 0) continue;
          if (pr == rows || abs(work[i][j]) < abs(work[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      row_swap(t, pr);
      col_swap(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (work[i][t] == 0) continue;
        row_add(i, t, -(work[i][t] / work[t][t]));
        if (work[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (work[t][j] == 0) continue;
        col_add(j, t, -(work[t][j] / work[t][t]));
        if (work[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (work[i][j] % work[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      row_add(t, bad_row, 1);
    }
    if (t < rows && t < cols && work[t][t] < 0) row_negate(t);
  }
  TrackedSmith out;
  for (std::size_t t = 0; t < n; ++t) {
    if (work[t][t] != 0) out.invariant_factors.push_back(work[t][t]);
  }
  out.left = std::move(left);
  out.diagonal = std::move(work);
  out.right = std::move(right);
  return out;
}

std::size_t rank_mod2(const SparseMatrix& m) {
  // columns as packed bit vectors; reduce against pivots keyed by low bit
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_at(m.rows);
  std::size_t rank = 0;
  for (const auto& column : m.columns) {
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& [i, v] : column) {
      if (v % 2 != 0) bits[i / 64] ^= std::uint64_t{1} << (i % 64);
    }
    while (true) {
      std::size_t low = m.rows;
      for (std::size_t w = words; w-- > 0;) {
        if (bits[w] != 0) {
          low = w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(bits[w]));
          break;
        }
      }
      if (low == m.rows) break;
      if (pivot_at[low].empty()) {
        pivot_at[low] = std::move(bits);
        ++rank;
        break;
      }
      for (std::size_t w = 0; w < words; ++w) bits[w] ^= pivot_at[low][w];
    }
  }
  return rank;
}

const DegreeHomology& HomologyProfile::at(int d) const {
  static const DegreeHomology kZero{};
  if (d < 0 || static_cast<std::size_t>(d) >= degrees.size()) return kZero;
  return degrees[static_cast<std::size_t>(d)];
}

bool HomologyProfile::all_zero() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeHomology& g) { return g.is_zero(); });
}

std::vector<int> HomologyProfile::support() const {
  std::vector<int> out;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    if (!degrees[d].is_zero()) out.push_back(static_cast<int>(d));
  }
  return out;
}

namespace {

std::string subscript(int d) {
  static const char* kDigits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string digits = std::to_string(d), out;
  for (char ch : digits) out += kDigits[ch - '0'];
  return out;
}

}  // namespace

std::string HomologyProfile::to_string() const {
  const std::string h = reduced ? "H̃" : "H";
  const std::string ring = coefficients == Coefficients::kIntegers ? "ℤ" : "ℤ/2";
  std::ostringstream out;
  bool any = false;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    const DegreeHomology& g = degrees[d];
    if (g.is_zero()) continue;
    if (any) out << '\n';
    any = true;
    out << h << subscript(static_cast<int>(d)) << " = ";
    std::vector<std::string> parts;
    if (g.rank == 1) parts.push_back(ring);
    if (g.rank > 1) parts.push_back(ring + "^" + std::to_string(g.rank));
    for (std::uint64_t t : g.torsion) parts.push_back("ℤ/" + std::to_string(t));
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " ⊕ " : "") << parts[i];
  }
  if (!any) out << h << "_* = 0";
  return out.str();
}

HomologyProfile homology(const RegularDeltaComplex& complex,
                         Coefficients coefficients, bool reduced) {
  HomologyProfile profile;
  profile.reduced = reduced;
  profile.coefficients = coefficients;
  const int top = complex.dim();
  if (top < 0) return profile;

  std::vector<BoundaryMatrix> bms = boundary_matrices(complex);
  struct Reduced {
    std::size_t rank = 0;
    std::vector<std::uint64_t> torsion;
  };
  // per_degree[d] describes the boundary map C_d -> C_{d-1}
  std::vector<Reduced> per_degree(static_cast<std::size_t>(top) + 2);
  for (const BoundaryMatrix& bm : bms) {
    Reduced& r = per_degree[static_cast<std::size_t>(bm.degree)];
    if (coefficients == Coefficients::kMod2) {
      r.rank = rank_mod2(bm.matrix);
      continue;
    }
    SmithResult snf = smith_normal_form(bm.matrix);
    r.rank = snf.rank;
    for (const BigInt& f : snf.invariant_factors) {
      if (f == 1) continue;
      if (f > std::numeric_limits<std::uint64_t>::max()) {
        throw Error("torsion coefficient exceeds 64 bits");
      }
      r.torsion.push_back(f.convert_to<std::uint64_t>());
    }
  }

  profile.degrees.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    const std::size_t cells = complex.cells_of_dim(d).size();
    DegreeHomology& g = profile.degrees[du];
    g.rank = cells - per_degree[du].rank - per_degree[du + 1].rank;
    g.torsion = per_degree[du + 1].torsion;
  }
  if (reduced) profile.degrees[0].rank -= 1;
  return profile;
}

long long euler_characteristic(const RegularDeltaComplex& complex) {
  long long chi = 0;
  for (int d = 0; d <= complex.dim(); ++d) {
    const auto n = static_cast<long long>(complex.cells_of_dim(d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

long long euler_characteristic(const HomologyProfile& profile, bool nonempty) {
  long long chi = 0;
  for (std::size_t d = 0; d < profile.degrees.size(); ++d) {
    const auto r = static_cast<long long>(profile.degrees[d].rank);
    chi += (d % 2 == 0) ? r : -r;
  }
  if (profile.reduced && nonempty) chi += 1;
  return chi;
}

HomologyProfile sphere_profile(int n, int dim) {
  HomologyProfile p;
  p.degrees.resize(static_cast<std::size_t>(std::max(dim, n) + 1));
  if (n >= 0) p.degrees[static_cast<std::size_t>(n)].rank = 1;
  return p;
}

}  // namespace deltacx
