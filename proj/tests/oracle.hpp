#pragma once

// Test-only reference implementations. Nothing here calls into the
// library's homology code: chain complexes are rebuilt from scratch and
// ranks come from fraction-free elimination or arithmetic mod p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deltacx/complex.hpp"
#include "deltacx/constructions.hpp"
#include "deltacx/homology.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<std::int64_t>>;
using deltacx::RegularDeltaComplex;

// Rank over Q by Bareiss elimination.
inline std::size_t rank_q(const Dense& m) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<cpp_int>> a(m.size(), std::vector<cpp_int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) a[i][j] = m[i][j];
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p(const Dense& m, std::int64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  Dense a = m;
  for (auto& row : a) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse(a[rank][col]);
    for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const std::int64_t f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Invariant factors by determinantal divisors: d_k = gcd of k x k minors.
// Exponential; for matrices up to about 5 x 5.
inline cpp_int det(std::vector<std::vector<cpp_int>> a) {
  const std::size_t n = a.size();
  cpp_int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                         std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

inline std::vector<cpp_int> invariant_factors_by_minors(const Dense& m) {
  std::vector<cpp_int> out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  cpp_int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(rows, k, rs, cur);
    combinations(cols, k, cs, cur);
    cpp_int g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<cpp_int>> sub(k, std::vector<cpp_int>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        }
        cpp_int d = det(sub);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Boundary matrix rebuilt straight from facet pointers.
inline Dense boundary_dense(const RegularDeltaComplex& k, int d) {
  const auto rows = k.cells_of_dim(d - 1);
  const auto cols = k.cells_of_dim(d);
  std::map<deltacx::CellId, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  Dense m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& facets = k.cell(cols[j]).facets;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      m[row_of.at(facets[i])][j] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Reduced Betti numbers over Q (p = 0) or F_p, from facet pointers.
inline std::vector<std::size_t> reduced_betti(const RegularDeltaComplex& k, std::int64_t p = 0) {
  const int top = k.dim();
  std::vector<std::size_t> out;
  if (top < 0) return out;
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int d = 1; d <= top; ++d) {
    const Dense m = boundary_dense(k, d);
    rank[static_cast<std::size_t>(d)] = p == 0 ? rank_q(m) : rank_mod_p(m, p);
  }
  for (int d = 0; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    out.push_back(k.cells_of_dim(d).size() - rank[du] - rank[du + 1]);
  }
  out[0] -= 1;
  return out;
}

// Simplicial chain complex from maximal simplices, built without the
// library: faces are enumerated as vertex subsets.
struct SimplicialOracle {
  std::vector<std::vector<std::vector<int>>> faces;  // by dimension, sorted

  explicit SimplicialOracle(const std::vector<std::vector<int>>& maximal) {
    std::set<std::vector<int>> all;
    for (std::vector<int> s : maximal) {
      std::sort(s.begin(), s.end());
      const std::size_t n = s.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> f;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) f.push_back(s[i]);
        }
        all.insert(f);
      }
    }
    for (const auto& f : all) {
      if (faces.size() < f.size()) faces.resize(f.size());
      faces[f.size() - 1].push_back(f);
    }
  }

  Dense boundary(std::size_t d) const {
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < faces[d - 1].size(); ++i) row_of[faces[d - 1][i]] = i;
    Dense m(faces[d - 1].size(), std::vector<std::int64_t>(faces[d].size(), 0));
    for (std::size_t j = 0; j < faces[d].size(); ++j) {
      const auto& s = faces[d][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        m[row_of.at(f)][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }

  std::vector<std::size_t> reduced_betti(std::int64_t p = 0) const {
    std::vector<std::size_t> rank(faces.size() + 1, 0);
    for (std::size_t d = 1; d < faces.size(); ++d) {
      rank[d] = p == 0 ? rank_q(boundary(d)) : rank_mod_p(boundary(d), p);
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < faces.size(); ++d) {
      out.push_back(faces[d].size() - rank[d] - rank[d + 1]);
    }
    if (!out.empty()) out[0] -= 1;
    return out;
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& f : faces) out.push_back(f.size());
    return out;
  }
};

// Hand-entered 6-vertex triangulation of the real projective plane.
inline std::vector<std::vector<int>> rp2_six_vertex() {
  return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
          {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
}

// Finitely generated abelian group: free rank plus elementary divisors
// (prime powers), kept sorted.
struct Group {
  std::size_t rank = 0;
  std::vector<std::uint64_t> primary;

  bool operator==(const Group&) const = default;
};

inline std::vector<std::uint64_t> to_primary(const std::vector<std::uint64_t>& cyclic) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n : cyclic) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      std::uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) out.push_back(q);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Group group_of(const deltacx::DegreeHomology& g) {
  return Group{g.rank, to_primary(g.torsion)};
}

// Reduced homology of A * B from reduced homology of A and B (both
// nonempty): H~_{k+1}(A*B) = sum_{i+j=k} H~_i A (x) H~_j B
//                           + sum_{i+j=k-1} Tor(H~_i A, H~_j B).
inline std::vector<Group> join_formula(const std::vector<Group>& a, const std::vector<Group>& b) {
  std::vector<Group> out(a.size() + b.size() + 1);
  auto add_cyclic = [](Group& g, std::uint64_t n) {
    if (n > 1) g.primary.push_back(n);
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Group& t = out[i + j + 1];
      // tensor
      t.rank += a[i].rank * b[j].rank;
      for (std::size_t r = 0; r < a[i].rank; ++r) {
        for (auto q : b[j].primary) add_cyclic(t, q);
      }
      for (std::size_t r = 0; r < b[j].rank; ++r) {
        for (auto q : a[i].primary) add_cyclic(t, q);
      }
      for (auto x : a[i].primary) {
        for (auto y : b[j].primary) add_cyclic(t, std::gcd(x, y));
      }
      // Tor lands one degree higher
      Group& u = out[i + j + 2];
      for (auto x : a[i].primary) {
        for (auto y : b[j].primary) add_cyclic(u, std::gcd(x, y));
      }
    }
  }
  for (Group& g : out) g.primary = to_primary(g.primary);
  while (!out.empty() && out.back() == Group{}) out.pop_back();
  return out;
}

inline std::vector<Group> groups_of(const deltacx::HomologyProfile& p) {
  std::vector<Group> out;
  for (const auto& d : p.degrees) out.push_back(group_of(d));
  while (!out.empty() && out.back() == Group{}) out.pop_back();
  return out;
}

// Universal coefficients: dim H_d(F_p) = rank_d + t_p(d) + t_p(d - 1), where
// t_p counts invariant factors divisible by p.
inline bool consistent_mod_p(const deltacx::HomologyProfile& z,
                             const std::vector<std::size_t>& betti_p, std::int64_t p) {
  auto tp = [&](int d) {
    if (d < 0) return std::size_t{0};
    const auto& tors = z.at(d).torsion;
    return static_cast<std::size_t>(std::count_if(
        tors.begin(), tors.end(), [p](std::uint64_t t) { return t % p == 0; }));
  };
  for (std::size_t d = 0; d < betti_p.size(); ++d) {
    const int di = static_cast<int>(d);
    if (betti_p[d] != z.at(di).rank + tp(di) + tp(di - 1)) return false;
  }
  return true;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
