#pragma once

// Independent reference computations for the test suites. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "precubical/precubical.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t pow_size(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of n-tuples over {0^, 1^, *} with at least one star, by listing
// them all.
inline std::size_t flow_words_with_star(std::size_t n) {
  std::size_t count = 0;
  std::vector<int> digits(n, 0);
  const std::size_t total = pow_size(3, n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    bool star = false;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = static_cast<int>(c % 3);
      c /= 3;
      star = star || digits[i] == 2;
    }
    count += star ? 1 : 0;
  }
  return count;
}

// Corner by repeatedly taking the face of highest index, the opposite order
// to the library's d_1 iteration.
inline precubical::CellId corner_last_index(const precubical::PrecubicalSet& k, precubical::CellId c, int alpha) {
  while (c.dim > 0) c = k.face(c, c.dim, alpha);
  return c;
}

// Corner through an arbitrary order given by `pick(dim)` in 1..dim.
inline precubical::CellId corner_by(const precubical::PrecubicalSet& k, precubical::CellId c, int alpha,
                                    const std::function<std::size_t(std::size_t)>& pick) {
  while (c.dim > 0) c = k.face(c, pick(c.dim), alpha);
  return c;
}

// Reachability by Floyd-Warshall on the edge adjacency matrix.
inline std::vector<std::vector<bool>> transitive_closure(const precubical::PrecubicalSet& k) {
  const std::size_t n = k.size(0);
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto e : k.cells(1)) {
    r[k.face(e, 1, 0).index][k.face(e, 1, 1).index] = true;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      if (r[a][m])
        for (std::size_t b = 0; b < n; ++b)
          if (r[m][b]) r[a][b] = true;
  return r;
}

// Strict product order on vertex words of a standard cube.
inline bool product_less(const std::string& a, const std::string& b) {
  if (a == b) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Rank over Q by exact rational Gaussian elimination.
inline std::size_t rational_rank(const precubical::IntMatrix& m) {
  std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = cpp_rational(m(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const cpp_rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Betti numbers from rational ranks of the boundary matrices.
inline std::vector<std::size_t> rational_betti(const precubical::ChainComplex& cc) {
  const std::size_t dims = cc.top();
  std::vector<std::size_t> rank(dims + 1, 0);
  for (std::size_t n = 1; n < dims; ++n) rank[n] = rational_rank(cc.boundary(n));
  std::vector<std::size_t> betti;
  for (std::size_t n = 0; n < dims; ++n) betti.push_back(cc.bases[n].size() - rank[n] - rank[n + 1]);
  return betti;
}

inline cpp_int determinant(std::vector<std::vector<cpp_int>> a) {
  // Laplace expansion; only used on matrices of size <= 4.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  cpp_int det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<cpp_int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    const cpp_int term = a[0][col] * determinant(std::move(minor));
    det += (col % 2 == 0) ? term : cpp_int(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// s_k = d_k / d_{k-1}. Exponential; small matrices only.
inline std::vector<cpp_int> invariant_factors_by_minors(const precubical::IntMatrix& m) {
  std::vector<cpp_int> out;
  cpp_int prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    cpp_int g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<cpp_int>> sub(k, std::vector<cpp_int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(determinant(std::move(sub))));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Every monotone edge path through cube c: one per permutation of the
// coordinates, switching them from 0 to 1 in that order.
inline std::vector<precubical::EdgePath> monotone_paths(const precubical::PrecubicalSet& k, precubical::CellId c) {
  using precubical::Letter;
  std::vector<std::size_t> perm(c.dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<precubical::EdgePath> out;
  do {
    precubical::EdgePath p;
    std::vector<Letter> letters(c.dim, Letter::zero);
    for (std::size_t step = 0; step < c.dim; ++step) {
      letters[perm[step]] = Letter::star;
      p.edges.push_back(precubical::apply_cube_map(k, c, precubical::CubeWord(letters)).index);
      letters[perm[step]] = Letter::one;
    }
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Evaluate a word on a cell of a standard cube by string substitution.
inline std::string substitute(const std::string& cell, const std::string& word) {
  std::string out = cell;
  std::size_t next = 0;
  for (char& ch : out) {
    if (ch == '*') ch = word[next++];
  }
  return out;
}

}  // namespace oracle
