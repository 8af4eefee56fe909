#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "precubical_set.hpp"

namespace precubical {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Cellular chains of the geometric realization. Bases are the cells of each
// dimension in label order; boundary(n) maps C_n to C_{n-1} with
//   d c = sum_i (-1)^i (d_i^1 c - d_i^0 c),   i = 1..n.
struct ChainComplex {
  std::vector<std::vector<CellId>> bases;
  std::vector<IntMatrix> boundaries;  // boundaries[n] for n >= 1; boundaries[0] is 0 x |C_0|

  std::size_t top() const noexcept { return bases.size(); }

  const IntMatrix& boundary(std::size_t n) const { return boundaries.at(n); }
};

inline ChainComplex chain_complex(const PrecubicalSet& k) {
  ChainComplex cc;
  const std::size_t dims = static_cast<std::size_t>(k.top_dim() + 1);
  for (std::size_t n = 0; n < dims; ++n) {
    cc.bases.push_back(k.cells(n));
  }
  if (dims == 0) {
    return cc;
  }
  cc.boundaries.emplace_back(0, k.size(0));
  for (std::size_t n = 1; n < dims; ++n) {
    IntMatrix d(k.size(n - 1), k.size(n));
    for (const CellId c : k.cells(n)) {
      for (std::size_t i = 1; i <= n; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        d(k.face(c, i, 1).index, c.index) += sign;
        d(k.face(c, i, 0).index, c.index) -= sign;
      }
    }
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

// Nonzero invariant factors of m (positive, each dividing the next).
inline std::vector<Integer> smith_invariants(IntMatrix m) {
  using boost::multiprecision::abs;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> out;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    auto place_pivot = [&]() -> bool {
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) != 0 && (!found || abs(m(i, j)) < best)) {
            found = true;
            best = abs(m(i, j));
            pr = i;
            pc = j;
          }
        }
      }
      if (found) {
        swap_rows(t, pr);
        swap_cols(t, pc);
      }
      return found;
    };

    if (!place_pivot()) {
      break;
    }
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Integer q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        dirty = dirty || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        dirty = dirty || m(t, j) != 0;
      }
      if (dirty) {
        place_pivot();
        continue;
      }
      // Row and column t are clear; enforce divisibility on the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t c = t; c < cols; ++c) m(t, c) += m(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(abs(m(t, t)));
  }
  return out;
}

struct HomologyGroup {
  std::size_t dim = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // one per dimension 0..top_dim

  std::size_t betti(std::size_t n) const { return n < groups.size() ? groups[n].betti : 0; }

  bool torsion_free() const {
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
  }
};

inline HomologyResult homology(const ChainComplex& cc) {
  const std::size_t dims = cc.top();
  std::vector<std::vector<Integer>> invariants(dims + 1);
  for (std::size_t n = 1; n < dims; ++n) {
    invariants[n] = smith_invariants(cc.boundary(n));
  }
  HomologyResult r;
  for (std::size_t n = 0; n < dims; ++n) {
    HomologyGroup g;
    g.dim = n;
    const std::size_t rank_out = invariants[n].size();
    const std::size_t rank_in = invariants[n + 1].size();
    g.betti = cc.bases[n].size() - rank_out - rank_in;
    for (const Integer& x : invariants[n + 1]) {
      if (x > 1) g.torsion.push_back(x);
    }
    r.groups.push_back(std::move(g));
  }
  return r;
}

inline HomologyResult homology(const PrecubicalSet& k) { return homology(chain_complex(k)); }

inline std::int64_t euler_characteristic(const PrecubicalSet& k) {
  std::int64_t chi = 0;
  for (int n = 0; n <= k.top_dim(); ++n) {
    const auto count = static_cast<std::int64_t>(k.size(static_cast<std::size_t>(n)));
    chi += (n % 2 == 0) ? count : -count;
  }
  return chi;
}

}  // namespace precubical
