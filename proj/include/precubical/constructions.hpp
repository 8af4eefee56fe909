#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube_word.hpp"
#include "precubical_set.hpp"

namespace precubical {

// ----------------------------------------------------------------------------
// Representables, boundaries, skeleta
// ----------------------------------------------------------------------------

// The representable cube: k-cells are the length-n words with k stars, and
// d_i^alpha sets the i-th star to alpha.
inline PrecubicalSet standard_cube(std::size_t n) {
  Builder b;
  for (const CubeWord& w : all_words(n)) {
    const std::size_t dim = w.stars();
    b.add_cell(dim, w.str());
    for (std::size_t i = 1; i <= dim; ++i) {
      for (int alpha = 0; alpha < 2; ++alpha) {
        b.set_face(dim, w.str(), i, alpha, w.face(i, alpha).str());
      }
    }
  }
  return b.build();
}

// Cells of dimension <= n, as a builder so callers may extend it.
inline Builder skeleton_builder(const PrecubicalSet& k, std::size_t n) {
  Builder b;
  if (k.empty()) {
    return b;
  }
  const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(k.top_dim()));
  for (std::size_t d = 0; d <= top; ++d) {
    for (const CellId c : k.cells(d)) {
      b.add_cell(d, k.label(c));
      for (std::size_t i = 1; i <= d; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          b.set_face(d, k.label(c), i, alpha, k.label(k.face(c, i, alpha)));
        }
      }
    }
  }
  return b;
}

inline PrecubicalSet skeleton(const PrecubicalSet& k, std::size_t n) {
  return skeleton_builder(k, n).build();
}

// The cube with its interior removed; boundary_cube(0) is empty.
inline PrecubicalSet boundary_cube(std::size_t n) {
  if (n == 0) {
    return PrecubicalSet{};
  }
  return skeleton(standard_cube(n), n - 1);
}

// ----------------------------------------------------------------------------
// Action of cube words
// ----------------------------------------------------------------------------

// K(w)(c) for a word w : [m] -> [n] and an n-cell c. Constant letters are
// applied right to left so that every face index still names its original
// coordinate.
inline CellId apply_cube_map(const PrecubicalSet& k, CellId c, const CubeWord& w) {
  if (w.length() != c.dim) {
    throw std::invalid_argument("apply_cube_map: word of length " + std::to_string(w.length()) +
                                " applied to a cell of dimension " + std::to_string(c.dim));
  }
  for (std::size_t p = w.length(); p >= 1; --p) {
    const Letter l = w[p - 1];
    if (l != Letter::star) {
      c = k.face(c, p, l == Letter::one ? 1 : 0);
    }
  }
  return c;
}

// Iterated d_1^alpha: the initial (alpha = 0) or final (alpha = 1) vertex.
inline CellId corner(const PrecubicalSet& k, CellId c, int alpha) {
  while (c.dim > 0) {
    c = k.face(c, 1, alpha);
  }
  return c;
}

// ----------------------------------------------------------------------------
// The category of cubes
// ----------------------------------------------------------------------------

struct CubeArrow {
  CellId source;  // = apply_cube_map(target, word)
  CellId target;
  CubeWord word;
};

struct CubeDiagram {
  std::vector<CellId> objects;
  std::vector<CubeArrow> arrows;  // identities included

  std::size_t non_identity_arrows() const {
    return static_cast<std::size_t>(std::count_if(
        arrows.begin(), arrows.end(), [](const CubeArrow& a) { return !a.word.is_identity(); }));
  }
};

// Composite of a : x -> y and b : y -> z.
inline CubeArrow compose(const CubeArrow& a, const CubeArrow& b) {
  if (a.target != b.source) {
    throw std::invalid_argument("compose: arrows are not composable");
  }
  return CubeArrow{a.source, b.target, b.word.compose(a.word)};
}

inline CubeDiagram cube_category(const PrecubicalSet& k) {
  CubeDiagram d;
  for (int n = 0; n <= k.top_dim(); ++n) {
    for (const CellId c : k.cells(static_cast<std::size_t>(n))) {
      d.objects.push_back(c);
    }
  }
  for (const CellId c : d.objects) {
    for (const CubeWord& w : all_words(c.dim)) {
      d.arrows.push_back(CubeArrow{apply_cube_map(k, c, w), c, w});
    }
  }
  return d;
}

// ----------------------------------------------------------------------------
// Morphisms
// ----------------------------------------------------------------------------

// A dimension-preserving map of cells; images[n][index] is an index in the
// target's dimension n.
struct CubicalMap {
  std::vector<std::vector<std::size_t>> images;

  CellId operator()(CellId c) const { return CellId{c.dim, images.at(c.dim).at(c.index)}; }

  friend bool operator==(const CubicalMap&, const CubicalMap&) = default;
};

// True iff f is a well-typed map of cells from `src` to `dst` commuting with
// every face operator.
inline bool is_morphism(const CubicalMap& f, const PrecubicalSet& src, const PrecubicalSet& dst) {
  const std::size_t dims = static_cast<std::size_t>(src.top_dim() + 1);
  if (f.images.size() < dims) {
    return false;
  }
  for (std::size_t n = 0; n < dims; ++n) {
    if (f.images[n].size() != src.size(n)) {
      return false;
    }
    for (std::size_t v : f.images[n]) {
      if (v >= dst.size(n)) {
        return false;
      }
    }
  }
  for (std::size_t n = 1; n < dims; ++n) {
    for (const CellId c : src.cells(n)) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          if (f(src.face(c, i, alpha)) != dst.face(f(c), i, alpha)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline CubicalMap identity_map(const PrecubicalSet& k) {
  CubicalMap f;
  for (std::size_t n = 0; n < static_cast<std::size_t>(k.top_dim() + 1); ++n) {
    std::vector<std::size_t> ids(k.size(n));
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    f.images.push_back(std::move(ids));
  }
  return f;
}

// Builds a map from label pairs (dim, source label) -> target label.
inline CubicalMap map_from_labels(const PrecubicalSet& src, const PrecubicalSet& dst,
                                  const std::map<std::pair<std::size_t, std::string>, std::string>& m) {
  CubicalMap f;
  f.images.resize(static_cast<std::size_t>(src.top_dim() + 1));
  for (std::size_t n = 0; n < f.images.size(); ++n) {
    for (const CellId c : src.cells(n)) {
      auto it = m.find({n, src.label(c)});
      if (it == m.end()) {
        throw std::invalid_argument("map_from_labels: no image for cell \"" + src.label(c) + "\"");
      }
      f.images[n].push_back(dst.at(n, it->second).index);
    }
  }
  return f;
}

// Label-preserving inclusion of a sub-precubical set.
inline CubicalMap inclusion(const PrecubicalSet& sub, const PrecubicalSet& super) {
  CubicalMap f;
  f.images.resize(static_cast<std::size_t>(sub.top_dim() + 1));
  for (std::size_t n = 0; n < f.images.size(); ++n) {
    for (const CellId c : sub.cells(n)) {
      f.images[n].push_back(super.at(n, sub.label(c)).index);
    }
  }
  return f;
}

// The map standard_cube(dim c) -> K classifying the cell c (Yoneda).
inline CubicalMap classifying_map(const PrecubicalSet& k, CellId c) {
  const PrecubicalSet cube = standard_cube(c.dim);
  CubicalMap f;
  f.images.resize(c.dim + 1);
  for (std::size_t n = 0; n <= c.dim; ++n) {
    for (const CellId w : cube.cells(n)) {
      f.images[n].push_back(apply_cube_map(k, c, CubeWord::parse(cube.label(w))).index);
    }
  }
  return f;
}

inline CubicalMap compose(const CubicalMap& f, const CubicalMap& g) {  // g after f
  CubicalMap h;
  h.images.resize(f.images.size());
  for (std::size_t n = 0; n < f.images.size(); ++n) {
    for (std::size_t v : f.images[n]) {
      h.images[n].push_back(g.images.at(n).at(v));
    }
  }
  return h;
}

// ----------------------------------------------------------------------------
// Pushout
// ----------------------------------------------------------------------------

struct Pushout {
  PrecubicalSet set;
  CubicalMap from_left;   // K -> P
  CubicalMap from_right;  // M -> P
};

// Degreewise pushout of K <-f- L -g-> M. A class containing cells of K takes
// the smallest such K label; classes made of M cells only keep their M label,
// prefixed with "r:" until it no longer collides.
inline Pushout pushout(const PrecubicalSet& l, const PrecubicalSet& k, const PrecubicalSet& m,
                       const CubicalMap& f, const CubicalMap& g) {
  if (!is_morphism(f, l, k)) {
    throw std::invalid_argument("pushout: left leg is not a precubical morphism");
  }
  if (!is_morphism(g, l, m)) {
    throw std::invalid_argument("pushout: right leg is not a precubical morphism");
  }

  const std::size_t dims = static_cast<std::size_t>(std::max(k.top_dim(), m.top_dim()) + 1);
  Pushout out;
  out.from_left.images.resize(static_cast<std::size_t>(k.top_dim() + 1));
  out.from_right.images.resize(static_cast<std::size_t>(m.top_dim() + 1));

  // Per dimension: element e < |K_n| is a K cell, otherwise M cell e - |K_n|.
  std::vector<std::vector<std::string>> class_label(dims);
  std::vector<std::vector<std::size_t>> class_of(dims);
  for (std::size_t n = 0; n < dims; ++n) {
    const std::size_t nk = k.size(n);
    const std::size_t total = nk + m.size(n);
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (std::size_t e = 0; e < l.size(n); ++e) {
      const std::size_t a = root(f.images[n][e]);
      const std::size_t b = root(nk + g.images[n][e]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    // Roots are minimal members, so a class has a K cell iff its root is one.
    std::map<std::size_t, std::size_t> root_to_class;
    std::vector<std::size_t> roots;
    class_of[n].resize(total);
    for (std::size_t e = 0; e < total; ++e) {
      const std::size_t r = root(e);
      auto [it, fresh] = root_to_class.emplace(r, roots.size());
      if (fresh) {
        roots.push_back(r);
      }
      class_of[n][e] = it->second;
    }
    std::set<std::string> taken;
    for (std::size_t r : roots) {
      if (r < nk) {
        taken.insert(k.labels(n)[r]);
      }
    }
    class_label[n].resize(roots.size());
    for (std::size_t cls = 0; cls < roots.size(); ++cls) {
      const std::size_t r = roots[cls];
      if (r < nk) {
        class_label[n][cls] = k.labels(n)[r];
        continue;
      }
      std::string label = m.labels(n)[r - nk];
      while (taken.count(label)) {
        label = "r:" + label;
      }
      taken.insert(label);
      class_label[n][cls] = label;
    }
  }

  Builder b;
  for (std::size_t n = 0; n < dims; ++n) {
    const std::size_t nk = k.size(n);
    std::vector<bool> done(class_label[n].size(), false);
    for (std::size_t e = 0; e < class_of[n].size(); ++e) {
      const std::size_t cls = class_of[n][e];
      if (done[cls]) {
        continue;
      }
      done[cls] = true;
      b.add_cell(n, class_label[n][cls]);
      for (std::size_t i = 1; i <= n; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          const std::size_t fe = e < nk ? k.face(CellId{n, e}, i, alpha).index
                                        : k.size(n - 1) + m.face(CellId{n, e - nk}, i, alpha).index;
          b.set_face(n, class_label[n][cls], i, alpha, class_label[n - 1][class_of[n - 1][fe]]);
        }
      }
    }
  }
  out.set = b.build();

  for (std::size_t n = 0; n < dims; ++n) {
    const std::size_t nk = k.size(n);
    for (std::size_t e = 0; e < class_of[n].size(); ++e) {
      const std::size_t idx = out.set.at(n, class_label[n][class_of[n][e]]).index;
      if (e < nk) {
        out.from_left.images[n].push_back(idx);
      } else {
        out.from_right.images[n].push_back(idx);
      }
    }
  }
  return out;
}

inline PrecubicalSet disjoint_union(const PrecubicalSet& k, const PrecubicalSet& m) {
  return pushout(PrecubicalSet{}, k, m, CubicalMap{}, CubicalMap{}).set;
}

// ----------------------------------------------------------------------------
// Tensor product
// ----------------------------------------------------------------------------

// (K (x) L)_n = sum over p + q = n of K_p x L_q, labelled "a|b". Faces with
// i <= p act on the left factor, the others on the right factor shifted by p.
// Labels that would coincide across different splits get an "@p" suffix.
inline PrecubicalSet tensor(const PrecubicalSet& k, const PrecubicalSet& l) {
  if (k.empty() || l.empty()) {
    return PrecubicalSet{};
  }
  const std::size_t pk = static_cast<std::size_t>(k.top_dim());
  const std::size_t ql = static_cast<std::size_t>(l.top_dim());

  // Decide every label first so faces can refer to them.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::string> names;
  for (std::size_t n = 0; n <= pk + ql; ++n) {
    std::map<std::string, std::size_t> uses;
    for (std::size_t p = 0; p <= std::min(n, pk); ++p) {
      if (n - p > ql) continue;
      for (const std::string& a : k.labels(p)) {
        for (const std::string& bl : l.labels(n - p)) {
          ++uses[a + "|" + bl];
        }
      }
    }
    for (std::size_t p = 0; p <= std::min(n, pk); ++p) {
      if (n - p > ql) continue;
      for (std::size_t a = 0; a < k.size(p); ++a) {
        for (std::size_t bi = 0; bi < l.size(n - p); ++bi) {
          std::string name = k.labels(p)[a] + "|" + l.labels(n - p)[bi];
          if (uses[name] > 1) {
            name += "@" + std::to_string(p);
          }
          names.emplace(std::make_tuple(p, a, n - p, bi), std::move(name));
        }
      }
    }
  }

  Builder b;
  for (const auto& [key, name] : names) {
    const auto [p, a, q, bi] = key;
    const std::size_t n = p + q;
    b.add_cell(n, name);
    for (std::size_t i = 1; i <= n; ++i) {
      for (int alpha = 0; alpha < 2; ++alpha) {
        std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> fk;
        if (i <= p) {
          fk = {p - 1, k.face(CellId{p, a}, i, alpha).index, q, bi};
        } else {
          fk = {p, a, q - 1, l.face(CellId{q, bi}, i - p, alpha).index};
        }
        b.set_face(n, name, i, alpha, names.at(fk));
      }
    }
  }
  return b.build();
}

// ----------------------------------------------------------------------------
// Isomorphism search
// ----------------------------------------------------------------------------

namespace detail {

class IsoSearch {
public:
  IsoSearch(const PrecubicalSet& a, const PrecubicalSet& b) : a_(a), b_(b) {
    const std::size_t dims = static_cast<std::size_t>(a.top_dim() + 1);
    map_.resize(dims);
    used_.resize(dims);
    for (std::size_t n = 0; n < dims; ++n) {
      map_[n].assign(a.size(n), unset);
      used_[n].assign(b.size(n), false);
    }
    for (int n = a.top_dim(); n >= 0; --n) {
      for (const CellId c : a.cells(static_cast<std::size_t>(n))) {
        order_.push_back(c);
      }
    }
  }

  std::optional<CubicalMap> run() {
    if (!search(0)) {
      return std::nullopt;
    }
    return CubicalMap{map_};
  }

private:
  static constexpr std::size_t unset = static_cast<std::size_t>(-1);

  // Assigns c -> d and propagates to all faces; records every assignment in
  // `trail` for undo. Returns false on conflict.
  bool assign(CellId c, CellId d, std::vector<CellId>& trail) {
    std::size_t& slot = map_[c.dim][c.index];
    if (slot != unset) {
      return slot == d.index;
    }
    if (used_[d.dim][d.index]) {
      return false;
    }
    slot = d.index;
    used_[d.dim][d.index] = true;
    trail.push_back(c);
    for (std::size_t i = 1; i <= c.dim; ++i) {
      for (int alpha = 0; alpha < 2; ++alpha) {
        if (!assign(a_.face(c, i, alpha), b_.face(d, i, alpha), trail)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<CellId>& trail) {
    for (const CellId c : trail) {
      used_[c.dim][map_[c.dim][c.index]] = false;
      map_[c.dim][c.index] = unset;
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && map_[order_[pos].dim][order_[pos].index] != unset) {
      ++pos;
    }
    if (pos == order_.size()) {
      return true;
    }
    const CellId c = order_[pos];
    for (const CellId d : b_.cells(c.dim)) {
      if (used_[d.dim][d.index]) {
        continue;
      }
      std::vector<CellId> trail;
      if (assign(c, d, trail) && search(pos + 1)) {
        return true;
      }
      undo(trail);
    }
    return false;
  }

  const PrecubicalSet& a_;
  const PrecubicalSet& b_;
  std::vector<std::vector<std::size_t>> map_;
  std::vector<std::vector<bool>> used_;
  std::vector<CellId> order_;
};

}  // namespace detail

// A precubical isomorphism a -> b found by backtracking over top-down cell
// assignments, or nullopt when none exists.
inline std::optional<CubicalMap> find_isomorphism(const PrecubicalSet& a, const PrecubicalSet& b) {
  if (a.cell_counts() != b.cell_counts()) {
    return std::nullopt;
  }
  return detail::IsoSearch(a, b).run();
}

inline bool isomorphic(const PrecubicalSet& a, const PrecubicalSet& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace precubical
