#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "constructions.hpp"
#include "precubical_set.hpp"

namespace precubical {

// A non-empty sequence of 1-cells, each ending where the next one starts.
// Edges are stored by index in K_1; index order equals label order, so the
// lexicographic order on edge vectors is the lexicographic order on labels.
struct EdgePath {
  std::vector<std::size_t> edges;

  std::size_t length() const noexcept { return edges.size(); }

  friend auto operator<=>(const EdgePath&, const EdgePath&) = default;
};

inline CellId edge_source(const PrecubicalSet& k, std::size_t e) { return k.face(CellId{1, e}, 1, 0); }
inline CellId edge_target(const PrecubicalSet& k, std::size_t e) { return k.face(CellId{1, e}, 1, 1); }

// Throws std::invalid_argument unless p is a valid edge path of K.
inline void check_path(const PrecubicalSet& k, const EdgePath& p) {
  if (p.edges.empty()) {
    throw std::invalid_argument("edge path is empty");
  }
  for (std::size_t e : p.edges) {
    if (e >= k.size(1)) {
      throw std::invalid_argument("edge path refers to a missing 1-cell");
    }
  }
  for (std::size_t pos = 0; pos + 1 < p.edges.size(); ++pos) {
    if (edge_target(k, p.edges[pos]) != edge_source(k, p.edges[pos + 1])) {
      throw std::invalid_argument("edge path is broken after edge \"" +
                                  k.label(CellId{1, p.edges[pos]}) + "\" (position " +
                                  std::to_string(pos) + ")");
    }
  }
}

inline CellId path_source(const PrecubicalSet& k, const EdgePath& p) { return edge_source(k, p.edges.front()); }
inline CellId path_target(const PrecubicalSet& k, const EdgePath& p) { return edge_target(k, p.edges.back()); }

inline EdgePath path_from_labels(const PrecubicalSet& k, const std::vector<std::string>& labels) {
  EdgePath p;
  for (const auto& l : labels) {
    p.edges.push_back(k.at(1, l).index);
  }
  check_path(k, p);
  return p;
}

inline std::vector<std::string> path_labels(const PrecubicalSet& k, const EdgePath& p) {
  std::vector<std::string> out;
  out.reserve(p.edges.size());
  for (std::size_t e : p.edges) {
    out.push_back(k.label(CellId{1, e}));
  }
  return out;
}

inline EdgePath concat(const EdgePath& p, const EdgePath& q) {
  EdgePath r = p;
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

// Image of an edge path under a precubical morphism.
inline EdgePath map_path(const CubicalMap& f, const EdgePath& p) {
  EdgePath r;
  r.edges.reserve(p.edges.size());
  for (std::size_t e : p.edges) {
    r.edges.push_back(f.images.at(1).at(e));
  }
  return r;
}

// ----------------------------------------------------------------------------
// States and atoms
// ----------------------------------------------------------------------------

inline std::vector<CellId> realize_states(const PrecubicalSet& k) { return k.cells(0); }

// Canonical edge decomposition of the diagonal of c: coordinates are switched
// from 0 to 1 in increasing index order.
inline EdgePath staircase(const PrecubicalSet& k, CellId c) {
  if (c.dim == 0) {
    throw std::invalid_argument("staircase: a vertex has no diagonal");
  }
  EdgePath p;
  for (std::size_t step = 1; step <= c.dim; ++step) {
    std::vector<Letter> letters(c.dim, Letter::zero);
    std::fill(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(step - 1), Letter::one);
    letters[step - 1] = Letter::star;
    p.edges.push_back(apply_cube_map(k, c, CubeWord(std::move(letters))).index);
  }
  return p;
}

struct Atom {
  CellId cube;
  CellId source;
  CellId target;
  EdgePath diagonal;  // staircase(cube)
};

// States K_0 and one generating execution path per positive-dimensional cube.
struct CombFlow {
  std::vector<CellId> states;
  std::vector<Atom> atoms;
};

inline CombFlow comb_flow(const PrecubicalSet& k) {
  CombFlow flow;
  flow.states = realize_states(k);
  for (int n = 1; n <= k.top_dim(); ++n) {
    for (const CellId c : k.cells(static_cast<std::size_t>(n))) {
      flow.atoms.push_back(Atom{c, corner(k, c, 0), corner(k, c, 1), staircase(k, c)});
    }
  }
  return flow;
}

// ----------------------------------------------------------------------------
// Square moves
// ----------------------------------------------------------------------------

// For every 2-cell s, the two boundary composites (d_2^0 s, d_1^1 s) and
// (d_1^0 s, d_2^1 s) are interchangeable.
class SquareMoves {
public:
  explicit SquareMoves(const PrecubicalSet& k) {
    for (const CellId s : k.cells(2)) {
      const Pair lower{k.face(s, 2, 0).index, k.face(s, 1, 1).index};
      const Pair upper{k.face(s, 1, 0).index, k.face(s, 2, 1).index};
      moves_[lower].insert(upper);
      moves_[upper].insert(lower);
    }
  }

  // All paths reachable from p by one square move.
  template <typename Visit>
  void neighbours(const EdgePath& p, Visit&& visit) const {
    for (std::size_t pos = 0; pos + 1 < p.edges.size(); ++pos) {
      auto it = moves_.find(Pair{p.edges[pos], p.edges[pos + 1]});
      if (it == moves_.end()) {
        continue;
      }
      for (const Pair& repl : it->second) {
        EdgePath q = p;
        q.edges[pos] = repl.first;
        q.edges[pos + 1] = repl.second;
        visit(std::move(q));
      }
    }
  }

  // The full square-move class of p. Moves preserve length and endpoints, so
  // the class is finite.
  std::set<EdgePath> saturate(const EdgePath& p, const EdgePath* stop_at = nullptr) const {
    std::set<EdgePath> seen{p};
    std::deque<EdgePath> queue{p};
    while (!queue.empty()) {
      EdgePath cur = std::move(queue.front());
      queue.pop_front();
      if (stop_at != nullptr && cur == *stop_at) {
        break;
      }
      neighbours(cur, [&](EdgePath q) {
        if (seen.insert(q).second) {
          queue.push_back(std::move(q));
        }
      });
    }
    return seen;
  }

private:
  using Pair = std::pair<std::size_t, std::size_t>;
  std::map<Pair, std::set<Pair>> moves_;
};

// Equality of execution paths in the realized flow.
inline bool path_equal(const PrecubicalSet& k, const EdgePath& p, const EdgePath& q) {
  check_path(k, p);
  check_path(k, q);
  if (p.length() != q.length() || path_source(k, p) != path_source(k, q) ||
      path_target(k, p) != path_target(k, q)) {
    return false;
  }
  if (p == q) {
    return true;
  }
  return SquareMoves(k).saturate(p, &q).count(q) > 0;
}

// ----------------------------------------------------------------------------
// Morphism classes
// ----------------------------------------------------------------------------

struct PathClass {
  EdgePath representative;      // lexicographically smallest member
  std::vector<EdgePath> members;  // sorted

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

namespace detail {

// Every edge path starting at `from` with length in 1..max_len, grouped by
// its final vertex.
inline std::map<std::size_t, std::vector<EdgePath>> paths_from(const PrecubicalSet& k, std::size_t from,
                                                               std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out_edges(k.size(0));
  for (std::size_t e = 0; e < k.size(1); ++e) {
    out_edges[edge_source(k, e).index].push_back(e);
  }
  std::map<std::size_t, std::vector<EdgePath>> by_target;
  EdgePath cur;
  auto dfs = [&](auto&& self, std::size_t at) -> void {
    if (cur.length() == max_len) {
      return;
    }
    for (std::size_t e : out_edges[at]) {
      cur.edges.push_back(e);
      const std::size_t next = edge_target(k, e).index;
      by_target[next].push_back(cur);
      self(self, next);
      cur.edges.pop_back();
    }
  };
  dfs(dfs, from);
  return by_target;
}

inline std::vector<PathClass> partition(const SquareMoves& moves, std::vector<EdgePath> paths) {
  std::set<EdgePath> remaining(std::make_move_iterator(paths.begin()), std::make_move_iterator(paths.end()));
  std::vector<PathClass> classes;
  while (!remaining.empty()) {
    const EdgePath rep = *remaining.begin();
    std::set<EdgePath> cls = moves.saturate(rep);
    PathClass pc{*cls.begin(), std::vector<EdgePath>(cls.begin(), cls.end())};
    for (const EdgePath& m : pc.members) {
      remaining.erase(m);
    }
    classes.push_back(std::move(pc));
  }
  std::sort(classes.begin(), classes.end(),
            [](const PathClass& a, const PathClass& b) { return a.representative < b.representative; });
  return classes;
}

}  // namespace detail

// All square-move classes of edge paths a -> b of length at most max_len.
// Classes are length-homogeneous, so each class is complete.
inline std::vector<PathClass> enumerate_path_classes(const PrecubicalSet& k, CellId a, CellId b,
                                                     std::size_t max_len) {
  if (a.dim != 0 || b.dim != 0 || a.index >= k.size(0) || b.index >= k.size(0)) {
    throw std::invalid_argument("enumerate_path_classes: endpoints must be states of K");
  }
  if (max_len == 0) {
    throw std::invalid_argument("enumerate_path_classes: max_len must be positive");
  }
  auto by_target = detail::paths_from(k, a.index, max_len);
  auto it = by_target.find(b.index);
  if (it == by_target.end()) {
    return {};
  }
  return detail::partition(SquareMoves(k), std::move(it->second));
}

// Number of path classes over all ordered pairs of states, paths of length
// at most max_len. For a loopless K and max_len at least the longest chain
// this is the number of morphisms of the realized flow.
inline std::size_t count_flow_morphisms(const PrecubicalSet& k, std::size_t max_len) {
  if (max_len == 0) {
    throw std::invalid_argument("count_flow_morphisms: max_len must be positive");
  }
  const SquareMoves moves(k);
  std::size_t total = 0;
  for (std::size_t a = 0; a < k.size(0); ++a) {
    for (auto& [target, paths] : detail::paths_from(k, a, max_len)) {
      total += detail::partition(moves, std::move(paths)).size();
    }
  }
  return total;
}

// ----------------------------------------------------------------------------
// State order
// ----------------------------------------------------------------------------

// Strict order on K_0: less[a][b] iff some execution path runs from a to b.
struct StatePoset {
  std::vector<CellId> states;
  std::vector<std::vector<bool>> less;

  std::vector<std::pair<CellId, CellId>> relations() const {
    std::vector<std::pair<CellId, CellId>> out;
    for (std::size_t a = 0; a < less.size(); ++a) {
      for (std::size_t b = 0; b < less.size(); ++b) {
        if (less[a][b]) {
          out.emplace_back(CellId{0, a}, CellId{0, b});
        }
      }
    }
    return out;
  }
};

// A directed cycle of edges witnessing that K is not loopless.
struct LoopReport {
  EdgePath cycle;
};

using StateOrder = std::variant<StatePoset, LoopReport>;

inline StateOrder state_order(const PrecubicalSet& k) {
  const std::size_t nv = k.size(0);
  std::vector<std::vector<std::size_t>> out_edges(nv);
  for (std::size_t e = 0; e < k.size(1); ++e) {
    out_edges[edge_source(k, e).index].push_back(e);
  }

  // Cycle search: colour 0 unvisited, 1 on stack, 2 finished.
  std::vector<int> colour(nv, 0);
  std::vector<std::size_t> stack_edges;
  std::optional<EdgePath> cycle;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    colour[v] = 1;
    for (std::size_t e : out_edges[v]) {
      if (cycle) return;
      const std::size_t w = edge_target(k, e).index;
      stack_edges.push_back(e);
      if (colour[w] == 1) {
        auto start = std::find_if(stack_edges.begin(), stack_edges.end(),
                                  [&](std::size_t x) { return edge_source(k, x).index == w; });
        cycle = EdgePath{std::vector<std::size_t>(start, stack_edges.end())};
        return;
      }
      if (colour[w] == 0) {
        self(self, w);
      }
      stack_edges.pop_back();
    }
    colour[v] = 2;
  };
  for (std::size_t v = 0; v < nv && !cycle; ++v) {
    if (colour[v] == 0) {
      dfs(dfs, v);
    }
  }
  if (cycle) {
    return LoopReport{std::move(*cycle)};
  }

  StatePoset poset{realize_states(k), std::vector<std::vector<bool>>(nv, std::vector<bool>(nv, false))};
  for (std::size_t a = 0; a < nv; ++a) {
    std::vector<std::size_t> todo{a};
    while (!todo.empty()) {
      const std::size_t v = todo.back();
      todo.pop_back();
      for (std::size_t e : out_edges[v]) {
        const std::size_t w = edge_target(k, e).index;
        if (!poset.less[a][w]) {
          poset.less[a][w] = true;
          todo.push_back(w);
        }
      }
    }
  }
  return poset;
}

}  // namespace precubical
