#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "constructions.hpp"
#include "precubical_set.hpp"

namespace precubical {

// The globe attached for an (n+1)-cube: Glob(D^n) glued along Glob(S^(n-1)),
// running from the cube's initial to its final vertex. Attaching maps are not
// canonical and are not recorded.
struct GlobularCell {
  CellId cube;
  std::size_t globe_dim = 0;  // dim(cube) - 1
  CellId source;
  CellId target;

  friend bool operator==(const GlobularCell&, const GlobularCell&) = default;
};

// Vertices K_0 plus one globular cell per positive-dimensional cube, grouped
// by skeletal stage: stages[n] holds the cells of globe dimension n, all
// attached at once onto the ledger of the lower stages.
struct GlobularDecomposition {
  std::vector<CellId> vertices;
  std::vector<std::vector<GlobularCell>> stages;

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& s : stages) n += s.size();
    return n;
  }

  std::vector<GlobularCell> cells() const {
    std::vector<GlobularCell> out;
    for (const auto& s : stages) out.insert(out.end(), s.begin(), s.end());
    return out;
  }
};

inline GlobularDecomposition globular_decomposition(const PrecubicalSet& k) {
  GlobularDecomposition d;
  d.vertices = k.cells(0);
  for (int n = 1; n <= k.top_dim(); ++n) {
    std::vector<GlobularCell> stage;
    for (const CellId c : k.cells(static_cast<std::size_t>(n))) {
      stage.push_back(GlobularCell{c, c.dim - 1, corner(k, c, 0), corner(k, c, 1)});
    }
    d.stages.push_back(std::move(stage));
  }
  return d;
}

struct DecompositionReport {
  std::size_t vertices = 0;
  std::size_t cells = 0;
  std::vector<std::size_t> stage_counts;  // cells per globe dimension
  std::size_t max_globe_dim = 0;          // 0 also when there are no cells

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

inline DecompositionReport decomposition_report(const PrecubicalSet& k) {
  const GlobularDecomposition d = globular_decomposition(k);
  DecompositionReport r;
  r.vertices = d.vertices.size();
  r.cells = d.cell_count();
  for (std::size_t n = 0; n < d.stages.size(); ++n) {
    r.stage_counts.push_back(d.stages[n].size());
    if (!d.stages[n].empty()) r.max_globe_dim = n;
  }
  return r;
}

}  // namespace precubical
