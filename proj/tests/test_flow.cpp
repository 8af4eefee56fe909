#include <gtest/gtest.h>

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "precubical/precubical.hpp"

using namespace precubical;

namespace {

EdgePath path(const PrecubicalSet& k, std::vector<std::string> labels) { return path_from_labels(k, labels); }

}  // namespace

TEST(RealizeStates, AreTheVertices) {
  EXPECT_EQ(realize_states(standard_cube(2)).size(), 4u);
  EXPECT_TRUE(realize_states(boundary_cube(0)).empty());
  EXPECT_EQ(realize_states(directed_circle()).size(), 1u);
  for (const auto& e : corpus::full()) {
    const auto states = realize_states(e.set);
    ASSERT_EQ(states.size(), e.set.size(0)) << e.name;
    for (std::size_t i = 0; i < states.size(); ++i) EXPECT_EQ(e.set.label(states[i]), e.set.labels(0)[i]);
  }
}

TEST(Corner, Examples) {
  const PrecubicalSet sq = standard_cube(2);
  EXPECT_EQ(sq.label(corner(sq, sq.at(2, "**"), 0)), "00");
  const PrecubicalSet cube = standard_cube(3);
  EXPECT_EQ(cube.label(corner(cube, cube.at(3, "***"), 1)), "111");
  for (const CellId e : cube.cells(1)) {
    EXPECT_EQ(corner(cube, e, 0), cube.face(e, 1, 0));
    EXPECT_EQ(corner(cube, e, 1), cube.face(e, 1, 1));
  }
}

TEST(Corner, IndependentOfFaceOrder) {
  std::mt19937 rng(11);
  for (const auto& e : corpus::full()) {
    for (int n = 1; n <= e.set.top_dim(); ++n) {
      for (const CellId c : e.set.cells(static_cast<std::size_t>(n))) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          const CellId expected = corner(e.set, c, alpha);
          EXPECT_EQ(oracle::corner_last_index(e.set, c, alpha), expected) << e.name;
          auto random_index = [&](std::size_t d) { return std::uniform_int_distribution<std::size_t>(1, d)(rng); };
          EXPECT_EQ(oracle::corner_by(e.set, c, alpha, random_index), expected) << e.name;
        }
      }
    }
  }
}

TEST(Staircase, Examples) {
  const PrecubicalSet edge = standard_cube(1);
  EXPECT_EQ(path_labels(edge, staircase(edge, edge.at(1, "*"))), (std::vector<std::string>{"*"}));

  const PrecubicalSet sq = standard_cube(2);
  const CellId s = sq.at(2, "**");
  const EdgePath st = staircase(sq, s);
  // (*,0) then (1,*): d_2^0 s followed by d_1^1 s.
  EXPECT_EQ(path_labels(sq, st), (std::vector<std::string>{"*0", "1*"}));
  EXPECT_EQ(st.edges[0], sq.face(s, 2, 0).index);
  EXPECT_EQ(st.edges[1], sq.face(s, 1, 1).index);

  const PrecubicalSet cube = standard_cube(3);
  const EdgePath c3 = staircase(cube, cube.at(3, "***"));
  EXPECT_EQ(path_labels(cube, c3), (std::vector<std::string>{"*00", "1*0", "11*"}));
  EXPECT_THROW(staircase(cube, cube.at(0, "000")), std::invalid_argument);
}

TEST(Staircase, EndpointsAreCorners) {
  for (const auto& e : corpus::full()) {
    for (int n = 1; n <= e.set.top_dim(); ++n) {
      for (const CellId c : e.set.cells(static_cast<std::size_t>(n))) {
        const EdgePath p = staircase(e.set, c);
        EXPECT_NO_THROW(check_path(e.set, p));
        EXPECT_EQ(p.length(), c.dim);
        EXPECT_EQ(path_source(e.set, p), corner(e.set, c, 0));
        EXPECT_EQ(path_target(e.set, p), corner(e.set, c, 1));
      }
    }
  }
}

TEST(PathEqual, SquareMergesItsBoundaryPaths) {
  const PrecubicalSet sq = standard_cube(2);
  const EdgePath lower = path(sq, {"*0", "1*"});
  const EdgePath upper = path(sq, {"0*", "*1"});
  EXPECT_TRUE(path_equal(sq, lower, upper));
  EXPECT_TRUE(path_equal(sq, lower, lower));

  const PrecubicalSet bd = boundary_cube(2);
  EXPECT_FALSE(path_equal(bd, path(bd, {"*0", "1*"}), path(bd, {"0*", "*1"})));
  EXPECT_TRUE(path_equal(bd, path(bd, {"*0", "1*"}), path(bd, {"*0", "1*"})));
}

TEST(PathEqual, RejectsMalformedPaths) {
  const PrecubicalSet sq = standard_cube(2);
  const EdgePath broken{{sq.at(1, "*0").index, sq.at(1, "*1").index}};
  EXPECT_THROW(path_equal(sq, broken, broken), std::invalid_argument);
  EXPECT_THROW(path_equal(sq, EdgePath{}, EdgePath{}), std::invalid_argument);
  EXPECT_THROW(path_from_labels(sq, {"*0", "*1"}), std::invalid_argument);
}

TEST(PathEqual, MonotonePathsEqualStaircase) {
  for (const auto& e : corpus::full()) {
    for (int n = 1; n <= std::min(e.set.top_dim(), 4); ++n) {
      for (const CellId c : e.set.cells(static_cast<std::size_t>(n))) {
        const EdgePath st = staircase(e.set, c);
        for (const EdgePath& p : oracle::monotone_paths(e.set, c)) {
          EXPECT_TRUE(path_equal(e.set, p, st)) << e.name << " cell " << e.set.label(c);
        }
      }
    }
  }
}

TEST(PathEqual, EquivalenceAndCongruence) {
  const PrecubicalSet k = tensor(standard_cube(2), interval(1));  // a 3-cube
  const PrecubicalSet bd = boundary_cube(3);
  for (const PrecubicalSet* set : {&k, &bd}) {
    const CellId a = set->cells(0).front();
    std::vector<EdgePath> all;
    for (const CellId b : set->cells(0)) {
      for (const PathClass& cls : enumerate_path_classes(*set, a, b, 3)) {
        all.insert(all.end(), cls.members.begin(), cls.members.end());
      }
    }
    for (const EdgePath& p : all) {
      EXPECT_TRUE(path_equal(*set, p, p));
      for (const EdgePath& q : all) {
        const bool pq = path_equal(*set, p, q);
        EXPECT_EQ(pq, path_equal(*set, q, p));
        for (const EdgePath& r : all) {
          if (pq && path_equal(*set, q, r)) {
            EXPECT_TRUE(path_equal(*set, p, r));
          }
        }
      }
    }
  }
  // Congruence on the 3-cube: equal prefixes and suffixes compose to equal paths.
  const PrecubicalSet cube = standard_cube(3);
  const EdgePath p1 = path(cube, {"*00", "1*0"});
  const EdgePath p2 = path(cube, {"0*0", "*10"});
  const EdgePath q1 = path(cube, {"11*"});
  ASSERT_TRUE(path_equal(cube, p1, p2));
  EXPECT_TRUE(path_equal(cube, concat(p1, q1), concat(p2, q1)));
  const EdgePath r1 = path(cube, {"*00"});
  const EdgePath s1 = path(cube, {"1*0", "11*"});
  const EdgePath s2 = path(cube, {"10*", "1*1"});
  ASSERT_TRUE(path_equal(cube, s1, s2));
  EXPECT_TRUE(path_equal(cube, concat(r1, s1), concat(r1, s2)));
  EXPECT_TRUE(path_equal(cube, concat(p1, q1), concat(r1, s2)));
}

TEST(SquareMoves, PreserveLengthAndEndpoints) {
  for (const auto& e : corpus::full()) {
    const SquareMoves moves(e.set);
    for (const CellId a : e.set.cells(0)) {
      for (const CellId b : e.set.cells(0)) {
        for (const PathClass& cls : enumerate_path_classes(e.set, a, b, 3)) {
          for (const EdgePath& p : cls.members) {
            moves.neighbours(p, [&](const EdgePath& q) {
              EXPECT_NO_THROW(check_path(e.set, q));
              EXPECT_EQ(q.length(), p.length());
              EXPECT_EQ(path_source(e.set, q), path_source(e.set, p));
              EXPECT_EQ(path_target(e.set, q), path_target(e.set, p));
            });
          }
        }
      }
    }
  }
}

TEST(EnumeratePathClasses, Examples) {
  const PrecubicalSet sq = standard_cube(2);
  const auto c1 = enumerate_path_classes(sq, sq.at(0, "00"), sq.at(0, "11"), 2);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].members.size(), 2u);
  EXPECT_EQ(path_labels(sq, c1[0].representative), (std::vector<std::string>{"*0", "1*"}));

  const PrecubicalSet bd = boundary_cube(2);
  const auto c2 = enumerate_path_classes(bd, bd.at(0, "00"), bd.at(0, "11"), 2);
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_LT(c2[0].representative, c2[1].representative);

  const PrecubicalSet bd3 = boundary_cube(3);
  const auto c3 = enumerate_path_classes(bd3, bd3.at(0, "000"), bd3.at(0, "111"), 3);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].members.size(), 6u);

  EXPECT_TRUE(enumerate_path_classes(sq, sq.at(0, "11"), sq.at(0, "00"), 4).empty());
  EXPECT_THROW(enumerate_path_classes(sq, CellId{0, 9}, CellId{0, 0}, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_path_classes(sq, CellId{0, 0}, CellId{0, 0}, 0), std::invalid_argument);
}

TEST(EnumeratePathClasses, LoopsNeedTheBound) {
  const PrecubicalSet c = directed_circle();
  const CellId v = c.at(0, "v");
  EXPECT_EQ(enumerate_path_classes(c, v, v, 5).size(), 5u);  // e, ee, ..., eeeee
  const PrecubicalSet t = torus(2);
  const CellId tv = t.cells(0).front();
  // Length k paths on the torus modulo commutation: k + 1 classes each.
  EXPECT_EQ(enumerate_path_classes(t, tv, tv, 3).size(), 2u + 3u + 4u);
}

TEST(CountFlowMorphisms, Examples) {
  EXPECT_EQ(count_flow_morphisms(standard_cube(2), 2), 5u);
  EXPECT_EQ(count_flow_morphisms(standard_cube(3), 3), 19u);
  EXPECT_EQ(count_flow_morphisms(boundary_cube(2), 2), 6u);
  EXPECT_EQ(count_flow_morphisms(boundary_cube(3), 3), 19u);
}

TEST(CountFlowMorphisms, RepresentablesMatchWordEnumeration) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const PrecubicalSet cube = standard_cube(n);
    EXPECT_EQ(realize_states(cube).size(), oracle::pow_size(2, n));
    EXPECT_EQ(count_flow_morphisms(cube, std::max<std::size_t>(n, 1)), oracle::flow_words_with_star(n));
  }
}

TEST(StateOrder, ProductOrderOnCubes) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const PrecubicalSet cube = standard_cube(n);
    const StateOrder order = state_order(cube);
    ASSERT_TRUE(std::holds_alternative<StatePoset>(order));
    const auto& poset = std::get<StatePoset>(order);
    for (const CellId a : cube.cells(0))
      for (const CellId b : cube.cells(0))
        EXPECT_EQ(poset.less[a.index][b.index], oracle::product_less(cube.label(a), cube.label(b)));
  }
  const PrecubicalSet sq = standard_cube(2);
  const auto rel = std::get<StatePoset>(state_order(sq)).relations();
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [a, b] : rel) named.emplace_back(sq.label(a), sq.label(b));
  EXPECT_EQ(named, (std::vector<std::pair<std::string, std::string>>{
                       {"00", "01"}, {"00", "10"}, {"00", "11"}, {"01", "11"}, {"10", "11"}}));
}

TEST(StateOrder, LoopReportAndEmptyOrder) {
  const PrecubicalSet c = directed_circle();
  const StateOrder o = state_order(c);
  ASSERT_TRUE(std::holds_alternative<LoopReport>(o));
  EXPECT_EQ(path_labels(c, std::get<LoopReport>(o).cycle), (std::vector<std::string>{"e"}));

  const PrecubicalSet verts = skeleton(standard_cube(2), 0);
  const StateOrder v = state_order(verts);
  ASSERT_TRUE(std::holds_alternative<StatePoset>(v));
  EXPECT_TRUE(std::get<StatePoset>(v).relations().empty());
}

TEST(StateOrder, LoopReportIsACycle) {
  for (const auto& e : corpus::full(60, 99)) {
    const StateOrder o = state_order(e.set);
    if (const auto* loop = std::get_if<LoopReport>(&o)) {
      EXPECT_NO_THROW(check_path(e.set, loop->cycle)) << e.name;
      EXPECT_EQ(path_source(e.set, loop->cycle), path_target(e.set, loop->cycle)) << e.name;
    }
  }
}

TEST(StateOrder, IsAStrictPartialOrderMatchingClosure) {
  for (const auto& e : corpus::full(60, 99)) {
    const StateOrder o = state_order(e.set);
    if (!std::holds_alternative<StatePoset>(o)) continue;
    const auto& less = std::get<StatePoset>(o).less;
    const auto closure = oracle::transitive_closure(e.set);
    const std::size_t n = less.size();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_FALSE(less[a][a]) << e.name;
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(less[a][b], closure[a][b]) << e.name;
        if (less[a][b]) {
          EXPECT_FALSE(less[b][a]) << e.name;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (less[a][b] && less[b][c]) {
            EXPECT_TRUE(less[a][c]) << e.name;
          }
        }
      }
    }
  }
}

TEST(Naturality, MorphismsPreservePathEquality) {
  std::mt19937 rng(5);
  // Pushout legs and quotient maps out of cubes and boundaries.
  const std::vector<PrecubicalSet> sources{standard_cube(2), standard_cube(3), boundary_cube(3),
                                           tensor(boundary_cube(2), standard_cube(1))};
  for (const PrecubicalSet& k : sources) {
    for (int trial = 0; trial < 6; ++trial) {
      const PrecubicalSet m = corpus::random_piece(rng);
      if (m.empty()) continue;
      const std::size_t dim = std::uniform_int_distribution<std::size_t>(
          0, static_cast<std::size_t>(std::min(k.top_dim(), m.top_dim())))(rng);
      const Pushout po = pushout(standard_cube(dim), k, m, classifying_map(k, corpus::random_cell(k, dim, rng)),
                                 classifying_map(m, corpus::random_cell(m, dim, rng)));
      const Pushout quotient = corpus::identify(k, corpus::random_cell(k, 0, rng), corpus::random_cell(k, 0, rng));
      for (const auto& [f, target] : {std::pair{&po.from_left, &po.set}, std::pair{&quotient.from_left, &quotient.set}}) {
        ASSERT_TRUE(is_morphism(*f, k, *target));
        for (const CellId s : realize_states(k)) EXPECT_EQ((*f)(s).dim, 0u);
        for (const CellId a : k.cells(0)) {
          for (const CellId b : k.cells(0)) {
            for (const PathClass& cls : enumerate_path_classes(k, a, b, 3)) {
              for (const EdgePath& p : cls.members) {
                for (const EdgePath& q : cls.members) {
                  EXPECT_TRUE(path_equal(*target, map_path(*f, p), map_path(*f, q)));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST(CombFlow, AtomsSitOnCorners) {
  const PrecubicalSet cube = standard_cube(3);
  const CombFlow flow = comb_flow(cube);
  EXPECT_EQ(flow.states.size(), 8u);
  EXPECT_EQ(flow.atoms.size(), 12u + 6u + 1u);
  for (const Atom& a : flow.atoms) {
    EXPECT_NE(a.source, a.target);  // no identities in a loopless flow
    EXPECT_EQ(path_source(cube, a.diagonal), a.source);
    EXPECT_EQ(path_target(cube, a.diagonal), a.target);
  }
}
