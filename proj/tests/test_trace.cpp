#include <gtest/gtest.h>

#include <algorithm>

#include "uso/generators.hpp"
#include "uso/search.hpp"
#include "uso/trace.hpp"

using namespace uso;

TEST(Trace, GlobalSink) {
  EXPECT_EQ(global_sink(klee_minty(3)), gray_code(7));
  EXPECT_THROW(global_sink(Orientation(2, {3, 0, 0, 3})), NotUso);
}

TEST(Trace, ZadehOnKleeMinty) {
  const auto walks = trace(klee_minty(3), {RuleKind::LeastEntered, {}}, 0);
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_EQ(walks[0].vertices, (std::vector<Vertex>{0, 1, 3, 2, 6, 4}));
}

TEST(Trace, EveryRuleReachesTheSinkAlongEdges) {
  for (int d = 1; d <= 6; ++d) {
    const Orientation o = klee_minty(d);
    const Vertex sink = global_sink(o);
    for (RuleKind kind : kAllRules) {
      Rule rule{kind, {}};
      if (kind == RuleKind::LeastRecentlyConsidered) {
        for (int i = 2 * d - 1; i >= 0; --i) rule.ordering.push_back(SignedDirection::from_index(i));
      }
      for (Vertex start = 0; start < o.size(); start += 3) {
        for (const auto& w : trace(o, rule, start, {TieBreak::AllBranches, 0})) {
          ASSERT_EQ(w.vertices.front(), start);
          ASSERT_EQ(w.vertices.back(), sink);
          for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
            ASSERT_TRUE(o.has_edge(w.vertices[k], w.vertices[k + 1]));
          }
        }
      }
    }
  }
}

TEST(Trace, TieBranches) {
  // From 0 on the uniform 2-cube (all edges up) Zadeh ties between +1 and +2.
  const Orientation uniform(2, {3, 2, 1, 0});
  const auto lowest = trace(uniform, {RuleKind::LeastEntered, {}}, 0);
  ASSERT_EQ(lowest.size(), 1u);
  EXPECT_EQ(lowest[0].vertices, (std::vector<Vertex>{0, 1, 3}));
  const auto all = trace(uniform, {RuleKind::LeastEntered, {}}, 0, {TieBreak::AllBranches, 0});
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].vertices, (std::vector<Vertex>{0, 2, 3}));
}

TEST(Trace, RejectsNonUsoAndBadStart) {
  EXPECT_THROW(trace(Orientation(2, {3, 0, 0, 3}), {}, 0), NotUso);
  // directed 4-cycle
  EXPECT_THROW(trace(Orientation(2, {1, 2, 2, 1}), {}, 0), NotUso);
  EXPECT_THROW(trace(klee_minty(2), {}, 4), InvalidInput);
}

TEST(Trace, StepLimit) {
  EXPECT_THROW(trace(klee_minty(3), {}, 0, {TieBreak::LowestIndex, 3}), StepLimitExceeded);
  EXPECT_NO_THROW(trace(klee_minty(3), {}, 0, {TieBreak::LowestIndex, 5}));
}

TEST(Trace, EnumeratedPathsRoundTrip) {
  // Each path found by the search is one of the walks the rule can take on
  // the orientation the path induces.
  for (RuleKind kind : {RuleKind::LeastEntered, RuleKind::LeastUsedDirection,
                        RuleKind::LeastRecentlyEntered}) {
    SearchConfig c;
    c.rule = {kind, {}};
    c.dimension = 4;
    c.emit_paths = true;
    for (const auto& p : enumerate_hamiltonian(c).paths) {
      const Orientation o = orient_from_path(4, p.vertices);
      const auto walks = trace(o, c.rule, 0, {TieBreak::AllBranches, 0});
      const bool found = std::any_of(walks.begin(), walks.end(),
                                     [&](const PathRecord& w) { return w.vertices == p.vertices; });
      ASSERT_TRUE(found) << rule_name(kind);
    }
  }
  const LrcResult lrc = enumerate_lrc_all_orderings(4, false);
  for (const auto& p : lrc.paths) {
    ASSERT_FALSE(p.rule.ordering.empty());
    const auto walks = trace(orient_from_path(4, p.vertices), p.rule, 0);
    ASSERT_EQ(walks.size(), 1u);
    EXPECT_EQ(walks[0].vertices, p.vertices);
  }
}
