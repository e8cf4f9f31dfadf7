// Worked history tables for the six pivot rules on one 4-cube AUSO.  Each row
// is the history on arrival at a vertex, the outgoing directions of the AUSO
// there, and the direction the example walk takes.  Shared by the unit tests
// and the acceptance suite.
#ifndef USO_TESTS_FIXTURES_HPP
#define USO_TESTS_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "uso/cube.hpp"
#include "uso/rules.hpp"

namespace uso::fixtures {

struct Row {
  Vertex vertex;
  // One entry per signed direction in order +1, -1, ..., +4, -4; for the
  // least-used-direction rule one entry per unsigned direction 1..4.
  std::vector<std::int64_t> h;
  std::vector<int> outgoing;  // signed (or unsigned for LUD)
  std::optional<int> chosen;
};

struct Table {
  std::string name;
  Rule rule;
  std::vector<Row> rows;
};

inline std::vector<Table> history_tables() {
  const Rule lrc{RuleKind::LeastRecentlyConsidered,
                 parse_ordering("+2,-4,+1,-3,-2,+3,-1,+4")};
  return {
      {"zadeh",
       {RuleKind::LeastEntered, {}},
       {
           {0, {0, 0, 0, 0, 0, 0, 0, 0}, {+1, +2, +3, +4}, +1},
           {1, {1, 0, 0, 0, 0, 0, 0, 0}, {+2, +3, +4}, +2},
           {3, {1, 0, 1, 0, 0, 0, 0, 0}, {-1, +4}, -1},
           {2, {1, 1, 1, 0, 0, 0, 0, 0}, {+3, +4}, +4},
           {10, {1, 1, 1, 0, 0, 0, 1, 0}, {+1, -2}, -2},
           {8, {1, 1, 1, 1, 0, 0, 1, 0}, {}, std::nullopt},
       }},
      {"lud",
       {RuleKind::LeastUsedDirection, {}},
       {
           {0, {0, 0, 0, 0}, {1, 2, 3, 4}, 1},
           {1, {1, 0, 0, 0}, {2, 3, 4}, 2},
           {3, {1, 1, 0, 0}, {1, 4}, 4},
           {11, {1, 1, 0, 1}, {2}, 2},
           {9, {1, 2, 0, 1}, {1}, 1},
           {8, {2, 2, 0, 1}, {}, std::nullopt},
       }},
      {"lrc",
       lrc,
       {
           {0, {3, 7, 1, 5, 6, 4, 8, 2}, {+1, +2, +3, +4}, +2},
           {2, {2, 6, 8, 4, 5, 3, 7, 1}, {+3, +4}, +3},
           {6, {5, 1, 3, 7, 8, 6, 2, 4}, {+1, -2, +4}, +4},
           {14, {3, 7, 1, 5, 6, 4, 8, 2}, {-3}, -3},
           {10, {7, 3, 5, 1, 2, 8, 4, 6}, {+1, -2}, -2},
           {8, {6, 2, 4, 8, 1, 7, 3, 5}, {}, std::nullopt},
       }},
      {"lrb",
       {RuleKind::LeastRecentlyBasic, {}},
       {
           {0, {0, 1, 0, 1, 0, 1, 0, 1}, {+1, +2, +3, +4}, +1},
           {1, {2, 1, 0, 2, 0, 2, 0, 2}, {+2, +3, +4}, +3},
           {5, {3, 1, 0, 3, 3, 2, 0, 3}, {-1, +2, +4}, +4},
           {13, {4, 1, 0, 4, 4, 2, 4, 3}, {+2, -3}, +2},
           {15, {5, 1, 5, 4, 5, 2, 5, 3}, {-1, -3, -4}, -1},
           {14, {5, 6, 6, 4, 6, 2, 6, 3}, {-3}, -3},
           {10, {5, 7, 7, 4, 6, 7, 7, 3}, {+1, -2}, -2},
           {8, {5, 8, 7, 8, 6, 8, 8, 3}, {}, std::nullopt},
       }},
      {"lre",
       {RuleKind::LeastRecentlyEntered, {}},
       {
           {0, {0, 1, 0, 1, 0, 1, 0, 1}, {+1, +2, +3, +4}, +1},
           {1, {2, 1, 0, 1, 0, 1, 0, 1}, {+2, +3, +4}, +3},
           {5, {2, 1, 0, 1, 3, 1, 0, 1}, {-1, +2, +4}, +4},
           {13, {2, 1, 0, 1, 3, 1, 4, 1}, {+2, -3}, +2},
           {15, {2, 1, 5, 1, 3, 1, 4, 1}, {-1, -3, -4}, -3},
           {11, {2, 1, 5, 1, 3, 6, 4, 1}, {-2}, -2},
           {9, {2, 1, 5, 7, 3, 6, 4, 1}, {-1}, -1},
           {8, {2, 8, 5, 7, 3, 6, 4, 1}, {}, std::nullopt},
       }},
      {"lib",
       {RuleKind::LeastIterationsInBasis, {}},
       {
           {0, {0, 1, 0, 1, 0, 1, 0, 1}, {+1, +2, +3, +4}, +1},
           {1, {1, 1, 0, 2, 0, 2, 0, 2}, {+2, +3, +4}, +3},
           {5, {2, 1, 0, 3, 1, 2, 0, 3}, {-1, +2, +4}, +4},
           {13, {3, 1, 0, 4, 2, 2, 1, 3}, {+2, -3}, +2},
           {15, {4, 1, 1, 4, 3, 2, 2, 3}, {-1, -3, -4}, -1},
           {14, {4, 2, 2, 4, 4, 2, 3, 3}, {-3}, -3},
           {10, {4, 3, 3, 4, 4, 3, 4, 3}, {+1, -2}, +1},
           {11, {5, 3, 4, 4, 4, 4, 5, 3}, {-2}, -2},
           {9, {5, 3, 4, 5, 4, 5, 6, 3}, {-1}, -1},
           {8, {5, 4, 4, 6, 4, 6, 7, 3}, {}, std::nullopt},
       }},
  };
}

// Replays a table through init_history / candidate_set / advance and returns
// one message per disagreement.
inline std::vector<std::string> replay(const Table& table) {
  constexpr int d = 4;
  const bool by_axis = table.rule.kind == RuleKind::LeastUsedDirection;
  std::vector<std::string> problems;
  HistoryState state = init_history(table.rule, d);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const Row& row = table.rows[r];
    const std::string where = table.name + " row " + std::to_string(r) + " (vertex " +
                              std::to_string(row.vertex) + ")";
    for (std::size_t i = 0; i < row.h.size(); ++i) {
      if (state.h[i] != row.h[i]) {
        problems.push_back(where + ": h[" + std::to_string(i) + "] = " +
                           std::to_string(state.h[i]) + ", table has " +
                           std::to_string(row.h[i]));
      }
    }
    if (state.step != static_cast<std::int64_t>(r) + 1) {
      problems.push_back(where + ": step " + std::to_string(state.step));
    }
    if (!row.chosen) break;
    auto signed_of = [&](int t) {
      return by_axis ? direction_at(row.vertex, t) : SignedDirection(t);
    };
    DirectionSet outgoing = 0;
    for (int t : row.outgoing) outgoing |= signed_of(t).bit();
    const SignedDirection chosen = signed_of(*row.chosen);
    const DirectionSet candidates = candidate_set(state, outgoing);
    if (!(candidates & chosen.bit())) {
      problems.push_back(where + ": chosen " + to_string(chosen) +
                         " not among the minimizers");
    }
    const Vertex next = move(d, row.vertex, chosen);
    if (r + 1 < table.rows.size() && next != table.rows[r + 1].vertex) {
      problems.push_back(where + ": move leads to " + std::to_string(next));
    }
    advance(state, chosen, next);
  }
  return problems;
}

// The forced opening of any least-recently-entered walk for d >= 5: the
// vertex sequence through the end of the third stage, and the history rows
// expected at the end of each stage.
struct LreOpening {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> checkpoints;
};

inline LreOpening lre_opening(int d) {
  LreOpening o;
  const Vertex full = (Vertex{1} << d) - 1;
  Vertex v = 0;
  o.vertices.push_back(v);
  for (int i = 0; i < d; ++i) o.vertices.push_back(v |= Vertex{1} << i);
  auto row = [&](auto value) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(2 * d));
    for (int i = 1; i <= d; ++i) {
      h[SignedDirection::positive(i).index()] = value(+i);
      h[SignedDirection::negative(i).index()] = value(-i);
    }
    return h;
  };
  // End of stage one at 2^d - 1: h(+i) = i + 1, h(-i) = 1.
  o.checkpoints.emplace_back(o.vertices.size() - 1,
                             row([](int t) { return t > 0 ? t + 1 : 1; }));
  for (int i = d - 2; i >= 0; --i) o.vertices.push_back(v &= ~(Vertex{1} << i));
  // End of stage two at 2^(d-1).
  o.checkpoints.emplace_back(o.vertices.size() - 1, row([d](int t) -> std::int64_t {
                               if (t > 0) return t + 1;
                               if (t == -d) return 1;
                               return 2 * d + 1 + t;
                             }));
  o.vertices.push_back(v |= 2);           // 2^(d-1) + 2
  o.vertices.push_back(v &= ~(full ^ (full >> 1)));  // 2
  for (int i = 2; i < d; ++i) o.vertices.push_back(v |= Vertex{1} << i);
  // End of stage three at 2^d - 2.
  o.checkpoints.emplace_back(o.vertices.size() - 1, row([d](int t) -> std::int64_t {
                               if (t == 1) return 2;
                               if (t == 2) return 2 * d + 1;
                               if (t > 2) return 2 * d + t;
                               if (t == -d) return 2 * d + 2;
                               return 2 * d + 1 + t;
                             }));
  return o;
}

}  // namespace uso::fixtures

#endif  // USO_TESTS_FIXTURES_HPP
