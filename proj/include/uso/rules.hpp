#ifndef USO_RULES_HPP
#define USO_RULES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uso/cube.hpp"

namespace uso {

enum class RuleKind {
  LeastEntered,             // Zadeh
  LeastUsedDirection,       // LUD
  LeastRecentlyConsidered,  // LRC
  LeastRecentlyBasic,       // LRB
  LeastRecentlyEntered,     // LRE
  LeastIterationsInBasis,   // LIB
};

inline constexpr std::array<RuleKind, 6> kAllRules = {
    RuleKind::LeastEntered,           RuleKind::LeastUsedDirection,
    RuleKind::LeastRecentlyConsidered, RuleKind::LeastRecentlyBasic,
    RuleKind::LeastRecentlyEntered,   RuleKind::LeastIterationsInBasis};

// CLI names: zadeh, lud, lrc, lrb, lre, lib.
std::string_view rule_name(RuleKind kind);
RuleKind parse_rule_kind(std::string_view name);

struct Rule {
  RuleKind kind = RuleKind::LeastEntered;
  // Only for LeastRecentlyConsidered: a permutation of the 2d signed
  // directions.
  std::vector<SignedDirection> ordering;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Comma separated signed list, e.g. "+2,-4,+1,-3,-2,+3,-1,+4".
std::vector<SignedDirection> parse_ordering(std::string_view text);
std::string format_ordering(const std::vector<SignedDirection>& ordering);

/// History array of a pivot rule.  Entries are indexed by
/// SignedDirection::index(); the least-used-direction rule keeps one counter
/// per unsigned direction in slot axis - 1.
struct HistoryState {
  RuleKind kind = RuleKind::LeastEntered;
  int dimension = 0;
  // Number of vertices visited so far, the start vertex being step 1.
  std::int64_t step = 1;
  // Axes whose positive direction has been taken at least once.
  AxisMask used_positive = 0;
  std::array<std::int64_t, 2 * kMaxDimension> h{};

  // The value candidate selection minimizes for t.
  std::int64_t key(SignedDirection t) const {
    return kind == RuleKind::LeastUsedDirection ? h[t.axis() - 1]
                                                : h[t.index()];
  }
  // Raw entry for a signed direction (unsigned slot for LUD).
  std::int64_t& at(SignedDirection t) {
    return h[kind == RuleKind::LeastUsedDirection ? t.axis() - 1 : t.index()];
  }

  friend bool operator==(const HistoryState&, const HistoryState&) = default;
};

/// Initial history with the start vertex already counted as step 1.
/// Throws InvalidInput if an LRC ordering is missing or not a permutation of
/// the 2d signed directions.
HistoryState init_history(const Rule& rule, int d);

/// Members of `improving` that minimize the history key.  An empty improving
/// set yields an empty result, which means the walk sits at the sink.
DirectionSet candidate_set(const HistoryState& state, DirectionSet improving);

/// Records that `chosen` was pivoted on and the walk arrived at `arrived`;
/// the step counter advances by one.
void advance(HistoryState& state, SignedDirection chosen, Vertex arrived);

inline HistoryState advanced(HistoryState state, SignedDirection chosen,
                             Vertex arrived) {
  advance(state, chosen, arrived);
  return state;
}

std::vector<SignedDirection> directions_of(DirectionSet set);
DirectionSet direction_set(const std::vector<SignedDirection>& dirs);

// LIFO store of history copies, one per search depth.
class HistoryStack {
 public:
  using Token = std::size_t;

  Token snapshot(const HistoryState& state);
  // Throws std::logic_error unless `token` is the most recent snapshot.
  void restore(HistoryState& state, Token token);
  std::size_t depth() const { return saved_.size(); }

 private:
  std::vector<HistoryState> saved_;
};

}  // namespace uso

#endif  // USO_RULES_HPP
