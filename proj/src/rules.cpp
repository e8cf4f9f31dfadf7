#include "uso/rules.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uso {

std::string_view rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::LeastEntered: return "zadeh";
    case RuleKind::LeastUsedDirection: return "lud";
    case RuleKind::LeastRecentlyConsidered: return "lrc";
    case RuleKind::LeastRecentlyBasic: return "lrb";
    case RuleKind::LeastRecentlyEntered: return "lre";
    case RuleKind::LeastIterationsInBasis: return "lib";
  }
  return "?";
}

RuleKind parse_rule_kind(std::string_view name) {
  for (RuleKind kind : kAllRules) {
    if (rule_name(kind) == name) return kind;
  }
  throw InvalidInput("unknown rule '" + std::string(name) +
                     "' (expected zadeh, lud, lrc, lrb, lre or lib)");
}

std::vector<SignedDirection> parse_ordering(std::string_view text) {
  std::vector<SignedDirection> out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_signed_direction(item));
  return out;
}

std::string format_ordering(const std::vector<SignedDirection>& ordering) {
  std::string out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(ordering[i]);
  }
  return out;
}

HistoryState init_history(const Rule& rule, int d) {
  check_dimension(d);
  HistoryState state;
  state.kind = rule.kind;
  state.dimension = d;
  state.step = 1;
  switch (rule.kind) {
    case RuleKind::LeastEntered:
    case RuleKind::LeastUsedDirection:
      break;
    case RuleKind::LeastRecentlyConsidered: {
      if (rule.ordering.size() != static_cast<std::size_t>(2 * d)) {
        throw InvalidInput("LRC ordering must list all " +
                           std::to_string(2 * d) + " signed directions");
      }
      DirectionSet seen = 0;
      for (std::size_t rank = 0; rank < rule.ordering.size(); ++rank) {
        const SignedDirection t = rule.ordering[rank];
        if (t.axis() > d || (seen & t.bit()) != 0) {
          throw InvalidInput("LRC ordering is not a permutation of +-1..+-" +
                             std::to_string(d));
        }
        seen |= t.bit();
        state.h[t.index()] = static_cast<std::int64_t>(rank) + 1;
      }
      break;
    }
    case RuleKind::LeastRecentlyBasic:
    case RuleKind::LeastRecentlyEntered:
    case RuleKind::LeastIterationsInBasis:
      for (int axis = 1; axis <= d; ++axis) {
        state.h[SignedDirection::positive(axis).index()] = 0;
        state.h[SignedDirection::negative(axis).index()] = 1;
      }
      break;
  }
  return state;
}

DirectionSet candidate_set(const HistoryState& state, DirectionSet improving) {
  DirectionSet best = 0;
  std::int64_t best_key = std::numeric_limits<std::int64_t>::max();
  const bool by_axis = state.kind == RuleKind::LeastUsedDirection;
  for (DirectionSet rest = improving; rest != 0; rest &= rest - 1) {
    const int index = std::countr_zero(rest);
    const std::int64_t key = state.h[by_axis ? index / 2 : index];
    if (key < best_key) {
      best_key = key;
      best = DirectionSet{1} << index;
    } else if (key == best_key) {
      best |= DirectionSet{1} << index;
    }
  }
  return best;
}

void advance(HistoryState& state, SignedDirection chosen, Vertex arrived) {
  const int d = state.dimension;
  const std::int64_t s = ++state.step;
  if (chosen.is_positive()) state.used_positive |= AxisMask{1} << (chosen.axis() - 1);
  switch (state.kind) {
    case RuleKind::LeastEntered:
    case RuleKind::LeastUsedDirection:
      state.at(chosen) += 1;
      break;
    case RuleKind::LeastRecentlyConsidered: {
      const std::int64_t pivot = state.h[chosen.index()];
      const std::int64_t m = 2 * d;
      for (int i = 0; i < 2 * d; ++i) {
        state.h[i] = ((state.h[i] - pivot - 1) % m + m) % m + 1;
      }
      break;
    }
    case RuleKind::LeastRecentlyBasic:
      for (int axis = 1; axis <= d; ++axis) {
        const bool one = (arrived >> (axis - 1)) & 1U;
        state.h[one ? SignedDirection::positive(axis).index()
                    : SignedDirection::negative(axis).index()] = s;
      }
      break;
    case RuleKind::LeastRecentlyEntered:
      state.h[chosen.index()] = s;
      break;
    case RuleKind::LeastIterationsInBasis:
      for (int axis = 1; axis <= d; ++axis) {
        const bool one = (arrived >> (axis - 1)) & 1U;
        state.h[one ? SignedDirection::positive(axis).index()
                    : SignedDirection::negative(axis).index()] += 1;
      }
      break;
  }
}

std::vector<SignedDirection> directions_of(DirectionSet set) {
  std::vector<SignedDirection> out;
  for (; set != 0; set &= set - 1) {
    out.push_back(SignedDirection::from_index(std::countr_zero(set)));
  }
  return out;
}

DirectionSet direction_set(const std::vector<SignedDirection>& dirs) {
  DirectionSet set = 0;
  for (SignedDirection t : dirs) set |= t.bit();
  return set;
}

HistoryStack::Token HistoryStack::snapshot(const HistoryState& state) {
  saved_.push_back(state);
  return saved_.size() - 1;
}

void HistoryStack::restore(HistoryState& state, Token token) {
  if (saved_.empty() || token != saved_.size() - 1) {
    throw std::logic_error("history snapshots must be restored in LIFO order");
  }
  state = saved_.back();
  saved_.pop_back();
}

}  // namespace uso
