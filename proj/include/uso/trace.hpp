#ifndef USO_TRACE_HPP
#define USO_TRACE_HPP

#include <cstdint>
#include <vector>

#include "uso/orientation.hpp"
#include "uso/rules.hpp"
#include "uso/search.hpp"

namespace uso {

enum class TieBreak {
  // Smallest signed index in the order +1, -1, +2, -2, ...
  LowestIndex,
  AllBranches,
};

struct TracePolicy {
  TieBreak ties = TieBreak::LowestIndex;
  // Maximum number of moves per walk; 0 means 2^d.
  std::uint64_t max_steps = 0;
};

// A walk exceeded TracePolicy::max_steps.
class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique vertex with an empty outmap.  Throws NotUso if there is none
/// or more than one.
Vertex global_sink(const Orientation& o);

/// Walks from `start` along outgoing edges chosen by the rule until the
/// global sink.  With AllBranches every tie resolution is explored and one
/// record per resulting walk is returned, in lexicographic branch order.
/// Throws NotUso if o is not an acyclic USO.
std::vector<PathRecord> trace(const Orientation& o, const Rule& rule,
                              Vertex start, const TracePolicy& policy = {});

}  // namespace uso

#endif  // USO_TRACE_HPP
