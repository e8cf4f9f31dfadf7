#ifndef USO_SEARCH_HPP
#define USO_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "uso/cube.hpp"
#include "uso/rules.hpp"

namespace uso {

/// A path followed by a pivot rule together with its per-direction usage.
struct PathRecord {
  int dimension = 0;
  Rule rule;
  std::vector<Vertex> vertices;
  std::vector<SignedDirection> directions;
  // usage[SignedDirection::index()] = times that signed direction was taken.
  std::vector<std::uint64_t> usage;

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Fills directions and usage from the vertex sequence.
PathRecord make_path_record(int d, const Rule& rule,
                            std::vector<Vertex> vertices);

struct SearchConfig {
  Rule rule;
  int dimension = 2;
  bool holt_klee_filter = false;
  bool emit_paths = false;
  // Stop once this many accepted paths (after the Holt-Klee filter, if on)
  // have been found.
  std::optional<std::uint64_t> limit;
  // Moves made before the tree is cut into independent work items.
  int split_depth = 0;
  int threads = 1;
  // Off: explore every tie branch of every start and keep only completed
  // paths already in canonical first-use order.  Used to validate pruning.
  bool prune = true;
  // Recheck every accepted path with the face-by-face USO oracle.
  bool verify_faces = false;
};

struct SearchResult {
  // Hamiltonian paths whose induced orientation is a USO.
  std::uint64_t count = 0;
  // Subset of `count` satisfying the Holt-Klee condition (only computed
  // when holt_klee_filter is set).
  std::uint64_t holt_klee_count = 0;
  std::uint64_t nodes = 0;
  std::vector<PathRecord> paths;
  bool stopped_early = false;
};

using PathSink = std::function<void(const PathRecord&)>;

/// Depth-first enumeration from vertex 0 of all Hamiltonian paths a rule can
/// follow on some acyclic USO, one representative per coordinate
/// permutation.  When emit_paths is set, accepted paths go to `sink` if
/// given, otherwise into SearchResult::paths.  LRC requires a fixed ordering
/// in the rule; see enumerate_lrc_all_orderings.
SearchResult enumerate_hamiltonian(const SearchConfig& config,
                                   const PathSink& sink = {});

struct LrcResult {
  std::uint64_t orderings = 0;
  // Orderings whose walk was accepted.
  std::uint64_t accepted_orderings = 0;
  // Distinct accepted vertex sequences.
  std::uint64_t count = 0;
  std::uint64_t holt_klee_count = 0;
  // Sorted lexicographically by vertex sequence.
  std::vector<PathRecord> paths;
};

/// Runs the deterministic least-recently-considered walk for every ordering
/// of the 2d signed directions and collects the distinct Hamiltonian paths
/// in canonical first-use order that induce an acyclic USO.
LrcResult enumerate_lrc_all_orderings(int d, bool holt_klee_filter,
                                      int threads = 1, bool prune = true);

struct PathStats {
  std::vector<std::uint64_t> usage;
  std::uint64_t min_usage = 0;
  // 2^(d-2)/d - 3/2, and its ceiling as an integer requirement.
  double usage_bound = 0.0;
  std::int64_t usage_bound_ceil = 0;
  bool meets_usage_bound = false;
  // The first min(2d-1, path length) moves use pairwise distinct signed
  // directions.
  bool distinct_opening = false;
  std::uint64_t total_moves = 0;
};

PathStats path_stats(const PathRecord& p);

// Positive directions appear for the first time in the order +1, +2, ...
bool in_first_use_order(const std::vector<SignedDirection>& directions);

}  // namespace uso

#endif  // USO_SEARCH_HPP
