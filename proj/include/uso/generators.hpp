#ifndef USO_GENERATORS_HPP
#define USO_GENERATORS_HPP

#include <cstdint>

#include "uso/orientation.hpp"

namespace uso {

/// Klee-Minty cube as an AUSO: each edge points to the endpoint that comes
/// later in the reflected Gray sequence, so the Gray order is a directed
/// Hamiltonian path ending at gray_code(2^d - 1).
Orientation klee_minty(int d);

struct AusoCensus {
  // Labelled acyclic USOs.
  std::uint64_t raw = 0;
  // Isomorphism classes under coordinate permutations and reflections.
  std::uint64_t classes = 0;
  // Labelled USOs, cyclic ones included, and their classes.
  std::uint64_t raw_uso = 0;
  std::uint64_t uso_classes = 0;
};

/// Counts the acyclic USOs of the d-cube, d <= 4.  d <= 3 tests all
/// 2^(d 2^(d-1)) orientations; d = 4 backtracks over outmaps, keeping only
/// partial assignments in which every pair of assigned vertices is
/// distinguished inside the face they span.
AusoCensus enumerate_ausos(int d, int threads = 1);

// Same census through the backtracking route, available for any d <= 4.
AusoCensus enumerate_ausos_backtracking(int d, int threads = 1);

}  // namespace uso

#endif  // USO_GENERATORS_HPP
