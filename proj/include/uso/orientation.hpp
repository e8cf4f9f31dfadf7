#ifndef USO_ORIENTATION_HPP
#define USO_ORIENTATION_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uso/cube.hpp"

namespace uso {

// An input that was required to be a unique sink orientation is not one.
class NotUso : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orientation of all d 2^(d-1) edges of the d-cube, stored as one outmap per
/// vertex: bit i-1 of outmap(v) is set iff the edge of direction i is
/// outgoing at v.
class Orientation {
 public:
  // Throws InvalidInput unless every edge has exactly one tail.
  Orientation(int d, std::vector<AxisMask> outmaps);

  int dimension() const { return d_; }
  std::uint64_t size() const { return outmaps_.size(); }
  AxisMask outmap(Vertex v) const { return outmaps_[v]; }
  AxisMask inmap(Vertex v) const { return ~outmaps_[v] & full_; }
  std::span<const AxisMask> outmaps() const { return outmaps_; }
  bool has_edge(Vertex from, Vertex to) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int d_;
  AxisMask full_;
  std::vector<AxisMask> outmaps_;
};

// Index k holds the number of vertices with indegree k; length d + 1.
using DegreeHistogram = std::vector<std::uint64_t>;

/// Orients every edge from the earlier to the later endpoint in path order.
/// The path must be a Hamiltonian path of the d-cube.
Orientation orient_from_path(int d, std::span<const Vertex> path);

// Kahn-style topological sort, no recursion.
bool is_acyclic(const Orientation& o);

DegreeHistogram indegree_histogram(const Orientation& o);

/// Exactly C(d, k) vertices of indegree k for every k.  For acyclic inputs
/// this is equivalent to the USO property.
bool check_williamson_hoke(const Orientation& o);

/// Direct check: every face of dimension >= 1 has exactly one sink and
/// exactly one source.
bool is_uso_faces(const Orientation& o);

// Sink and source of a face whose induced subgraph has exactly one of each.
struct FaceEnds {
  Vertex source;
  Vertex sink;
};
FaceEnds face_ends(const Orientation& o, const Face& face);

/// Maximum number of internally vertex-disjoint directed paths from the
/// source to the sink of `face`, computed as a unit-capacity max flow on the
/// node-split face graph.
int disjoint_path_count(const Orientation& o, const Face& face);

/// Every face of dimension k >= 2 carries k internally vertex-disjoint
/// directed paths from its source to its sink.  Throws NotUso when a face
/// lacks a unique source or sink.  Callers that already know o is a USO may
/// skip the up-front face validation.
bool check_holt_klee(const Orientation& o, bool validate = true);

/// Lexicographically smallest serialized outmap table over all coordinate
/// permutations and reflections.  Equal keys exactly for isomorphic
/// orientations.  Limited to d <= 8.
std::string canonical_class_key(const Orientation& o);

// Image of o under v -> permute(v) ^ reflect, where bit i of v moves to bit
// perm[i].
Orientation transform(const Orientation& o, std::span<const int> perm,
                      AxisMask reflect);

}  // namespace uso

#endif  // USO_ORIENTATION_HPP
