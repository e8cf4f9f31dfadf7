#include "uso/orientation.hpp"

#include <bit>

namespace uso {

Orientation::Orientation(int d, std::vector<AxisMask> outmaps)
    : d_(d), full_(0), outmaps_(std::move(outmaps)) {
  check_dimension(d);
  full_ = static_cast<AxisMask>(vertex_count(d) - 1);
  if (outmaps_.size() != vertex_count(d)) {
    throw InvalidInput("expected " + std::to_string(vertex_count(d)) +
                       " outmaps, got " + std::to_string(outmaps_.size()));
  }
  for (Vertex v = 0; v < outmaps_.size(); ++v) {
    if ((outmaps_[v] & ~full_) != 0) {
      throw InvalidInput("outmap of vertex " + std::to_string(v) +
                         " names a direction above " + std::to_string(d));
    }
    for (int i = 0; i < d; ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (w < v) continue;
      const bool out_v = (outmaps_[v] >> i) & 1U;
      const bool out_w = (outmaps_[w] >> i) & 1U;
      if (out_v == out_w) {
        throw InvalidInput("edge {" + std::to_string(v) + ", " +
                           std::to_string(w) + "} has " +
                           (out_v ? "two tails" : "no tail"));
      }
    }
  }
}

bool Orientation::has_edge(Vertex from, Vertex to) const {
  const Vertex diff = from ^ to;
  if (!std::has_single_bit(diff)) return false;
  return (outmaps_[from] & diff) != 0;
}

Orientation orient_from_path(int d, std::span<const Vertex> path) {
  check_dimension(d);
  const std::uint64_t n = vertex_count(d);
  if (path.size() != n) {
    throw InvalidInput("path has " + std::to_string(path.size()) +
                       " vertices, a Hamiltonian path needs " +
                       std::to_string(n));
  }
  constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> position(n, kUnseen);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Vertex v = path[k];
    if (v >= n || position[v] != kUnseen) {
      throw InvalidInput("path repeats or leaves the cube at vertex " +
                         std::to_string(v));
    }
    if (k > 0 && !std::has_single_bit(v ^ path[k - 1])) {
      throw InvalidInput("path vertices " + std::to_string(path[k - 1]) +
                         " and " + std::to_string(v) + " are not adjacent");
    }
    position[v] = k;
  }
  std::vector<AxisMask> out(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) {
      if (position[v] < position[v ^ (Vertex{1} << i)]) out[v] |= AxisMask{1} << i;
    }
  }
  return Orientation(d, std::move(out));
}

bool is_acyclic(const Orientation& o) {
  const int d = o.dimension();
  const std::uint64_t n = o.size();
  std::vector<int> indegree(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = std::popcount(o.inmap(v));
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::uint64_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (int i = 0; i < d; ++i) {
      if (!((o.outmap(v) >> i) & 1U)) continue;
      const Vertex w = v ^ (Vertex{1} << i);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

DegreeHistogram indegree_histogram(const Orientation& o) {
  DegreeHistogram counts(static_cast<std::size_t>(o.dimension()) + 1, 0);
  for (Vertex v = 0; v < o.size(); ++v) ++counts[std::popcount(o.inmap(v))];
  return counts;
}

bool check_williamson_hoke(const Orientation& o) {
  const DegreeHistogram counts = indegree_histogram(o);
  for (int k = 0; k <= o.dimension(); ++k) {
    if (counts[k] != binomial(o.dimension(), k)) return false;
  }
  return true;
}

namespace {

struct EndCounts {
  int sinks = 0;
  int sources = 0;
  Vertex sink = 0;
  Vertex source = 0;
};

EndCounts count_ends(const Orientation& o, const Face& face) {
  EndCounts c;
  AxisMask sub = 0;
  do {
    const Vertex v = face.base | sub;
    const AxisMask local = o.outmap(v) & face.free;
    if (local == 0) {
      ++c.sinks;
      c.sink = v;
    }
    if (local == face.free) {
      ++c.sources;
      c.source = v;
    }
    sub = (sub - face.free) & face.free;
  } while (sub != 0);
  return c;
}

}  // namespace

bool is_uso_faces(const Orientation& o) {
  const int d = o.dimension();
  bool ok = true;
  for (int k = 1; k <= d && ok; ++k) {
    for_each_face(d, k, [&](const Face& face) {
      if (!ok) return;
      const EndCounts c = count_ends(o, face);
      ok = c.sinks == 1 && c.sources == 1;
    });
  }
  return ok;
}

FaceEnds face_ends(const Orientation& o, const Face& face) {
  const EndCounts c = count_ends(o, face);
  if (c.sinks != 1 || c.sources != 1) {
    throw NotUso("face with base " + std::to_string(face.base) +
                 " and free mask " + std::to_string(face.free) + " has " +
                 std::to_string(c.sources) + " sources and " +
                 std::to_string(c.sinks) + " sinks");
  }
  return FaceEnds{c.source, c.sink};
}

}  // namespace uso
