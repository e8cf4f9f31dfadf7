#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "uso/generators.hpp"
#include "uso/orientation.hpp"

using namespace uso;

namespace {

// All 2^(d 2^(d-1)) orientations of the d-cube, edges listed (v, axis) with
// bit axis of v clear; bit e of `code` set means the edge points up.
std::vector<AxisMask> decode(int d, std::uint64_t code) {
  std::vector<AxisMask> out(vertex_count(d), 0);
  int e = 0;
  for (Vertex v = 0; v < vertex_count(d); ++v) {
    for (int i = 0; i < d; ++i) {
      if (v & (1u << i)) continue;
      if ((code >> e++) & 1) {
        out[v] |= 1u << i;
      } else {
        out[v | (1u << i)] |= 1u << i;
      }
    }
  }
  return out;
}

// Reachability closure: cyclic iff some vertex reaches itself.
bool acyclic_by_closure(const Orientation& o) {
  const std::size_t n = o.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < o.dimension(); ++i)
      if (o.outmap(v) & (1u << i)) r[v][v ^ (1u << i)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (r[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (r[k][b]) r[a][b] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (r[v][v]) return false;
  return true;
}

// Enumerates every directed simple path source -> sink inside the face and
// finds the largest family with pairwise disjoint interiors by exhaustion.
int disjoint_paths_brute(const Orientation& o, const Face& f, Vertex s, Vertex t) {
  std::vector<std::uint64_t> interiors;
  std::function<void(Vertex, std::uint64_t)> dfs = [&](Vertex v, std::uint64_t used) {
    if (v == t) {
      interiors.push_back(used & ~(std::uint64_t{1} << s) & ~(std::uint64_t{1} << t));
      return;
    }
    for (int i = 0; i < o.dimension(); ++i) {
      const Vertex w = v ^ (1u << i);
      if (!(f.free & (1u << i)) || !(o.outmap(v) & (1u << i))) continue;
      if (used & (std::uint64_t{1} << w)) continue;
      dfs(w, used | (std::uint64_t{1} << w));
    }
  };
  dfs(s, std::uint64_t{1} << s);
  // Bit 0 stands for the direct edge s -> t, which has no interior but can
  // only be used once.
  for (auto& m : interiors) m = m == 0 ? 1 : m << 1;
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> pick = [&](std::size_t i, std::uint64_t used,
                                                                 int count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < interiors.size(); ++j) {
      if (!(interiors[j] & used)) pick(j + 1, used | interiors[j], count + 1);
    }
  };
  pick(0, 0, 0);
  return best;
}

std::vector<Orientation> all_ausos(int d) {
  std::vector<Orientation> out;
  const int edges = d << (d - 1);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges); ++code) {
    Orientation o(d, decode(d, code));
    if (is_acyclic(o) && is_uso_faces(o)) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

TEST(Orientation, RejectsInconsistentEdges) {
  EXPECT_THROW(Orientation(1, {1, 1}), InvalidInput);
  EXPECT_THROW(Orientation(1, {0, 0}), InvalidInput);
  EXPECT_THROW(Orientation(2, {3, 0, 0}), InvalidInput);
  EXPECT_THROW(Orientation(2, {4, 0, 0, 0}), InvalidInput);
  Orientation o(2, {3, 2, 1, 0});
  EXPECT_TRUE(o.has_edge(0, 1));
  EXPECT_FALSE(o.has_edge(1, 0));
  EXPECT_FALSE(o.has_edge(0, 3));
  EXPECT_EQ(o.inmap(3), 3u);
}

TEST(Orientation, HistogramMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const Orientation o(d, decode(d, rng()));
    DegreeHistogram want(d + 1, 0);
    for (Vertex v = 0; v < o.size(); ++v) {
      int in = 0;
      for (Vertex w = 0; w < o.size(); ++w)
        if (o.has_edge(w, v)) ++in;
      ++want[in];
    }
    ASSERT_EQ(indegree_histogram(o), want);
  }
}

TEST(Orientation, AcyclicityMatchesClosure) {
  for (std::uint64_t code = 0; code < 4096; ++code) {
    const Orientation o(3, decode(3, code));
    ASSERT_EQ(is_acyclic(o), acyclic_by_closure(o)) << code;
  }
}

TEST(Orientation, WilliamsonHokeEquivalenceOnThreeCube) {
  int ausos = 0;
  for (std::uint64_t code = 0; code < 4096; ++code) {
    const Orientation o(3, decode(3, code));
    if (!is_acyclic(o)) continue;
    ASSERT_EQ(is_uso_faces(o), check_williamson_hoke(o)) << code;
    ausos += is_uso_faces(o);
  }
  EXPECT_EQ(ausos, 744 - 16);
}

TEST(Orientation, PathInducedOrientation) {
  const std::vector<Vertex> path{0, 1, 3, 2};
  const Orientation o = orient_from_path(2, path);
  EXPECT_EQ(std::vector<AxisMask>(o.outmaps().begin(), o.outmaps().end()),
            (std::vector<AxisMask>{3, 2, 0, 1}));
  EXPECT_TRUE(is_acyclic(o));
  EXPECT_TRUE(check_williamson_hoke(o));
  EXPECT_THROW(orient_from_path(2, std::vector<Vertex>{0, 1, 3}), InvalidInput);
  EXPECT_THROW(orient_from_path(2, std::vector<Vertex>{0, 3, 1, 2}), InvalidInput);
  EXPECT_THROW(orient_from_path(2, std::vector<Vertex>{0, 1, 0, 2}), InvalidInput);
}

TEST(Orientation, FaceEnds) {
  const Orientation km = klee_minty(3);
  const FaceEnds whole = face_ends(km, Face{7, 0});
  EXPECT_EQ(whole.source, 0u);
  EXPECT_EQ(whole.sink, gray_code(7));
  const Orientation two_sinks(2, {3, 0, 0, 3});
  ASSERT_FALSE(is_uso_faces(two_sinks));
  EXPECT_THROW(face_ends(two_sinks, Face{3, 0}), NotUso);
  EXPECT_THROW(check_holt_klee(two_sinks), NotUso);
}

TEST(Orientation, DisjointPathsMatchBruteForce) {
  for (const Orientation& o : all_ausos(3)) {
    for (int k = 1; k <= 3; ++k) {
      for (const Face& f : enumerate_faces(3, k)) {
        const FaceEnds ends = face_ends(o, f);
        ASSERT_EQ(disjoint_path_count(o, f), disjoint_paths_brute(o, f, ends.source, ends.sink));
      }
    }
  }
}

TEST(Orientation, HoltKleeMatchesBruteForce) {
  int passing = 0;
  for (const Orientation& o : all_ausos(3)) {
    bool want = true;
    for (int k = 2; k <= 3; ++k) {
      for (const Face& f : enumerate_faces(3, k)) {
        const FaceEnds ends = face_ends(o, f);
        if (disjoint_paths_brute(o, f, ends.source, ends.sink) < k) want = false;
      }
    }
    ASSERT_EQ(check_holt_klee(o), want);
    passing += want;
  }
  EXPECT_GT(passing, 0);
  EXPECT_LT(passing, 728);
}

TEST(Orientation, CanonicalKeyIsInvariant) {
  std::mt19937 rng(3);
  for (int d = 1; d <= 5; ++d) {
    const Orientation km = klee_minty(d);
    const std::string key = canonical_class_key(km);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> perm(d);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const AxisMask reflect = rng() & ((1u << d) - 1);
      const Orientation image = transform(km, perm, reflect);
      ASSERT_TRUE(is_acyclic(image));
      ASSERT_TRUE(is_uso_faces(image));
      ASSERT_EQ(canonical_class_key(image), key);
    }
  }
}

TEST(Orientation, CanonicalKeySeparatesClasses) {
  // Uniform orientation (every edge up) against Klee-Minty.
  const Orientation uniform(3, {7, 6, 5, 4, 3, 2, 1, 0});
  EXPECT_NE(canonical_class_key(uniform), canonical_class_key(klee_minty(3)));
  // Orbit-counting oracle on d = 2: the 12 AUSOs of the square fall into 2
  // classes (uniform and Klee-Minty).
  std::set<std::string> keys;
  for (const Orientation& o : all_ausos(2)) keys.insert(canonical_class_key(o));
  EXPECT_EQ(all_ausos(2).size(), 12u);
  EXPECT_EQ(keys.size(), 2u);
}
