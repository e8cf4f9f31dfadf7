#include "uso/generators.hpp"

#include <atomic>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace uso {

Orientation klee_minty(int d) {
  check_dimension(d);
  const std::uint64_t n = vertex_count(d);
  std::vector<AxisMask> out(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t rank = gray_rank(d, v);
    for (int i = 0; i < d; ++i) {
      if (gray_rank(d, v ^ (Vertex{1} << i)) > rank) out[v] |= AxisMask{1} << i;
    }
  }
  return Orientation(d, std::move(out));
}

namespace {

constexpr int kMaxCensusDimension = 4;

void check_census_dimension(int d) {
  check_dimension(d);
  if (d > kMaxCensusDimension) {
    throw InvalidInput("AUSO census is limited to dimension " +
                       std::to_string(kMaxCensusDimension));
  }
}

struct Tally {
  std::uint64_t raw = 0;
  std::uint64_t raw_uso = 0;
  std::set<std::string> keys;
  std::set<std::string> uso_keys;

  void add(const Orientation& o, bool acyclic) {
    std::string key = canonical_class_key(o);
    ++raw_uso;
    if (acyclic) {
      ++raw;
      keys.insert(key);
    }
    uso_keys.insert(std::move(key));
  }

  void merge(Tally&& other) {
    raw += other.raw;
    raw_uso += other.raw_uso;
    keys.merge(other.keys);
    uso_keys.merge(other.uso_keys);
  }

  AusoCensus census() const {
    return AusoCensus{raw, keys.size(), raw_uso, uso_keys.size()};
  }
};

// Assigns outmaps to vertices 0, 1, ... in order.  Bits towards smaller
// neighbours are forced by those neighbours; the rest are free.  A vertex is
// kept only if it differs from every earlier vertex u on some axis along
// which u and v differ, the pairwise form of "unique sink in every face".
class OutmapBacktracker {
 public:
  OutmapBacktracker(int d, Tally& tally)
      : d_(d), n_(static_cast<Vertex>(vertex_count(d))), out_(n_, 0), tally_(tally) {}

  void run_from(AxisMask first) {
    out_[0] = first;
    place(1);
  }

 private:
  void place(Vertex v) {
    if (v == n_) {
      Orientation o(d_, out_);
      tally_.add(o, is_acyclic(o));
      return;
    }
    AxisMask forced = 0;
    AxisMask free = 0;
    for (int i = 0; i < d_; ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (w < v) {
        if (!((out_[w] >> i) & 1U)) forced |= AxisMask{1} << i;
      } else {
        free |= AxisMask{1} << i;
      }
    }
    AxisMask sub = 0;
    do {
      const AxisMask candidate = forced | sub;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = ((out_[u] ^ candidate) & (u ^ v)) != 0;
      }
      if (ok) {
        out_[v] = candidate;
        place(v + 1);
      }
      sub = (sub - free) & free;
    } while (sub != 0);
  }

  int d_;
  Vertex n_;
  std::vector<AxisMask> out_;
  Tally& tally_;
};

}  // namespace

AusoCensus enumerate_ausos_backtracking(int d, int threads) {
  check_census_dimension(d);
  if (threads < 1) throw InvalidInput("thread count must be >= 1");
  const AxisMask choices = static_cast<AxisMask>(vertex_count(d));
  std::vector<Tally> parts(choices);
  std::atomic<AxisMask> next{0};
  auto work = [&] {
    for (AxisMask first = next++; first < choices; first = next++) {
      OutmapBacktracker(d, parts[first]).run_from(first);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  Tally total;
  for (Tally& part : parts) total.merge(std::move(part));
  return total.census();
}

AusoCensus enumerate_ausos(int d, int threads) {
  check_census_dimension(d);
  if (d == kMaxCensusDimension) return enumerate_ausos_backtracking(d, threads);

  const std::uint64_t n = vertex_count(d);
  // Edge e runs between tails[e] (bit clear) and tails[e] ^ (1 << axes[e]).
  std::vector<Vertex> tails;
  std::vector<int> axes;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) {
      if (!((v >> i) & 1U)) {
        tails.push_back(v);
        axes.push_back(i);
      }
    }
  }
  const std::uint64_t total = std::uint64_t{1} << tails.size();
  Tally tally;
  std::vector<AxisMask> out(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t e = 0; e < tails.size(); ++e) {
      const AxisMask bit = AxisMask{1} << axes[e];
      // Set bit: the edge points up from its lower endpoint.
      if ((mask >> e) & 1U) {
        out[tails[e]] |= bit;
      } else {
        out[tails[e] ^ bit] |= bit;
      }
    }
    Orientation o(d, out);
    if (is_uso_faces(o)) tally.add(o, is_acyclic(o));
  }
  return tally.census();
}

}  // namespace uso
