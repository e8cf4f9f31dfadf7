#include <algorithm>
#include <numeric>

#include "uso/orientation.hpp"

namespace uso {

namespace {

constexpr int kMaxCanonicalDimension = 8;

std::vector<Vertex> bit_permutation_table(int d, std::span<const int> perm) {
  const std::uint64_t n = vertex_count(d);
  std::vector<Vertex> table(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex image = 0;
    for (int i = 0; i < d; ++i) image |= ((v >> i) & 1U) << perm[i];
    table[v] = image;
  }
  return table;
}

void check_permutation(int d, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(d)) {
    throw InvalidInput("axis permutation has wrong length");
  }
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d; ++i) {
    if (sorted[i] != i) throw InvalidInput("not an axis permutation");
  }
}

}  // namespace

Orientation transform(const Orientation& o, std::span<const int> perm,
                      AxisMask reflect) {
  const int d = o.dimension();
  check_permutation(d, perm);
  const std::vector<Vertex> table = bit_permutation_table(d, perm);
  std::vector<AxisMask> out(o.size());
  for (Vertex v = 0; v < o.size(); ++v) {
    out[table[v] ^ (reflect & (o.size() - 1))] = table[o.outmap(v)];
  }
  return Orientation(d, std::move(out));
}

std::string canonical_class_key(const Orientation& o) {
  const int d = o.dimension();
  if (d > kMaxCanonicalDimension) {
    throw InvalidInput("canonical keys are limited to dimension " +
                       std::to_string(kMaxCanonicalDimension));
  }
  const std::uint64_t n = o.size();
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inverse(perm.size());

  std::string best(n, '\xff');
  std::string candidate(n, '\0');
  do {
    for (int i = 0; i < d; ++i) inverse[perm[i]] = i;
    const std::vector<Vertex> forward = bit_permutation_table(d, perm);
    const std::vector<Vertex> backward = bit_permutation_table(d, inverse);
    for (Vertex reflect = 0; reflect < n; ++reflect) {
      // candidate[w] is the permuted outmap of the preimage of w; stop as
      // soon as the prefix is larger than the best key so far.
      bool smaller = false;
      std::uint64_t w = 0;
      for (; w < n; ++w) {
        const auto byte = static_cast<unsigned char>(
            forward[o.outmap(backward[w ^ reflect])]);
        candidate[w] = static_cast<char>(byte);
        if (smaller) continue;
        const auto current = static_cast<unsigned char>(best[w]);
        if (byte < current) {
          smaller = true;
        } else if (byte > current) {
          break;
        }
      }
      if (smaller) best = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace uso
