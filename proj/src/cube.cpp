#include "uso/cube.hpp"

#include <bit>
#include <cstdlib>

namespace uso {

void check_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw InvalidInput("dimension must lie in [1, " +
                       std::to_string(kMaxDimension) + "], got " +
                       std::to_string(d));
  }
}

bool is_vertex(int d, std::uint64_t v) { return v < vertex_count(d); }

SignedDirection::SignedDirection(int t) : t_(t) {
  if (t == 0 || std::abs(t) > kMaxDimension) {
    throw InvalidInput("signed direction out of range: " + std::to_string(t));
  }
}

SignedDirection SignedDirection::from_index(int index) {
  if (index < 0 || index >= 2 * kMaxDimension) {
    throw InvalidInput("direction index out of range: " +
                       std::to_string(index));
  }
  const int axis = index / 2 + 1;
  return SignedDirection(index % 2 == 0 ? axis : -axis);
}

std::string to_string(SignedDirection t) {
  return (t.is_positive() ? "+" : "-") + std::to_string(t.axis());
}

SignedDirection parse_signed_direction(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not a signed direction: '" + text + "'");
  }
  if (used != text.size() || value == 0) {
    throw InvalidInput("not a signed direction: '" + text + "'");
  }
  return SignedDirection(value);
}

bool is_feasible(Vertex v, SignedDirection t) {
  const bool bit = (v >> (t.axis() - 1)) & 1U;
  return t.is_positive() ? !bit : bit;
}

Vertex move(int d, Vertex v, SignedDirection t) {
  if (t.axis() > d || !is_vertex(d, v)) {
    throw InvalidInput("move " + to_string(t) + " from " + std::to_string(v) +
                       " is outside the " + std::to_string(d) + "-cube");
  }
  if (!is_feasible(v, t)) {
    throw InfeasibleMove("direction " + to_string(t) +
                         " is infeasible at vertex " + std::to_string(v));
  }
  return v ^ (Vertex{1} << (t.axis() - 1));
}

std::vector<std::pair<SignedDirection, Vertex>> feasible_directions(int d,
                                                                    Vertex v) {
  check_dimension(d);
  if (!is_vertex(d, v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside the cube");
  }
  std::vector<std::pair<SignedDirection, Vertex>> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int axis = 1; axis <= d; ++axis) {
    out.emplace_back(direction_at(v, axis), v ^ (Vertex{1} << (axis - 1)));
  }
  return out;
}

int Face::dimension() const { return std::popcount(free); }

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << dimension());
  // Enumerate subsets of `free` in increasing order.
  AxisMask sub = 0;
  do {
    out.push_back(base | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

void for_each_face(int d, int k, const std::function<void(const Face&)>& fn) {
  check_dimension(d);
  if (k < 0 || k > d) {
    throw InvalidInput("face dimension " + std::to_string(k) +
                       " outside [0, " + std::to_string(d) + "]");
  }
  const AxisMask all = static_cast<AxisMask>(vertex_count(d) - 1);
  for (AxisMask free = 0; free <= all; ++free) {
    if (std::popcount(free) != k) continue;
    const AxisMask fixed = all & ~free;
    AxisMask base = 0;
    do {
      fn(Face{free, base});
      base = (base - fixed) & fixed;
    } while (base != 0);
    if (free == all) break;
  }
}

std::vector<Face> enumerate_faces(int d, int k) {
  std::vector<Face> out;
  for_each_face(d, k, [&](const Face& f) { out.push_back(f); });
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t gray_rank(int d, Vertex v) {
  check_dimension(d);
  if (!is_vertex(d, v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside the cube");
  }
  std::uint64_t j = v;
  for (int shift = 1; shift < 64; shift <<= 1) j ^= j >> shift;
  return j;
}

}  // namespace uso
