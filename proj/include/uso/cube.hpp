#ifndef USO_CUBE_HPP
#define USO_CUBE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uso {

// Vertex labels and direction sets are machine words; 2^20 vertices is the
// hard ceiling for every data structure in the library.
inline constexpr int kMaxDimension = 20;

using Vertex = std::uint32_t;
// Bit i-1 stands for unsigned direction i.
using AxisMask = std::uint32_t;
// Bit 2(i-1) stands for +i, bit 2(i-1)+1 for -i.
using DirectionSet = std::uint64_t;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by move() when the signed direction would leave the cube.
class InfeasibleMove : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

void check_dimension(int d);

constexpr std::uint64_t vertex_count(int d) { return std::uint64_t{1} << d; }

bool is_vertex(int d, std::uint64_t v);

/// A signed direction +i / -i with 1 <= i <= d.  Positive directions flip
/// bit i-1 from 0 to 1, negative ones from 1 to 0.
class SignedDirection {
 public:
  constexpr SignedDirection() = default;
  explicit SignedDirection(int t);

  static SignedDirection positive(int axis) { return SignedDirection(axis); }
  static SignedDirection negative(int axis) { return SignedDirection(-axis); }
  // Inverse of index().
  static SignedDirection from_index(int index);

  constexpr int value() const { return t_; }
  constexpr int axis() const { return t_ < 0 ? -t_ : t_; }
  constexpr bool is_positive() const { return t_ > 0; }
  // Dense index in the order +1, -1, +2, -2, ...
  constexpr int index() const { return 2 * (axis() - 1) + (t_ < 0 ? 1 : 0); }
  constexpr DirectionSet bit() const { return DirectionSet{1} << index(); }

  SignedDirection operator-() const { return SignedDirection(-t_); }

  friend constexpr bool operator==(SignedDirection, SignedDirection) = default;
  // Orders by dense index, which is also the default tie-break order.
  friend constexpr std::strong_ordering operator<=>(SignedDirection a,
                                                    SignedDirection b) {
    return a.index() <=> b.index();
  }

 private:
  int t_ = 0;
};

std::string to_string(SignedDirection t);
// Accepts "+3", "-2" and "3".
SignedDirection parse_signed_direction(const std::string& text);

bool is_feasible(Vertex v, SignedDirection t);

/// Neighbour of v along t, i.e. v + sign(t) 2^(|t|-1).  Throws InfeasibleMove
/// when t points out of the cube at v.
Vertex move(int d, Vertex v, SignedDirection t);

// The signed direction leading from v to its neighbour across `axis`.
inline SignedDirection direction_at(Vertex v, int axis) {
  return (v >> (axis - 1)) & 1U ? SignedDirection::negative(axis)
                                : SignedDirection::positive(axis);
}

std::vector<std::pair<SignedDirection, Vertex>> feasible_directions(int d,
                                                                    Vertex v);

struct Face {
  AxisMask free = 0;
  Vertex base = 0;

  int dimension() const;
  bool contains(Vertex v) const { return (v & ~free) == base; }
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Face&, const Face&) = default;
};

void for_each_face(int d, int k, const std::function<void(const Face&)>& fn);
std::vector<Face> enumerate_faces(int d, int k);

std::uint64_t binomial(int n, int k);

constexpr Vertex gray_code(std::uint64_t j) {
  return static_cast<Vertex>(j ^ (j >> 1));
}

/// Position of v in the reflected Gray sequence: the j with
/// j ^ (j >> 1) == v.
std::uint64_t gray_rank(int d, Vertex v);

}  // namespace uso

#endif  // USO_CUBE_HPP
