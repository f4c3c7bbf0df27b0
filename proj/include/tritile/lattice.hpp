#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace tritile {

using coord_t = std::int64_t;
using Triple = std::array<coord_t, 3>;

// Axes are numbered 1..3, matching the indeterminates x1, x2, x3.
enum class Axis : std::uint8_t { x1 = 1, x2 = 2, x3 = 3 };

constexpr std::size_t index_of(Axis a) { return static_cast<std::size_t>(a) - 1; }
constexpr int number_of(Axis a) { return static_cast<int>(a); }
constexpr Axis axis_from_number(int n) { return static_cast<Axis>(n); }

/// The axis that is neither `a` nor `b` (requires a != b).
constexpr Axis remaining_axis(Axis a, Axis b) {
  return static_cast<Axis>(6 - number_of(a) - number_of(b));
}

/// Componentwise a <= b.
constexpr bool componentwise_leq(const Triple& a, const Triple& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

/// Integer point of the conjugate lattice. The exponent vector of the
/// monomial x1^q1 x2^q2 x3^q3, and the frame every tile lives in.
struct QPoint {
  Triple q{};

  constexpr QPoint() = default;
  constexpr QPoint(coord_t q1, coord_t q2, coord_t q3) : q{q1, q2, q3} {}
  constexpr explicit QPoint(const Triple& t) : q(t) {}

  constexpr coord_t operator[](std::size_t i) const { return q[i]; }
  constexpr coord_t& operator[](std::size_t i) { return q[i]; }
  constexpr coord_t operator[](Axis a) const { return q[index_of(a)]; }

  constexpr QPoint& operator+=(const QPoint& o) {
    for (std::size_t i = 0; i < 3; ++i) q[i] += o.q[i];
    return *this;
  }
  constexpr QPoint& operator-=(const QPoint& o) {
    for (std::size_t i = 0; i < 3; ++i) q[i] -= o.q[i];
    return *this;
  }
  friend constexpr QPoint operator+(QPoint a, const QPoint& b) { return a += b; }
  friend constexpr QPoint operator-(QPoint a, const QPoint& b) { return a -= b; }

  // Lexicographic; used only for canonical ordering. The partial order is leq().
  friend constexpr auto operator<=>(const QPoint&, const QPoint&) = default;
};

constexpr QPoint unit(Axis a) {
  QPoint p;
  p[index_of(a)] = 1;
  return p;
}

constexpr QPoint diagonal(coord_t k) { return QPoint{k, k, k}; }

/// Componentwise order on the conjugate lattice.
constexpr bool leq(const QPoint& a, const QPoint& b) { return componentwise_leq(a.q, b.q); }

/// A point of the standard lattice with half-integer coordinates, stored
/// doubled (t = 2l) so that every value is an exact integer.
struct LHalf {
  Triple t{};

  constexpr LHalf() = default;
  constexpr LHalf(coord_t t1, coord_t t2, coord_t t3) : t{t1, t2, t3} {}

  constexpr coord_t operator[](std::size_t i) const { return t[i]; }
  friend constexpr auto operator<=>(const LHalf&, const LHalf&) = default;
};

/// Projection along (1,1,1) onto the flat-tile plane.
struct PlanePoint {
  coord_t u = 0;
  coord_t v = 0;
  friend constexpr auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

/// (l1,l2,l3) -> (l2+l3, l1+l3, l1+l2).
constexpr QPoint embed(const Triple& l) {
  return QPoint{l[1] + l[2], l[0] + l[2], l[0] + l[1]};
}

/// Doubled l-coordinates (q2+q3-q1, q1+q3-q2, q1+q2-q3) of a conjugate point.
constexpr LHalf inverse_embed(const QPoint& p) {
  return LHalf{p[1] + p[2] - p[0], p[0] + p[2] - p[1], p[0] + p[1] - p[2]};
}

constexpr PlanePoint project(const QPoint& p) { return PlanePoint{p[0] - p[2], p[1] - p[2]}; }

/// "x1^m1 x2^m2 x3^m3"
std::string monomial_text(const QPoint& p);

/// "q1,q2,q3"
std::string to_text(const QPoint& p);

}  // namespace tritile
