#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "tritile/lattice.hpp"

namespace tritile {

/// Ordered pair of distinct edge directions of a slant tile.
struct DirPair {
  Axis first = Axis::x1;
  Axis second = Axis::x2;

  constexpr Axis third() const { return remaining_axis(first, second); }
  friend constexpr auto operator<=>(const DirPair&, const DirPair&) = default;
};

/// The triangle conv[a, a + e_first, a + e_first + e_second].
struct SlantTile {
  QPoint base;
  DirPair dir;

  constexpr QPoint middle() const { return base + unit(dir.first); }
  constexpr QPoint top() const { return middle() + unit(dir.second); }

  friend constexpr auto operator<=>(const SlantTile&, const SlantTile&) = default;
};

/// The unordered pair of edge directions of a tile; one of x1x2, x2x3, x1x3.
class Gradient {
 public:
  constexpr Gradient(Axis a, Axis b) : lo_(a < b ? a : b), hi_(a < b ? b : a) {}

  constexpr Axis low() const { return lo_; }
  constexpr Axis high() const { return hi_; }

  /// "12", "13" or "23".
  std::string text() const;

  friend constexpr auto operator<=>(const Gradient&, const Gradient&) = default;

 private:
  Axis lo_;
  Axis hi_;
};

/// A sigma-orbit of slant tiles, held by its canonical representative:
/// direction (1,2) or (1,3) and base with q3 = 0.
class FlatTile {
 public:
  /// The flat tile whose canonical base projects to (u, v). `chirality` is
  /// the second direction of the representative; x2 or x3.
  static FlatTile at(coord_t u, coord_t v, Axis chirality);

  const SlantTile& representative() const { return rep_; }
  PlanePoint position() const { return {rep_.base[0], rep_.base[1]}; }
  Axis chirality() const { return rep_.dir.second; }

  friend constexpr auto operator<=>(const FlatTile&, const FlatTile&) = default;

 private:
  friend FlatTile flatten(const SlantTile& s);
  explicit constexpr FlatTile(const SlantTile& s) : rep_(s) {}

  SlantTile rep_;
};

/// A sigma^3-orbit: the flat tile together with the gradient.
struct TangentElement {
  FlatTile flat;
  Gradient grad;
  friend constexpr auto operator<=>(const TangentElement&, const TangentElement&) = default;
};

// The two non-diagonal edges. DOWN is (base, base+e_first), UP is
// (base+e_first, top). Trajectories never cross the diagonal.
enum class Port { up, down };

constexpr Port toggled(Port p) { return p == Port::up ? Port::down : Port::up; }

struct PortCandidates {
  SlantTile flip;  // gradient changes
  SlantTile keep;  // gradient is preserved
};

/// sigma(a[d1 d2]) = (a + e_d1)[d2 d3].
SlantTile sigma(const SlantTile& s);
SlantTile sigma_inv(const SlantTile& s);

Gradient gradient(const SlantTile& s);
FlatTile flatten(const SlantTile& s);
TangentElement tangent(const SlantTile& s);

/// The two tiles sharing the edge of `s` at port `p`.
PortCandidates port_candidates(const SlantTile& s, Port p);

std::array<QPoint, 3> vertices(const SlantTile& s);

/// "q1,q2,q3:d1d2", e.g. "1,1,0:31".
std::string to_text(const SlantTile& s);
SlantTile parse_tile(std::string_view text);

}  // namespace tritile
