#pragma once

// Shared generators and independent oracles for the test binaries. Nothing
// here calls the clipping or roof-closure code it is used to check.

#include <boost/rational.hpp>
#include <random>
#include <set>
#include <vector>

#include "tritile/cones.hpp"
#include "tritile/dynamics.hpp"
#include "tritile/surface.hpp"
#include "tritile/tiles.hpp"

namespace tritile::testing {

inline const std::vector<QPoint> kHexPeaks{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};

// Surface tiles of the hexagon cone in trajectory order.
inline const std::vector<SlantTile> kHexTiles{
    {{1, 1, 0}, {Axis::x3, Axis::x1}}, {{1, 0, 1}, {Axis::x2, Axis::x1}},
    {{1, 0, 1}, {Axis::x2, Axis::x3}}, {{0, 1, 1}, {Axis::x1, Axis::x3}},
    {{0, 1, 1}, {Axis::x1, Axis::x2}}, {{1, 1, 0}, {Axis::x3, Axis::x2}}};

inline std::vector<QPoint> random_points(std::mt19937& rng, int lo, int hi, int min_count, int max_count) {
  std::uniform_int_distribution<int> coord(lo, hi);
  std::uniform_int_distribution<int> count(min_count, max_count);
  std::vector<QPoint> out(static_cast<std::size_t>(count(rng)));
  for (auto& p : out) p = QPoint{coord(rng), coord(rng), coord(rng)};
  return out;
}

// Brute force reading of the conjugate roof: some m >= 0 puts all three
// axis translates into Cone*A.
inline bool roof_member_by_search(std::span<const QPoint> a, const QPoint& q, int max_m) {
  auto in_cone = [&](const QPoint& p) {
    for (const auto& g : a)
      if (g[0] <= p[0] && g[1] <= p[1] && g[2] <= p[2]) return true;
    return false;
  };
  for (int m = 0; m <= max_m; ++m)
    if (in_cone(q + QPoint{m, 0, 0}) && in_cone(q + QPoint{0, m, 0}) && in_cone(q + QPoint{0, 0, m}))
      return true;
  return false;
}

// Same for the standard roof; translates are taken along the l-axes, i.e.
// by m * embed(e_i) in conjugate coordinates.
inline bool std_roof_member_by_search(std::span<const QPoint> a, const QPoint& q, int max_m) {
  auto in_cone = [&](const QPoint& p) {
    const LHalf lp = inverse_embed(p);
    for (const auto& g : a) {
      const LHalf lg = inverse_embed(g);
      if (lg[0] <= lp[0] && lg[1] <= lp[1] && lg[2] <= lp[2]) return true;
    }
    return false;
  };
  for (int m = 0; m <= max_m; ++m)
    if (in_cone(q + QPoint{0, m, m}) && in_cone(q + QPoint{m, 0, m}) && in_cone(q + QPoint{m, m, 0}))
      return true;
  return false;
}

using Rat = boost::rational<coord_t>;
using RPoint3 = std::array<Rat, 3>;

// Membership of a rational conjugate point in a standard region, from the
// doubled l-coordinates directly. strict = open interior.
inline bool std_member_rational(const StdUpSet& w, const RPoint3& q, bool strict) {
  const Rat s = q[0] + q[1] + q[2];
  const RPoint3 t{s - Rat(2) * q[0], s - Rat(2) * q[1], s - Rat(2) * q[2]};
  for (const auto& g : w.doubled_generators()) {
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) ok = ok && (strict ? t[i] > Rat(g[i]) : t[i] >= Rat(g[i]));
    if (ok) return true;
  }
  return false;
}

struct SampleSummary {
  bool all_inside = true;     // every sample in the closed region
  bool any_interior = false;  // some sample in the open interior
  bool any_outside = false;   // some sample outside the closed region
};

// All barycentric points of the triangle with the given denominator.
inline SampleSummary sample_tile(const SlantTile& s, const StdUpSet& w, int denominator = 16) {
  SampleSummary out;
  const auto v = vertices(s);
  for (int i = 0; i <= denominator; ++i)
    for (int j = 0; i + j <= denominator; ++j) {
      const int k = denominator - i - j;
      RPoint3 p;
      for (std::size_t c = 0; c < 3; ++c)
        p[c] = Rat(i * v[0][c] + j * v[1][c] + k * v[2][c], denominator);
      const bool closed = std_member_rational(w, p, false);
      out.all_inside = out.all_inside && closed;
      out.any_outside = out.any_outside || !closed;
      out.any_interior = out.any_interior || std_member_rational(w, p, true);
    }
  return out;
}

// Every distinct closed trajectory of a cone among the surface tiles over a window.
inline std::vector<Trajectory> closed_trajectories_in_window(const ConjUpSet& w, const Window& window,
                                                             std::size_t max_steps) {
  std::set<SlantTile> seen;
  std::vector<Trajectory> out;
  for (const auto& t : flat_tiles(window)) {
    const SlantTile s = section_at(w, t);
    if (seen.count(s)) continue;
    Trajectory traj = trace(w, s, max_steps);
    seen.insert(traj.tiles.begin(), traj.tiles.end());
    if (traj.closed) out.push_back(std::move(traj));
  }
  return out;
}

inline std::set<FlatTile> flat_set(const std::vector<SlantTile>& tiles) {
  std::set<FlatTile> out;
  for (const auto& s : tiles) out.insert(flatten(s));
  return out;
}

}  // namespace tritile::testing
