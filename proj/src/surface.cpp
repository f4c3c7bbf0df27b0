#include "tritile/surface.hpp"

#include <algorithm>
#include <boost/rational.hpp>

#include "tritile/errors.hpp"

namespace tritile {

Window make_window(coord_t u_min, coord_t u_max, coord_t v_min, coord_t v_max) {
  if (u_min > u_max || v_min > v_max) throw FormatError("window bounds must satisfy min <= max");
  return Window{u_min, u_max, v_min, v_max};
}

Window bounding_window(std::span<const QPoint> points) {
  if (points.empty()) return Window{};
  PlanePoint first = project(points.front());
  Window w{first.u, first.u, first.v, first.v};
  for (const auto& p : points) {
    PlanePoint pp = project(p);
    w.u_min = std::min(w.u_min, pp.u);
    w.u_max = std::max(w.u_max, pp.u);
    w.v_min = std::min(w.v_min, pp.v);
    w.v_max = std::max(w.v_max, pp.v);
  }
  return w;
}

std::vector<FlatTile> flat_tiles(const Window& window) {
  std::vector<FlatTile> out;
  if (window.u_min > window.u_max || window.v_min > window.v_max) return out;
  out.reserve(static_cast<std::size_t>((window.u_max - window.u_min + 1) *
                                       (window.v_max - window.v_min + 1) * 2));
  for (coord_t u = window.u_min; u <= window.u_max; ++u)
    for (coord_t v = window.v_min; v <= window.v_max; ++v) {
      out.push_back(FlatTile::at(u, v, Axis::x2));
      out.push_back(FlatTile::at(u, v, Axis::x3));
    }
  return out;
}

// Height is monotone in the componentwise order and the base and top are the
// extreme points of the triangle, so both being zero pins the whole tile.
bool on_surface(const ConjUpSet& w, const SlantTile& s) {
  return w.height(s.base) == 0 && w.height(s.top()) == 0;
}

SlantTile section_at(const ConjUpSet& w, const FlatTile& t) {
  if (w.empty()) throw EmptyRegion();
  SlantTile phase = t.representative();
  std::size_t found = 0;
  SlantTile result;
  for (int i = 0; i < 3; ++i, phase = sigma(phase)) {
    SlantTile lifted{phase.base + diagonal(-w.height(phase.base)), phase.dir};
    if (w.height(lifted.top()) == 0) {
      result = lifted;
      ++found;
    }
  }
  if (found == 0) throw GeometryError("no section over flat tile " + to_text(t.representative()));
  if (found > 1) throw GeometryError("ambiguous section over flat tile " + to_text(t.representative()));
  return result;
}

Gradient vector_field_at(const ConjUpSet& w, const FlatTile& t) { return gradient(section_at(w, t)); }

namespace {

using Rat = boost::rational<coord_t>;

struct RPoint {
  std::array<Rat, 3> q;
};

using Polygon = std::vector<RPoint>;

// Doubled l-coordinate i of a (rational) conjugate point.
Rat doubled_l(const RPoint& p, std::size_t i) { return p.q[0] + p.q[1] + p.q[2] - Rat(2) * p.q[i]; }

// The half-space constraint sign * (t_i(q) - bound) >= 0.
struct HalfSpace {
  std::size_t axis;
  coord_t bound;
  int sign;

  Rat eval(const RPoint& p) const { return Rat(sign) * (doubled_l(p, axis) - Rat(bound)); }
};

Polygon clip(const Polygon& poly, const HalfSpace& h) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RPoint& p = poly[i];
    const RPoint& r = poly[(i + 1) % n];
    Rat fp = h.eval(p);
    Rat fr = h.eval(r);
    if (fp >= Rat(0)) out.push_back(p);
    if ((fp > Rat(0) && fr < Rat(0)) || (fp < Rat(0) && fr > Rat(0))) {
      Rat s = fp / (fp - fr);
      RPoint x;
      for (std::size_t k = 0; k < 3; ++k) x.q[k] = p.q[k] + s * (r.q[k] - p.q[k]);
      out.push_back(x);
    }
  }
  return out;
}

// Every triangle lies in a plane q_k = const, so area is measured on the
// two remaining axes.
bool has_area(const Polygon& poly, std::size_t axis_a, std::size_t axis_b) {
  if (poly.size() < 3) return false;
  Rat twice{0};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RPoint& p = poly[i];
    const RPoint& r = poly[(i + 1) % poly.size()];
    twice += p.q[axis_a] * r.q[axis_b] - r.q[axis_a] * p.q[axis_b];
  }
  return twice != Rat(0);
}

}  // namespace

TileClass classify_tile(const SlantTile& s, const StdUpSet& region) {
  const auto& gens = region.doubled_generators();
  if (gens.empty()) return TileClass::out;

  const auto verts = vertices(s);
  std::array<Triple, 3> tv;
  for (std::size_t k = 0; k < 3; ++k) tv[k] = inverse_embed(verts[k]).t;
  Triple tmax = tv[0];
  for (std::size_t k = 1; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) tmax[i] = std::max(tmax[i], tv[k][i]);

  // Octants whose open interior the triangle can reach.
  std::vector<Triple> reaching;
  for (const auto& g : gens) {
    if (componentwise_leq(g, tv[0]) && componentwise_leq(g, tv[1]) && componentwise_leq(g, tv[2]))
      return TileClass::in;
    if (g[0] < tmax[0] && g[1] < tmax[1] && g[2] < tmax[2]) reaching.push_back(g);
  }
  if (reaching.empty()) return TileClass::out;

  const std::size_t fixed = index_of(s.dir.third());
  const std::size_t axis_a = fixed == 0 ? 1 : 0;
  const std::size_t axis_b = fixed == 2 ? 1 : 2;

  Polygon tri;
  for (const auto& v : verts) tri.push_back(RPoint{{Rat(v[0]), Rat(v[1]), Rat(v[2])}});

  bool meets_interior = false;
  for (const auto& g : reaching) {
    Polygon p = tri;
    for (std::size_t i = 0; i < 3 && !p.empty(); ++i) p = clip(p, HalfSpace{i, g[i], +1});
    if (has_area(p, axis_a, axis_b)) {
      meets_interior = true;
      break;
    }
  }
  if (!meets_interior) return TileClass::out;

  // Subtract each octant; whatever keeps positive area lies outside the region.
  std::vector<Polygon> pieces{tri};
  for (const auto& g : reaching) {
    std::vector<Polygon> next;
    for (const auto& piece : pieces) {
      Polygon rest = piece;
      for (std::size_t i = 0; i < 3; ++i) {
        Polygon below = clip(rest, HalfSpace{i, g[i], -1});
        if (has_area(below, axis_a, axis_b)) next.push_back(std::move(below));
        rest = clip(rest, HalfSpace{i, g[i], +1});
        if (!has_area(rest, axis_a, axis_b)) break;
      }
    }
    pieces = std::move(next);
    if (pieces.empty()) break;
  }
  return pieces.empty() ? TileClass::in : TileClass::bd;
}

Classification classify(const ConjUpSet& w1, const StdUpSet& w2, const Window& window) {
  Classification c;
  for (const auto& t : flat_tiles(window)) {
    SlantTile s = section_at(w1, t);
    switch (classify_tile(s, w2)) {
      case TileClass::in: c.in_tiles.push_back(s); break;
      case TileClass::out: c.out_tiles.push_back(s); break;
      case TileClass::bd: c.bd_tiles.push_back(s); break;
    }
  }
  return c;
}

bool is_consistent(const ConjUpSet& w1, const StdUpSet& w2, const Window& window) {
  for (const auto& t : flat_tiles(window))
    if (classify_tile(section_at(w1, t), w2) == TileClass::bd) return false;
  return true;
}

std::vector<SlantTile> in_tiles_unbounded(const ConjUpSet& w, const StdUpSet& region,
                                          const Window& seed, const WindowPolicy& policy) {
  if (w.empty()) throw EmptyRegion();
  coord_t pad = std::min(policy.initial_pad, policy.max_pad);
  for (;;) {
    const Window window = seed.padded(pad);
    std::vector<SlantTile> in;
    bool touches_border = false;
    for (const auto& t : flat_tiles(window)) {
      SlantTile s = section_at(w, t);
      if (classify_tile(s, region) != TileClass::in) continue;
      touches_border = touches_border || window.on_border(t.position());
      in.push_back(s);
    }
    if (!touches_border) return in;
    if (pad >= policy.max_pad)
      throw BudgetExceeded("window overflow: In region still touches the border at padding " +
                           std::to_string(pad));
    pad = std::min(std::max<coord_t>(pad * 2, 1), policy.max_pad);
  }
}

std::vector<FlatTile> norm(const ConjUpSet& w, const WindowPolicy& policy) {
  if (w.empty()) throw EmptyRegion();
  const StdUpSet region = StdUpSet::roof(w.generators());
  std::vector<FlatTile> out;
  for (const auto& s : in_tiles_unbounded(w, region, bounding_window(w.generators()), policy))
    out.push_back(flatten(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tritile
