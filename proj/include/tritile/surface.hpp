#pragma once

#include <vector>

#include "tritile/cones.hpp"
#include "tritile/tiles.hpp"

namespace tritile {

/// Rectangle of flat-tile positions in plane coordinates, bounds inclusive.
struct Window {
  coord_t u_min = 0;
  coord_t u_max = 0;
  coord_t v_min = 0;
  coord_t v_max = 0;

  bool contains(PlanePoint p) const {
    return u_min <= p.u && p.u <= u_max && v_min <= p.v && p.v <= v_max;
  }
  bool on_border(PlanePoint p) const {
    return p.u == u_min || p.u == u_max || p.v == v_min || p.v == v_max;
  }
  Window padded(coord_t pad) const { return {u_min - pad, u_max + pad, v_min - pad, v_max + pad}; }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Throws FormatError unless u_min <= u_max and v_min <= v_max.
Window make_window(coord_t u_min, coord_t u_max, coord_t v_min, coord_t v_max);

/// Smallest window containing the projections of `points`.
Window bounding_window(std::span<const QPoint> points);

/// All flat tiles with canonical base inside the window, in canonical order.
std::vector<FlatTile> flat_tiles(const Window& window);

enum class TileClass { in, out, bd };

struct Classification {
  std::vector<SlantTile> in_tiles;
  std::vector<SlantTile> out_tiles;
  std::vector<SlantTile> bd_tiles;
};

bool on_surface(const ConjUpSet& w, const SlantTile& s);

/// The unique tile over `t` lying on the surface of `w`.
SlantTile section_at(const ConjUpSet& w, const FlatTile& t);
Gradient vector_field_at(const ConjUpSet& w, const FlatTile& t);

/// Exact position of one triangle relative to a standard region:
/// in  - the whole triangle lies in the region;
/// out - the triangle does not meet the region's interior;
/// bd  - neither.
TileClass classify_tile(const SlantTile& s, const StdUpSet& region);

/// Lift every flat tile of the window to the surface of `w1` and classify
/// it against `w2`. Lists come out in canonical flat-tile order.
Classification classify(const ConjUpSet& w1, const StdUpSet& w2, const Window& window);
bool is_consistent(const ConjUpSet& w1, const StdUpSet& w2, const Window& window);

struct WindowPolicy {
  coord_t initial_pad = 8;
  coord_t max_pad = 64;
};

/// In(w, region) over a window grown from `seed` until no In tile sits on
/// the border. Throws BudgetExceeded once the padding would pass max_pad.
std::vector<SlantTile> in_tiles_unbounded(const ConjUpSet& w, const StdUpSet& region,
                                          const Window& seed, const WindowPolicy& policy = {});

/// |w| = flat tiles of In(w, Roof g(w)).
std::vector<FlatTile> norm(const ConjUpSet& w, const WindowPolicy& policy = {});

}  // namespace tritile
