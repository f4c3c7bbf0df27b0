#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tritile/cones.hpp"
#include "tritile/surface.hpp"
#include "tritile/tiles.hpp"

namespace tritile {

struct Trajectory {
  std::vector<SlantTile> tiles;
  bool closed = false;
};

enum class Sign : char { U = 'U', D = 'D' };

constexpr Sign negated(Sign s) { return s == Sign::U ? Sign::D : Sign::U; }

/// Second derivative of a trajectory: a U/D sequence that flips exactly
/// where the gradient changes.
class UDCode {
 public:
  UDCode() = default;
  explicit UDCode(std::vector<Sign> symbols) : symbols_(std::move(symbols)) {}

  /// Accepts only the letters U and D; throws FormatError otherwise.
  static UDCode parse(std::string_view text);

  const std::vector<Sign>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Sign operator[](std::size_t i) const { return symbols_[i]; }

  UDCode complement() const;
  std::string text() const;

  friend bool operator==(const UDCode&, const UDCode&) = default;

 private:
  std::vector<Sign> symbols_;
};

/// A conjugate cone whose surface carries tiles[first..last] (inclusive).
struct Chart {
  ConjUpSet cone;
  std::size_t first = 0;
  std::size_t last = 0;
};

struct StepResult {
  SlantTile tile;
  Port exit;
  friend bool operator==(const StepResult&, const StepResult&) = default;
};

/// Leave `s` through `exit` and land on the unique neighbour on the surface.
/// Throws GeometryError on a dead end or a fork.
StepResult step(const ConjUpSet& w, const SlantTile& s, Port exit);

/// Follow the flow from `start` until the initial (tile, port) state recurs
/// or `max_steps` tiles have been collected (then closed = false).
Trajectory trace(const ConjUpSet& w, const SlantTile& start, std::size_t max_steps,
                 Port initial_exit = Port::up);

UDCode encode(const Trajectory& traj, Sign start_sign = Sign::D);

/// Rebuild the tile list described by `code`, starting at `start` and
/// leaving through `initial_exit`.
std::vector<SlantTile> decode(const UDCode& code, const SlantTile& start,
                              Port initial_exit = Port::up);

/// True if reading `code` cyclically brings the automaton back to its
/// initial state after the last tile.
bool decodes_closed(const UDCode& code, const SlantTile& start, Port initial_exit = Port::up);

/// Greedy maximal cover of a port-adjacent tile list by conjugate cones.
std::vector<Chart> chart_cover(const std::vector<SlantTile>& tiles);

struct TrajectoryRoofs {
  StdUpSet outer;  // Roof of the trajectory's base points
  StdUpSet inner;  // Roof of the bases of the other In tiles (possibly empty)
};

/// Standard roofs cutting out a closed trajectory of `w` as
/// In(w, outer) \ In(w, inner). Verifies the identity; throws GeometryError
/// ("lemma violation") if it does not hold.
TrajectoryRoofs closed_trajectory_roofs(const ConjUpSet& w, const Trajectory& traj,
                                        const WindowPolicy& policy = {});

/// Partition |w| into closed trajectories. Throws GeometryError if a trace
/// leaves the norm or fails to close.
std::vector<Trajectory> closed_trajectories_of_roof(const ConjUpSet& w,
                                                    const WindowPolicy& policy = {});

}  // namespace tritile
