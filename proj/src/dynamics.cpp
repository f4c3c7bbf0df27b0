#include "tritile/dynamics.hpp"

#include <algorithm>
#include <set>

#include "tritile/errors.hpp"

namespace tritile {

UDCode UDCode::parse(std::string_view text) {
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == 'U') out.push_back(Sign::U);
    else if (c == 'D') out.push_back(Sign::D);
    else throw FormatError("code must use only U and D, got '" + std::string(1, c) + "'");
  }
  return UDCode(std::move(out));
}

UDCode UDCode::complement() const {
  std::vector<Sign> out;
  out.reserve(symbols_.size());
  for (Sign s : symbols_) out.push_back(negated(s));
  return UDCode(std::move(out));
}

std::string UDCode::text() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Sign s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

StepResult step(const ConjUpSet& w, const SlantTile& s, Port exit) {
  const PortCandidates c = port_candidates(s, exit);
  const bool flip_ok = on_surface(w, c.flip);
  const bool keep_ok = on_surface(w, c.keep);
  if (flip_ok && keep_ok) throw GeometryError("fork after tile " + to_text(s));
  if (!flip_ok && !keep_ok) throw GeometryError("dead end after tile " + to_text(s));
  return flip_ok ? StepResult{c.flip, toggled(exit)} : StepResult{c.keep, exit};
}

Trajectory trace(const ConjUpSet& w, const SlantTile& start, std::size_t max_steps,
                 Port initial_exit) {
  if (!on_surface(w, start)) throw GeometryError("start tile " + to_text(start) + " is not on the surface");
  Trajectory traj;
  if (max_steps == 0) return traj;
  const StepResult initial{start, initial_exit};
  StepResult state = initial;
  traj.tiles.push_back(start);
  for (;;) {
    state = step(w, state.tile, state.exit);
    if (state == initial) {
      traj.closed = true;
      return traj;
    }
    if (traj.tiles.size() >= max_steps) return traj;
    traj.tiles.push_back(state.tile);
  }
}

UDCode encode(const Trajectory& traj, Sign start_sign) {
  if (traj.tiles.empty()) throw GeometryError("cannot encode an empty trajectory");
  std::vector<Sign> out{start_sign};
  for (std::size_t i = 1; i < traj.tiles.size(); ++i) {
    Sign prev = out.back();
    out.push_back(gradient(traj.tiles[i]) == gradient(traj.tiles[i - 1]) ? prev : negated(prev));
  }
  return UDCode(std::move(out));
}

namespace {

StepResult advance(const StepResult& state, bool flip) {
  const PortCandidates c = port_candidates(state.tile, state.exit);
  return flip ? StepResult{c.flip, toggled(state.exit)} : StepResult{c.keep, state.exit};
}

}  // namespace

std::vector<SlantTile> decode(const UDCode& code, const SlantTile& start, Port initial_exit) {
  if (code.empty()) throw FormatError("cannot decode an empty code");
  std::vector<SlantTile> out{start};
  StepResult state{start, initial_exit};
  for (std::size_t i = 1; i < code.size(); ++i) {
    state = advance(state, code[i] != code[i - 1]);
    out.push_back(state.tile);
  }
  return out;
}

bool decodes_closed(const UDCode& code, const SlantTile& start, Port initial_exit) {
  if (code.empty()) return false;
  StepResult state{start, initial_exit};
  std::set<SlantTile> seen{start};
  for (std::size_t i = 1; i < code.size(); ++i) {
    state = advance(state, code[i] != code[i - 1]);
    if (!seen.insert(state.tile).second) return false;
  }
  state = advance(state, code[0] != code[code.size() - 1]);
  return state == StepResult{start, initial_exit};
}

namespace {

ConjUpSet cone_of_bases(const std::vector<SlantTile>& tiles, std::size_t first, std::size_t last) {
  std::vector<QPoint> bases;
  for (std::size_t i = first; i <= last; ++i) bases.push_back(tiles[i].base);
  return ConjUpSet::cone(bases);
}

bool covers(const ConjUpSet& cone, const std::vector<SlantTile>& tiles, std::size_t first,
            std::size_t last) {
  for (std::size_t i = first; i <= last; ++i)
    if (!on_surface(cone, tiles[i])) return false;
  return true;
}

bool segment_fits(const std::vector<SlantTile>& tiles, std::size_t first, std::size_t last) {
  return covers(cone_of_bases(tiles, first, last), tiles, first, last);
}

}  // namespace

std::vector<Chart> chart_cover(const std::vector<SlantTile>& tiles) {
  std::vector<Chart> charts;
  if (tiles.empty()) return charts;
  std::size_t first = 0;
  for (;;) {
    if (!segment_fits(tiles, first, first))
      throw GeometryError("uncoverable tile " + to_text(tiles[first]));
    std::size_t last = first;
    while (last + 1 < tiles.size() && segment_fits(tiles, first, last + 1)) ++last;
    charts.push_back(Chart{cone_of_bases(tiles, first, last), first, last});
    if (last + 1 == tiles.size()) return charts;
    // Next chart: earliest start that still reaches the first uncovered tile.
    std::size_t next = first + 1;
    while (!segment_fits(tiles, next, last + 1)) ++next;
    first = next;
  }
}

namespace {

Window tiles_window(const std::vector<SlantTile>& tiles) {
  std::vector<QPoint> pts;
  for (const auto& s : tiles)
    for (const auto& v : vertices(s)) pts.push_back(v);
  return bounding_window(pts);
}

std::vector<QPoint> bases_of(const std::vector<SlantTile>& tiles) {
  std::vector<QPoint> out;
  for (const auto& s : tiles) out.push_back(s.base);
  return out;
}

}  // namespace

TrajectoryRoofs closed_trajectory_roofs(const ConjUpSet& w, const Trajectory& traj,
                                        const WindowPolicy& policy) {
  if (!traj.closed) throw GeometryError("trajectory is not closed");
  const Window seed = tiles_window(traj.tiles);
  const std::set<SlantTile> members(traj.tiles.begin(), traj.tiles.end());

  TrajectoryRoofs roofs{StdUpSet::roof(bases_of(traj.tiles)), StdUpSet{}};
  const auto outer_in = in_tiles_unbounded(w, roofs.outer, seed, policy);
  std::vector<SlantTile> rest;
  for (const auto& s : outer_in)
    if (!members.count(s)) rest.push_back(s);
  if (!rest.empty()) roofs.inner = StdUpSet::roof(bases_of(rest));

  std::set<SlantTile> difference(outer_in.begin(), outer_in.end());
  if (!roofs.inner.empty())
    for (const auto& s : in_tiles_unbounded(w, roofs.inner, seed, policy)) difference.erase(s);
  if (difference != members)
    throw GeometryError("lemma violation: In(w, outer) \\ In(w, inner) differs from the trajectory");
  return roofs;
}

std::vector<Trajectory> closed_trajectories_of_roof(const ConjUpSet& w, const WindowPolicy& policy) {
  const auto flats = norm(w, policy);
  std::set<SlantTile> remaining;
  for (const auto& t : flats) remaining.insert(section_at(w, t));
  const std::set<SlantTile> all = remaining;

  std::vector<Trajectory> out;
  // Start each trace at the canonically smallest remaining flat tile.
  for (const auto& t : flats) {
    SlantTile s = section_at(w, t);
    if (!remaining.count(s)) continue;
    Trajectory traj = trace(w, s, all.size() + 1);
    if (!traj.closed) throw GeometryError("open trajectory in norm starting at " + to_text(s));
    for (const auto& x : traj.tiles) {
      if (!remaining.erase(x))
        throw GeometryError("open trajectory in norm: trace from " + to_text(s) + " leaves the norm");
    }
    out.push_back(std::move(traj));
  }
  return out;
}

}  // namespace tritile
