#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tritile/io.hpp"

namespace tritile {

/// A set of flat tiles plus zero or more trajectories drawn over it.
struct Scene {
  std::vector<FlatTile> region;
  std::vector<TrajectoryDocument> trajectories;
};

/// Accepts a trajectory document, an array of them, or a norm/surface
/// document as printed by the CLI.
Scene scene_from_json(const nlohmann::json& j);

std::string render_svg(const Scene& scene);
std::string render_ascii(const Scene& scene);

}  // namespace tritile
