#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tritile/cones.hpp"
#include "tritile/dynamics.hpp"
#include "tritile/surface.hpp"

namespace tritile {

enum class PeaksKind { cone, roof };

/// {"peaks": [[1,1,0],[0,1,1],[1,0,1]], "kind": "roof"}
struct PeaksDocument {
  std::vector<QPoint> peaks;
  PeaksKind kind = PeaksKind::roof;

  ConjUpSet conjugate() const;
  StdUpSet standard() const;

  friend bool operator==(const PeaksDocument&, const PeaksDocument&) = default;
};

struct ChartRecord {
  std::vector<QPoint> generators;
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const ChartRecord&, const ChartRecord&) = default;
};

struct TrajectoryDocument {
  bool closed = false;
  std::vector<SlantTile> tiles;
  UDCode code;
  std::vector<ChartRecord> charts;

  friend bool operator==(const TrajectoryDocument&, const TrajectoryDocument&) = default;
};

PeaksDocument parse_peaks(const nlohmann::json& j);
PeaksDocument parse_peaks_text(std::string_view text);
nlohmann::json to_json(const PeaksDocument& doc);

TrajectoryDocument make_document(const Trajectory& traj, Sign start_sign, bool with_charts);
TrajectoryDocument parse_trajectory(const nlohmann::json& j);
nlohmann::json to_json(const TrajectoryDocument& doc);

nlohmann::json to_json(const QPoint& p);
nlohmann::json to_json(const std::vector<QPoint>& ps);

/// "uMIN:uMAX,vMIN:vMAX"
Window parse_window(std::string_view text);
std::string to_text(const Window& w);

/// Flat tile form: the canonical representative's tile text.
std::string flat_text(const FlatTile& t);
FlatTile parse_flat(std::string_view text);

}  // namespace tritile
