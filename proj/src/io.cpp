#include "tritile/io.hpp"

#include <charconv>
#include <sstream>

#include "tritile/errors.hpp"

namespace tritile {

using nlohmann::json;

ConjUpSet PeaksDocument::conjugate() const {
  return kind == PeaksKind::roof ? ConjUpSet::roof(peaks) : ConjUpSet::cone(peaks);
}

StdUpSet PeaksDocument::standard() const {
  return kind == PeaksKind::roof ? StdUpSet::roof(peaks) : StdUpSet::cone(peaks);
}

namespace {

QPoint parse_point(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("a peak must be an array of three integers");
  Triple t{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw FormatError("peak coordinates must be integers");
    t[i] = j[i].get<coord_t>();
  }
  return QPoint{t};
}

std::vector<QPoint> parse_points(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<QPoint> out;
  for (const auto& e : j) out.push_back(parse_point(e));
  return out;
}

}  // namespace

json to_json(const QPoint& p) { return json::array({p[0], p[1], p[2]}); }

json to_json(const std::vector<QPoint>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

PeaksDocument parse_peaks(const json& j) {
  if (!j.is_object() || !j.contains("peaks")) throw FormatError("peaks document needs a \"peaks\" array");
  PeaksDocument doc;
  doc.peaks = parse_points(j.at("peaks"), "peaks");
  if (doc.peaks.empty()) throw FormatError("peaks must not be empty");
  if (j.contains("kind")) {
    const auto& k = j.at("kind");
    if (k == "roof") doc.kind = PeaksKind::roof;
    else if (k == "cone") doc.kind = PeaksKind::cone;
    else throw FormatError("kind must be \"cone\" or \"roof\"");
  }
  return doc;
}

PeaksDocument parse_peaks_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_peaks(j);
}

json to_json(const PeaksDocument& doc) {
  return json{{"peaks", to_json(doc.peaks)}, {"kind", doc.kind == PeaksKind::roof ? "roof" : "cone"}};
}

TrajectoryDocument make_document(const Trajectory& traj, Sign start_sign, bool with_charts) {
  TrajectoryDocument doc;
  doc.closed = traj.closed;
  doc.tiles = traj.tiles;
  doc.code = encode(traj, start_sign);
  if (with_charts)
    for (const auto& c : chart_cover(traj.tiles))
      doc.charts.push_back(ChartRecord{c.cone.generators(), c.first, c.last});
  return doc;
}

json to_json(const TrajectoryDocument& doc) {
  json tiles = json::array();
  for (const auto& s : doc.tiles) tiles.push_back(to_text(s));
  json charts = json::array();
  for (const auto& c : doc.charts)
    charts.push_back(json{{"generators", to_json(c.generators)}, {"span", json::array({c.first, c.last})}});
  return json{{"closed", doc.closed},
              {"length", doc.tiles.size()},
              {"tiles", tiles},
              {"code", doc.code.text()},
              {"charts", charts}};
}

TrajectoryDocument parse_trajectory(const json& j) {
  try {
    TrajectoryDocument doc;
    doc.closed = j.at("closed").get<bool>();
    for (const auto& t : j.at("tiles")) doc.tiles.push_back(parse_tile(t.get<std::string>()));
    doc.code = UDCode::parse(j.at("code").get<std::string>());
    if (j.contains("charts"))
      for (const auto& c : j.at("charts")) {
        const auto& span = c.at("span");
        doc.charts.push_back(ChartRecord{parse_points(c.at("generators"), "generators"),
                                         span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()});
      }
    const auto length = j.at("length").get<std::size_t>();
    if (length != doc.tiles.size() || length != doc.code.size())
      throw FormatError("trajectory length must equal tile count and code length");
    return doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad trajectory document: ") + e.what());
  }
}

namespace {

coord_t parse_int(std::string_view s, std::string_view whole) {
  coord_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw FormatError("bad window '" + std::string(whole) + "', expected uMIN:uMAX,vMIN:vMAX");
  return v;
}

std::pair<coord_t, coord_t> parse_range(std::string_view s, std::string_view whole) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw FormatError("bad window '" + std::string(whole) + "', expected uMIN:uMAX,vMIN:vMAX");
  return {parse_int(s.substr(0, colon), whole), parse_int(s.substr(colon + 1), whole)};
}

}  // namespace

Window parse_window(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw FormatError("bad window '" + std::string(text) + "', expected uMIN:uMAX,vMIN:vMAX");
  auto [u0, u1] = parse_range(text.substr(0, comma), text);
  auto [v0, v1] = parse_range(text.substr(comma + 1), text);
  return make_window(u0, u1, v0, v1);
}

std::string to_text(const Window& w) {
  std::ostringstream os;
  os << w.u_min << ':' << w.u_max << ',' << w.v_min << ':' << w.v_max;
  return os.str();
}

std::string flat_text(const FlatTile& t) { return to_text(t.representative()); }

FlatTile parse_flat(std::string_view text) {
  const SlantTile s = parse_tile(text);
  FlatTile f = flatten(s);
  if (f.representative() != s) throw FormatError("'" + std::string(text) + "' is not a canonical flat tile");
  return f;
}

}  // namespace tritile
