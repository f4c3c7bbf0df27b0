#include "tritile/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "tritile/errors.hpp"

namespace tritile {

using nlohmann::json;

Scene scene_from_json(const json& j) {
  Scene scene;
  auto add_trajectories = [&](const json& arr) {
    for (const auto& d : arr) scene.trajectories.push_back(parse_trajectory(d));
  };
  if (j.is_array()) {
    add_trajectories(j);
  } else if (j.is_object() && j.contains("tiles") && j.contains("code")) {
    scene.trajectories.push_back(parse_trajectory(j));
  } else if (j.is_object()) {
    for (const char* key : {"norm", "region"})
      if (j.contains(key))
        for (const auto& t : j.at(key)) scene.region.push_back(parse_flat(t.get<std::string>()));
    if (j.contains("trajectories") && j.at("trajectories").is_array()) add_trajectories(j.at("trajectories"));
  } else {
    throw FormatError("nothing to render");
  }
  return scene;
}

namespace {

struct Xy {
  double x;
  double y;
};

// Equilateral basis: e1 -> (1,0), e2 -> (-1/2, sqrt3/2), e3 -> (-1/2, -sqrt3/2).
Xy plane_xy(const QPoint& q) {
  const double h = std::sqrt(3.0) / 2.0;
  return Xy{static_cast<double>(q[0]) - 0.5 * static_cast<double>(q[1] + q[2]),
            h * static_cast<double>(q[1] - q[2])};
}

const char* const kPalette[] = {"#d95f02", "#1b9e77", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

}  // namespace

std::string render_svg(const Scene& scene) {
  constexpr double scale = 40.0;
  constexpr double margin = 10.0;

  std::set<FlatTile> region(scene.region.begin(), scene.region.end());
  std::vector<std::vector<std::pair<FlatTile, Sign>>> strips;
  for (const auto& t : scene.trajectories) {
    std::vector<std::pair<FlatTile, Sign>> strip;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
      FlatTile f = flatten(t.tiles[i]);
      region.insert(f);
      strip.emplace_back(f, i < t.code.size() ? t.code[i] : Sign::D);
    }
    strips.push_back(std::move(strip));
  }

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  if (region.empty()) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"></svg>\n";
    return os.str();
  }

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& f : region)
    for (const auto& v : vertices(f.representative())) {
      Xy p = plane_xy(v);
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  auto sx = [&](double x) { return margin + (x - x0) * scale; };
  auto sy = [&](double y) { return margin + (y1 - y) * scale; };
  const double width = (x1 - x0) * scale + 2 * margin;
  const double height = (y1 - y0) * scale + 2 * margin;

  auto polygon = [&](const FlatTile& f) {
    std::ostringstream pts;
    pts << std::fixed << std::setprecision(2);
    bool first = true;
    for (const auto& v : vertices(f.representative())) {
      Xy p = plane_xy(v);
      pts << (first ? "" : " ") << sx(p.x) << ',' << sy(p.y);
      first = false;
    }
    return pts.str();
  };
  auto centroid = [&](const FlatTile& f) {
    Xy c{0, 0};
    for (const auto& v : vertices(f.representative())) {
      Xy p = plane_xy(v);
      c.x += p.x / 3;
      c.y += p.y / 3;
    }
    return Xy{sx(c.x), sy(c.y)};
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g stroke=\"#888\" stroke-width=\"0.5\" fill=\"#eee\">\n";
  for (const auto& f : region) os << "<polygon points=\"" << polygon(f) << "\"/>\n";
  os << "</g>\n";
  for (std::size_t k = 0; k < strips.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<g class=\"trajectory\" fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\"#333\" stroke-width=\"0.8\">\n";
    for (const auto& [f, sign] : strips[k]) os << "<polygon points=\"" << polygon(f) << "\"/>\n";
    os << "</g>\n<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < strips[k].size(); ++i) {
      Xy c = centroid(strips[k][i].first);
      os << (i ? " " : "") << c.x << ',' << c.y;
    }
    if (scene.trajectories[k].closed && !strips[k].empty()) {
      Xy c = centroid(strips[k].front().first);
      os << ' ' << c.x << ',' << c.y;
    }
    os << "\"/>\n<g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" fill=\"#000\">\n";
    for (const auto& [f, sign] : strips[k]) {
      Xy c = centroid(f);
      os << "<text x=\"" << c.x << "\" y=\"" << c.y + 3.5 << "\">" << static_cast<char>(sign) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const Scene& scene) {
  // One cell per flat tile: two cells per plane position, chirality x2 first.
  std::map<FlatTile, char> cells;
  for (const auto& f : scene.region) cells[f] = f.chirality() == Axis::x2 ? '/' : '\\';
  for (const auto& t : scene.trajectories)
    for (std::size_t i = 0; i < t.tiles.size(); ++i)
      cells[flatten(t.tiles[i])] = i < t.code.size() ? static_cast<char>(t.code[i]) : '*';
  if (cells.empty()) return "";

  coord_t u0 = cells.begin()->first.position().u, u1 = u0;
  coord_t v0 = cells.begin()->first.position().v, v1 = v0;
  for (const auto& [f, c] : cells) {
    u0 = std::min(u0, f.position().u);
    u1 = std::max(u1, f.position().u);
    v0 = std::min(v0, f.position().v);
    v1 = std::max(v1, f.position().v);
  }
  std::ostringstream os;
  for (coord_t v = v1; v >= v0; --v) {
    std::string row;
    for (coord_t u = u0; u <= u1; ++u)
      for (Axis chir : {Axis::x2, Axis::x3}) {
        auto it = cells.find(FlatTile::at(u, v, chir));
        row.push_back(it == cells.end() ? '.' : it->second);
      }
    os << row << '\n';
  }
  return os.str();
}

}  // namespace tritile
