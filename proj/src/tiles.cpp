#include "tritile/tiles.hpp"

#include <charconv>
#include <sstream>

#include "tritile/errors.hpp"

namespace tritile {

std::string Gradient::text() const {
  return std::string{static_cast<char>('0' + number_of(lo_)),
                     static_cast<char>('0' + number_of(hi_))};
}

SlantTile sigma(const SlantTile& s) {
  return SlantTile{s.middle(), DirPair{s.dir.second, s.dir.third()}};
}

SlantTile sigma_inv(const SlantTile& s) {
  // sigma(b[d3 d1]) = (b + e_d3)[d1 d2]
  Axis d3 = s.dir.third();
  return SlantTile{s.base - unit(d3), DirPair{d3, s.dir.first}};
}

Gradient gradient(const SlantTile& s) { return Gradient(s.dir.first, s.dir.second); }

FlatTile FlatTile::at(coord_t u, coord_t v, Axis chirality) {
  if (chirality != Axis::x2 && chirality != Axis::x3)
    throw FormatError("flat tile chirality must be axis 2 or 3");
  return FlatTile(SlantTile{QPoint{u, v, 0}, DirPair{Axis::x1, chirality}});
}

FlatTile flatten(const SlantTile& s) {
  SlantTile r = s;
  while (r.dir.first != Axis::x1) r = sigma(r);
  r.base -= diagonal(r.base[2]);
  return FlatTile(r);
}

TangentElement tangent(const SlantTile& s) { return TangentElement{flatten(s), gradient(s)}; }

PortCandidates port_candidates(const SlantTile& s, Port p) {
  const Axis d1 = s.dir.first;
  const Axis d2 = s.dir.second;
  const Axis d3 = s.dir.third();
  if (p == Port::up) {
    return PortCandidates{SlantTile{s.base + unit(d1) - unit(d3), DirPair{d3, d2}},
                          SlantTile{s.base + unit(d1), DirPair{d2, d1}}};
  }
  return PortCandidates{SlantTile{s.base, DirPair{d1, d3}},
                        SlantTile{s.base - unit(d2), DirPair{d2, d1}}};
}

std::array<QPoint, 3> vertices(const SlantTile& s) { return {s.base, s.middle(), s.top()}; }

std::string to_text(const SlantTile& s) {
  std::ostringstream os;
  os << to_text(s.base) << ':' << number_of(s.dir.first) << number_of(s.dir.second);
  return os.str();
}

namespace {

coord_t parse_coord(std::string_view text, std::string_view whole) {
  coord_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw FormatError("bad tile coordinate in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

SlantTile parse_tile(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw FormatError("tile needs ':' in '" + std::string(text) + "'");
  std::string_view coords = text.substr(0, colon);
  std::string_view dirs = text.substr(colon + 1);

  Triple q{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    auto comma = coords.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos))
      throw FormatError("tile needs three coordinates in '" + std::string(text) + "'");
    auto piece = coords.substr(start, i < 2 ? comma - start : std::string_view::npos);
    q[i] = parse_coord(piece, text);
    start = comma + 1;
  }

  if (dirs.size() != 2 || dirs[0] < '1' || dirs[0] > '3' || dirs[1] < '1' || dirs[1] > '3' ||
      dirs[0] == dirs[1])
    throw FormatError("tile directions must be two distinct digits 1-3 in '" + std::string(text) + "'");
  return SlantTile{QPoint{q}, DirPair{axis_from_number(dirs[0] - '0'), axis_from_number(dirs[1] - '0')}};
}

}  // namespace tritile
