#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tritile/cli.hpp"
#include "tritile/errors.hpp"
#include "tritile/io.hpp"
#include "tritile/render.hpp"

using namespace tritile;
using namespace tritile::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tritile");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "tritile_shell_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kHexFile = write_temp("hex.json", R"({"peaks": [[1,1,0],[0,1,1],[1,0,1]], "kind": "roof"})");
const std::string kOctFile = write_temp("oct.json", R"({"peaks": [[0,0,0]]})");

}  // namespace

TEST_CASE("peaks documents") {
  const PeaksDocument d = parse_peaks_text(R"({"peaks": [[1,1,0],[0,1,1]], "kind": "cone"})");
  CHECK(d.kind == PeaksKind::cone);
  CHECK(d.peaks.size() == 2);
  CHECK(parse_peaks(to_json(d)) == d);
  CHECK(parse_peaks_text(R"({"peaks": [[0,0,0]]})").kind == PeaksKind::roof);
  for (const char* bad : {R"({"peaks": []})", R"({"peaks": [[1,2]]})", R"({"peaks": [[1.5,0,0]]})",
                          R"({"kind": "roof"})", R"({"peaks": [[0,0,0]], "kind": "hill"})", "[1,2,3]", "{"})
    CHECK_THROWS_AS(parse_peaks_text(bad), FormatError);
}

TEST_CASE("trajectory documents round trip") {
  const Trajectory hex = trace(ConjUpSet::cone(kHexPeaks), kHexTiles[0], 100);
  const TrajectoryDocument doc = make_document(hex, Sign::D, true);
  CHECK(parse_trajectory(to_json(doc)) == doc);
  const json j = to_json(doc);
  CHECK(j["length"] == 6);
  CHECK(j["code"] == "DUDUDU");
  CHECK(j["tiles"][0] == "1,1,0:31");
  json bad = j;
  bad["length"] = 5;
  CHECK_THROWS_AS(parse_trajectory(bad), FormatError);
  bad = j;
  bad["code"] = "DUDUD";
  CHECK_THROWS_AS(parse_trajectory(bad), FormatError);
}

TEST_CASE("windows and flat tile text") {
  CHECK(parse_window("-2:3,0:4") == Window{-2, 3, 0, 4});
  CHECK(to_text(Window{-2, 3, 0, 4}) == "-2:3,0:4");
  CHECK_THROWS_AS(parse_window("3:2,0:0"), FormatError);
  CHECK_THROWS_AS(parse_window("0:1"), FormatError);
  CHECK(parse_flat("1,2,0:13") == FlatTile::at(1, 2, Axis::x3));
  CHECK_THROWS_AS(parse_flat("1,2,1:13"), FormatError);
}

TEST_CASE("cli trajectories") {
  const Run all = cli({"trajectories", "--peaks", kHexFile, "--all"});
  REQUIRE(all.code == kExitOk);
  const json docs = json::parse(all.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["closed"] == true);
  CHECK(docs[0]["length"] == 6);
  CHECK(docs[0]["code"] == "DUDUDU");

  const Run strip = cli({"trajectories", "--peaks", kOctFile, "--start", "1,0,0:12", "--max-steps", "20"});
  CHECK(strip.code == kExitBudget);
  const json sdoc = json::parse(strip.out);
  CHECK(sdoc["closed"] == false);
  CHECK(sdoc["length"] == 20);

  const Run one = cli({"trajectories", "--peaks", kHexFile, "--start", "1,1,0:31", "--start-sign", "U"});
  CHECK(one.code == kExitOk);
  CHECK(json::parse(one.out)["code"] == "UDUDUD");

  CHECK(cli({"trajectories", "--peaks", kHexFile, "--start", "0,0,0:12"}).code == kExitGeometry);
  CHECK(cli({"trajectories", "--peaks", kHexFile, "--start", "garbage"}).code == kExitUsage);
  CHECK(cli({"trajectories", "--peaks", kHexFile, "--all", "--start", "1,1,0:31"}).code == kExitUsage);
  CHECK(cli({"trajectories", "--peaks", "/nonexistent.json", "--all"}).code == kExitUsage);

  const Run svg = cli({"trajectories", "--peaks", kHexFile, "--all", "--format", "svg"});
  CHECK(svg.code == kExitOk);
  CHECK(svg.out.find("<svg") == 0);
}

TEST_CASE("cli fusion through roof add") {
  const std::string w2 = write_temp("w2.json", R"({"peaks": [[1,2,-1],[0,2,0],[1,1,0]]})");
  const std::string w3 = write_temp("w3.json", R"({"peaks": [[0,2,0],[-1,2,1],[0,1,1]]})");
  const Run sum = cli({"roof", "add", kHexFile, w2, w3});
  REQUIRE(sum.code == kExitOk);
  const std::string sum_file = write_temp("sum.json", sum.out);
  const Run t = cli({"trajectories", "--peaks", sum_file, "--all"});
  REQUIRE(t.code == kExitOk);
  const json docs = json::parse(t.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["length"] == 18);
}

TEST_CASE("cli encode and decode") {
  const Run e = cli({"encode", "--peaks", kHexFile, "--start", "1,1,0:31"});
  CHECK(e.code == kExitOk);
  CHECK(e.out == "DUDUDU\n");

  const Run d = cli({"decode", "DUDUDD", "--start", "1,1,0:31"});
  REQUIRE(d.code == kExitOk);
  const json doc = json::parse(d.out);
  CHECK(doc["length"] == 6);
  CHECK(doc["tiles"][5] == "1,1,1:21");
  REQUIRE(doc["charts"].size() == 2);
  CHECK(doc["charts"][0]["span"] == json::array({0, 4}));
  CHECK(doc["charts"][1]["generators"] == json::parse("[[0,1,1],[1,0,1]]"));

  const json hex = json::parse(cli({"decode", "DUDUDU", "--start", "1,1,0:31"}).out);
  CHECK(hex["closed"] == true);
  CHECK(hex["charts"].size() == 1);

  const json single = json::parse(cli({"decode", "D", "--start", "4,-1,2:23"}).out);
  CHECK(single["length"] == 1);
  CHECK(single["charts"].size() == 1);

  CHECK(cli({"decode", "DUX", "--start", "1,1,0:31"}).code == kExitUsage);
}

TEST_CASE("cli roof add, norm and classify") {
  const std::string x = write_temp("x.json", R"({"peaks": [[1,0,0]]})");
  const std::string y = write_temp("y.json", R"({"peaks": [[0,1,0]]})");
  const std::string z = write_temp("z.json", R"({"peaks": [[0,0,1]]})");
  const Run sum = cli({"roof", "add", x, y, z});
  REQUIRE(sum.code == kExitOk);
  CHECK(json::parse(sum.out)["peaks"] == json::parse("[[0,0,0]]"));

  const Run n = cli({"norm", "--peaks", kHexFile});
  REQUIRE(n.code == kExitOk);
  const json nd = json::parse(n.out);
  CHECK(nd["norm"].size() == 6);
  CHECK(nd["trajectories"].size() == 1);
  const Run empty = cli({"norm", "--peaks", kOctFile});
  CHECK(empty.code == kExitOk);
  CHECK(json::parse(empty.out)["norm"].empty());

  const Run c = cli({"classify", "--peaks", kHexFile, "--std-peaks", kOctFile, "--window", "-4:4,-4:4"});
  REQUIRE(c.code == kExitOk);
  const json cd = json::parse(c.out);
  CHECK(cd["counts"]["in"] == 6);
  CHECK(cd["counts"]["bd"] == 0);
  CHECK(cd["counts"]["out"] == 9 * 9 * 2 - 6);
  CHECK(cd["consistent"] == true);
}

TEST_CASE("cli surface") {
  const Run s = cli({"surface", "--peaks", kHexFile, "--window", "0:1,0:1"});
  REQUIRE(s.code == kExitOk);
  const json j = json::parse(s.out);
  CHECK(j["tiles"].size() == 8);
  for (const auto& t : j["tiles"]) CHECK(on_surface(ConjUpSet::cone(kHexPeaks), parse_tile(t["tile"].get<std::string>())));
  CHECK(cli({"surface", "--peaks", kHexFile, "--window", "1:0,0:1"}).code == kExitUsage);
}

TEST_CASE("cli output is deterministic") {
  const Run a = cli({"norm", "--peaks", kHexFile});
  const Run b = cli({"norm", "--peaks", kHexFile});
  CHECK(a.out == b.out);
  const Run c = cli({"trajectories", "--peaks", kHexFile, "--all", "--format", "svg"});
  const Run d = cli({"trajectories", "--peaks", kHexFile, "--all", "--format", "svg"});
  CHECK(c.out == d.out);
}

TEST_CASE("rendering") {
  const std::string traj = write_temp("traj.json", cli({"trajectories", "--peaks", kHexFile, "--all"}).out);
  const Run svg = cli({"render", traj});
  REQUIRE(svg.code == kExitOk);
  // One group of six triangles for the trajectory, drawn over the region layer.
  const std::size_t group = svg.out.find("class=\"trajectory\"");
  REQUIRE(group != std::string::npos);
  const std::string strip = svg.out.substr(group, svg.out.find("</g>", group) - group);
  std::size_t polygons = 0;
  for (std::size_t p = strip.find("<polygon"); p != std::string::npos; p = strip.find("<polygon", p + 1)) ++polygons;
  CHECK(polygons == 6);

  const Run ascii = cli({"render", traj, "--format", "ascii"});
  REQUIRE(ascii.code == kExitOk);
  CHECK(std::count(ascii.out.begin(), ascii.out.end(), 'U') == 3);
  CHECK(std::count(ascii.out.begin(), ascii.out.end(), 'D') == 3);

  const std::string norm_doc = write_temp("norm.json", cli({"norm", "--peaks", kOctFile}).out);
  const Run empty = cli({"render", norm_doc});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.find("<polygon") == std::string::npos);
  CHECK(render_ascii(Scene{}).empty());

  const auto out_path = (std::filesystem::temp_directory_path() / "tritile_shell_tests" / "hex.svg").string();
  CHECK(cli({"render", traj, "-o", out_path}).code == kExitOk);
  CHECK(std::filesystem::file_size(out_path) == svg.out.size());
  CHECK(cli({"render", traj, "-o", "/nonexistent-dir/x.svg"}).code == kExitUsage);
  CHECK(cli({"render", traj, "--format", "png"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"trajectories"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}
