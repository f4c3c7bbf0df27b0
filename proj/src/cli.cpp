#include "tritile/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tritile/errors.hpp"
#include "tritile/io.hpp"
#include "tritile/render.hpp"

namespace tritile {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": invalid JSON: " + e.what());
  }
}

PeaksDocument read_peaks(const std::string& path) { return parse_peaks(read_json_file(path)); }

Sign parse_sign(const std::string& s) {
  if (s == "U") return Sign::U;
  if (s == "D") return Sign::D;
  throw FormatError("--start-sign must be U or D");
}

struct Output {
  std::string path;
  std::string format = "json";

  void emit(std::ostream& out, const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw FormatError("cannot write " + path);
  }

  void emit_json(std::ostream& out, const json& j) const { emit(out, j.dump(2) + "\n"); }

  void emit_scene(std::ostream& out, const json& j, const Scene& scene) const {
    if (format == "json") emit_json(out, j);
    else if (format == "svg") emit(out, render_svg(scene));
    else if (format == "ascii") emit(out, render_ascii(scene));
    else throw FormatError("--format must be json, svg or ascii");
  }
};

void add_output_flags(CLI::App* cmd, Output& o, bool with_format) {
  cmd->add_option("-o", o.path, "Write output to FILE");
  if (with_format)
    cmd->add_option("--format", o.format, "json, svg or ascii")->check(CLI::IsMember({"json", "svg", "ascii"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Staircase surfaces, tile trajectories and U/D shape codes"};
  app.require_subcommand(1);

  std::string peaks_path, std_peaks_path, start_text, window_text, sign_text = "D", code_text, doc_path;
  std::vector<std::string> add_paths;
  std::size_t max_steps = 10000;
  bool all = false, reverse = false;
  Output o;

  auto* surface = app.add_subcommand("surface", "Section and vector field of a cone over a window");
  surface->add_option("--peaks", peaks_path, "Peaks file")->required();
  surface->add_option("--window", window_text, "uMIN:uMAX,vMIN:vMAX");
  add_output_flags(surface, o, false);

  auto* trajectories = app.add_subcommand("trajectories", "Trace trajectories on a staircase surface");
  trajectories->add_option("--peaks", peaks_path, "Peaks file")->required();
  auto* all_flag = trajectories->add_flag("--all", all, "Partition the norm into closed trajectories");
  auto* start_opt = trajectories->add_option("--start", start_text, "Start tile q1,q2,q3:d1d2");
  all_flag->excludes(start_opt);
  trajectories->add_option("--max-steps", max_steps, "Step budget");
  trajectories->add_option("--start-sign", sign_text, "U or D");
  trajectories->add_flag("--reverse", reverse, "Leave the start tile through its DOWN edge");
  add_output_flags(trajectories, o, true);

  auto* encode_cmd = app.add_subcommand("encode", "U/D code of the trajectory through a tile");
  encode_cmd->add_option("--peaks", peaks_path, "Peaks file")->required();
  encode_cmd->add_option("--start", start_text, "Start tile")->required();
  encode_cmd->add_option("--max-steps", max_steps, "Step budget");
  encode_cmd->add_option("--start-sign", sign_text, "U or D");
  encode_cmd->add_flag("--reverse", reverse, "Leave the start tile through its DOWN edge");
  add_output_flags(encode_cmd, o, false);

  auto* decode_cmd = app.add_subcommand("decode", "Tiles and charts described by a U/D code");
  decode_cmd->add_option("code", code_text, "U/D sequence")->required();
  decode_cmd->add_option("--start", start_text, "Start tile")->required();
  decode_cmd->add_flag("--reverse", reverse, "Leave the start tile through its DOWN edge");
  add_output_flags(decode_cmd, o, true);

  auto* roof = app.add_subcommand("roof", "Roof algebra");
  roof->require_subcommand(1);
  auto* roof_add = roof->add_subcommand("add", "Sum of conjugate roofs");
  roof_add->add_option("files", add_paths, "Peaks files")->required();
  add_output_flags(roof_add, o, false);

  auto* norm_cmd = app.add_subcommand("norm", "Norm of a conjugate roof and its closed trajectories");
  norm_cmd->add_option("--peaks", peaks_path, "Peaks file")->required();
  norm_cmd->add_option("--start-sign", sign_text, "U or D");
  add_output_flags(norm_cmd, o, true);

  auto* classify_cmd = app.add_subcommand("classify", "In/Out/Bd decomposition against a standard cone");
  classify_cmd->add_option("--peaks", peaks_path, "Conjugate peaks file")->required();
  classify_cmd->add_option("--std-peaks", std_peaks_path, "Standard peaks file")->required();
  classify_cmd->add_option("--window", window_text, "uMIN:uMAX,vMIN:vMAX");
  add_output_flags(classify_cmd, o, false);

  auto* render = app.add_subcommand("render", "Draw a document as SVG or ASCII");
  render->add_option("document", doc_path, "JSON document printed by another subcommand")->required();
  std::string render_format = "svg";
  render->add_option("--format", render_format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("-o", o.path, "Write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_msg, e_msg;
    int code = app.exit(e, o_msg, e_msg);
    out << o_msg.str();
    err << e_msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    const Sign sign = parse_sign(sign_text);
    const Port initial = reverse ? Port::down : Port::up;

    if (surface->parsed()) {
      const auto doc = read_peaks(peaks_path);
      const ConjUpSet w = doc.conjugate();
      const Window window =
          window_text.empty() ? bounding_window(w.generators()).padded(8) : parse_window(window_text);
      json tiles = json::array();
      for (const auto& t : flat_tiles(window)) {
        SlantTile s = section_at(w, t);
        tiles.push_back(json{{"flat", flat_text(t)}, {"tile", to_text(s)}, {"gradient", gradient(s).text()}});
      }
      o.emit_json(out, json{{"generators", to_json(w.generators())}, {"window", to_text(window)}, {"tiles", tiles}});
      return kExitOk;
    }

    if (trajectories->parsed()) {
      const ConjUpSet w = read_peaks(peaks_path).conjugate();
      if (all) {
        json docs = json::array();
        Scene scene;
        for (const auto& t : closed_trajectories_of_roof(w)) {
          auto d = make_document(t, sign, true);
          docs.push_back(to_json(d));
          scene.trajectories.push_back(std::move(d));
        }
        o.emit_scene(out, docs, scene);
        return kExitOk;
      }
      if (start_text.empty()) throw FormatError("trajectories needs --all or --start TILE");
      const Trajectory t = trace(w, parse_tile(start_text), max_steps, initial);
      auto d = make_document(t, sign, true);
      o.emit_scene(out, to_json(d), Scene{{}, {d}});
      if (!t.closed) {
        err << "trajectory truncated after " << t.tiles.size() << " tiles\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (encode_cmd->parsed()) {
      const ConjUpSet w = read_peaks(peaks_path).conjugate();
      const Trajectory t = trace(w, parse_tile(start_text), max_steps, initial);
      o.emit(out, encode(t, sign).text() + "\n");
      if (!t.closed) {
        err << "trajectory truncated after " << t.tiles.size() << " tiles\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (decode_cmd->parsed()) {
      const UDCode code = UDCode::parse(code_text);
      const SlantTile start = parse_tile(start_text);
      TrajectoryDocument d;
      d.tiles = decode(code, start, initial);
      d.code = code;
      d.closed = decodes_closed(code, start, initial);
      for (const auto& c : chart_cover(d.tiles))
        d.charts.push_back(ChartRecord{c.cone.generators(), c.first, c.last});
      o.emit_scene(out, to_json(d), Scene{{}, {d}});
      return kExitOk;
    }

    if (roof_add->parsed()) {
      ConjUpSet sum;
      for (const auto& path : add_paths) sum = tritile::roof_add(sum, read_peaks(path).conjugate());
      o.emit_json(out, to_json(PeaksDocument{sum.generators(), PeaksKind::roof}));
      return kExitOk;
    }

    if (norm_cmd->parsed()) {
      const ConjUpSet w = read_peaks(peaks_path).conjugate();
      const auto flats = norm(w);
      json names = json::array();
      for (const auto& f : flats) names.push_back(flat_text(f));
      json doc{{"generators", to_json(w.generators())}, {"norm", names}};
      Scene scene{flats, {}};
      int status = kExitOk;
      try {
        json docs = json::array();
        for (const auto& t : closed_trajectories_of_roof(w)) {
          auto d = make_document(t, sign, true);
          docs.push_back(to_json(d));
          scene.trajectories.push_back(std::move(d));
        }
        doc["trajectories"] = docs;
      } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
        doc["trajectories"] = nullptr;
        status = kExitGeometry;
      }
      o.emit_scene(out, doc, scene);
      return status;
    }

    if (classify_cmd->parsed()) {
      const auto conj_doc = read_peaks(peaks_path);
      const auto std_doc = read_peaks(std_peaks_path);
      const ConjUpSet w1 = conj_doc.conjugate();
      const StdUpSet w2 = std_doc.standard();
      Window window;
      if (window_text.empty()) {
        std::vector<QPoint> pts = conj_doc.peaks;
        pts.insert(pts.end(), std_doc.peaks.begin(), std_doc.peaks.end());
        window = bounding_window(pts).padded(8);
      } else {
        window = parse_window(window_text);
      }
      const Classification c = classify(w1, w2, window);
      auto names = [](const std::vector<SlantTile>& ts) {
        json arr = json::array();
        for (const auto& s : ts) arr.push_back(to_text(s));
        return arr;
      };
      o.emit_json(out, json{{"window", to_text(window)},
                            {"counts", {{"in", c.in_tiles.size()}, {"out", c.out_tiles.size()}, {"bd", c.bd_tiles.size()}}},
                            {"consistent", c.bd_tiles.empty()},
                            {"in", names(c.in_tiles)},
                            {"bd", names(c.bd_tiles)},
                            {"out", names(c.out_tiles)}});
      return kExitOk;
    }

    if (render->parsed()) {
      const Scene scene = scene_from_json(read_json_file(doc_path));
      o.emit(out, render_format == "ascii" ? render_ascii(scene) : render_svg(scene));
      return kExitOk;
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGeometry;
  } catch (const EmptyRegion& e) {
    err << "error: " << e.what() << '\n';
    return kExitGeometry;
  }
  return kExitUsage;
}

}  // namespace tritile
