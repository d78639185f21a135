#include "camflow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "camflow/error.hpp"
#include "camflow/evaluation.hpp"
#include "camflow/flow_codec.hpp"
#include "camflow/image_io.hpp"
#include "camflow/schedule.hpp"
#include "camflow/synthesis.hpp"
#include "camflow/trajectory.hpp"

namespace camflow::cli {

namespace {

using nlohmann::json;
using trajectory::Trajectory;

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), end);
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  auto path_or_null = [](const fs::path& p) -> json {
    return p.empty() ? json(nullptr) : json(p.string());
  };
  j["depth"] = path_or_null(c.depth);
  j["trajectory"] = path_or_null(c.trajectory);
  j["image"] = path_or_null(c.image);
  j["object_flow"] = path_or_null(c.object_flow);
  j["mask"] = path_or_null(c.mask);
  j["input"] = path_or_null(c.input);
  j["estimated"] = path_or_null(c.estimated);
  j["ground_truth"] = path_or_null(c.ground_truth);
  j["frames_dir"] = path_or_null(c.frames_dir);
  j["clips"] = json::array();
  for (const auto& p : c.clips) j["clips"].push_back(p.string());
  j["output"] = path_or_null(c.output);
  j["size"] = {c.width, c.height};
  j["frames"] = c.frames;
  j["profile"] = c.profile;
  j["kind"] = c.kind;
  j["magnitude"] = c.magnitude;
  j["focal"] = c.focal ? json(*c.focal) : json(nullptr);
  j["radius"] = c.radius;
  j["angle"] = c.angle;
  j["look_at_depth"] = c.look_at_depth;
  j["subject_depth"] = c.subject_depth;
  j["dolly"] = c.dolly;
  j["threshold"] = c.threshold;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["row"] = c.row;
  j["max_magnitude"] = c.max_magnitude ? json(*c.max_magnitude) : json(nullptr);
  j["depth_at_displaced"] = c.depth_at_displaced;
  j["keep_going"] = c.keep_going;
  j["pose_convention"] = "world-to-camera";
  return j;
}

void write_config_echo(const RunConfig& c, const fs::path& where) {
  io::write_text(where, config_json(c).dump(2) + "\n");
}

fs::path echo_path_for_file(const fs::path& output) {
  fs::path p = output;
  p += ".config.json";
  return p;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

Trajectory load_trajectory(const fs::path& path, int width, int height) {
  const std::string text = io::read_text(path);
  if (path.extension() == ".json") return trajectory::from_json(text);
  return trajectory::read_re10k(text, width, height).trajectory;
}

void save_trajectory(const fs::path& path, const Trajectory& traj) {
  if (path.extension() == ".json") {
    io::write_text(path, trajectory::to_json(traj));
    return;
  }
  std::vector<std::int64_t> stamps(traj.size());
  for (std::size_t i = 0; i < stamps.size(); ++i) stamps[i] = static_cast<std::int64_t>(i);
  io::write_text(path, trajectory::write_re10k({"", std::move(stamps), traj}));
}

// Runs per-frame work, reporting failures with the offending path. Without
// --keep-going the first failure aborts the command.
class FrameRunner {
 public:
  FrameRunner(bool keep_going, std::ostream& err) : keep_going_(keep_going), err_(err) {}

  bool attempt(const fs::path& artifact, const std::function<void()>& work) {
    try {
      work();
      return true;
    } catch (const Error& e) {
      err_ << artifact.string() << ": " << e.what() << "\n";
      failed_ = true;
      if (!keep_going_) throw Aborted{};
      return false;
    }
  }

  bool failed() const noexcept { return failed_; }

  struct Aborted {};

 private:
  bool keep_going_;
  std::ostream& err_;
  bool failed_ = false;
};

Grid<std::uint8_t> to_png_levels(const Grid<std::uint8_t>& binary) {
  Grid<std::uint8_t> out(binary.width(), binary.height());
  for (std::size_t i = 0; i < binary.size(); ++i) out[i] = binary[i] ? 255 : 0;
  return out;
}

Trajectory load_normalized_trajectory(const RunConfig& c, const synthesis::DepthMap& depth) {
  Trajectory traj = load_trajectory(c.trajectory, depth.width(), depth.height());
  if (traj.width() != depth.width() || traj.height() != depth.height()) {
    throw DimensionMismatchError("trajectory intrinsics are " + std::to_string(traj.width()) +
                                 "x" + std::to_string(traj.height()) + " but depth map is " +
                                 std::to_string(depth.width()) + "x" +
                                 std::to_string(depth.height()));
  }
  return trajectory::normalize_to_first_frame(traj);
}

int cmd_traj_gen(const RunConfig& c) {
  using trajectory::TrajectoryKind;
  const auto k0 = geometry::CameraIntrinsics::centered(c.focal.value_or(c.width / 2.0), c.width,
                                                       c.height);
  const TrajectoryKind kind = trajectory::parse_kind(c.kind);
  Trajectory traj = [&] {
    switch (kind) {
      case TrajectoryKind::Circular:
        return trajectory::generate_circular(c.radius, c.angle, c.frames, k0, c.look_at_depth);
      case TrajectoryKind::DollyZoom:
        return trajectory::generate_dolly_zoom(c.subject_depth, c.dolly, c.frames, k0);
      default:
        return trajectory::generate_basic(kind, c.magnitude, c.frames, k0);
    }
  }();
  save_trajectory(c.output, traj);
  write_config_echo(c, echo_path_for_file(c.output));
  return 0;
}

int cmd_flow_camera(const RunConfig& c, std::ostream& err) {
  const synthesis::DepthMap depth = io::read_depth(c.depth);
  const Trajectory traj = load_normalized_trajectory(c, depth);
  ensure_directory(c.output);
  FrameRunner runner(c.keep_going, err);
  try {
    for (std::size_t t = 0; t < traj.size(); ++t) {
      const fs::path flo = c.output / frame_file("flow", t, traj.size(), ".flo");
      runner.attempt(flo, [&] {
        const auto result =
            synthesis::camera_flow(depth, traj[0].intrinsics, traj[t].pose, traj[t].intrinsics);
        io::write_bytes(flo, codec::write_flo(result.flow));
        io::write_png_gray(c.output / frame_file("valid", t, traj.size(), ".png"),
                           to_png_levels(result.valid));
      });
    }
  } catch (const FrameRunner::Aborted&) {
    return 1;
  }
  write_config_echo(c, c.output / "config.json");
  return runner.failed() ? 1 : 0;
}

int cmd_flow_integrate(const RunConfig& c, std::ostream& err) {
  const synthesis::DepthMap depth = io::read_depth(c.depth);
  const Trajectory traj = load_normalized_trajectory(c, depth);
  const synthesis::ObjectMask mask = io::read_mask_png(c.mask);
  const auto policy = c.depth_at_displaced ? synthesis::DisplacedDepth::AtDisplaced
                                           : synthesis::DisplacedDepth::AtSource;
  if (!synthesis::validate_mask(mask)) {
    err << c.mask.string() << ": mask covers more than half of the image; ignoring it\n";
  }
  ensure_directory(c.output);
  FrameRunner runner(c.keep_going, err);
  try {
    for (std::size_t t = 0; t < traj.size(); ++t) {
      const fs::path object = c.object_flow / frame_file("flow", t, traj.size(), ".flo");
      const fs::path flo = c.output / frame_file("flow", t, traj.size(), ".flo");
      runner.attempt(object, [&] {
        const auto object_flow = codec::read_flo(io::read_bytes(object));
        const auto result = synthesis::integrate_flows(depth, traj[0].intrinsics, traj[t].pose,
                                                       traj[t].intrinsics, object_flow, mask,
                                                       policy);
        io::write_bytes(flo, codec::write_flo(result.flow));
        io::write_png_gray(c.output / frame_file("valid", t, traj.size(), ".png"),
                           to_png_levels(result.valid));
      });
    }
  } catch (const FrameRunner::Aborted&) {
    return 1;
  }
  write_config_echo(c, c.output / "config.json");
  return runner.failed() ? 1 : 0;
}

int cmd_flow_viz(const RunConfig& c) {
  const auto flow = codec::read_flo(io::read_bytes(c.input));
  io::write_png(c.output, codec::visualize(flow, c.max_magnitude));
  write_config_echo(c, echo_path_for_file(c.output));
  return 0;
}

int cmd_flow_pack(const RunConfig& c) {
  const auto flow = codec::read_flo(io::read_bytes(c.input));
  const auto scale = codec::scale_for_profile(c.profile);
  const auto packed = codec::pack_three_channel(codec::normalize_flow(flow, scale));
  io::write_png(c.output, codec::packed_to_image(packed));
  write_config_echo(c, echo_path_for_file(c.output));
  return 0;
}

int cmd_flow_stats(const RunConfig& c, std::ostream& out) {
  const auto flow = codec::read_flo(io::read_bytes(c.input));
  std::optional<synthesis::ObjectMask> region;
  if (!c.mask.empty()) region = io::read_mask_png(c.mask);
  const auto s = codec::flow_stats(flow, region);
  const json j = {{"mean_magnitude", s.mean_magnitude},
                  {"max_magnitude", s.max_magnitude},
                  {"count", s.count}};
  if (c.output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    io::write_text(c.output, j.dump(2) + "\n");
    write_config_echo(c, echo_path_for_file(c.output));
  }
  return 0;
}

int cmd_warp_preview(const RunConfig& c, std::ostream& err) {
  const synthesis::DepthMap depth = io::read_depth(c.depth);
  const Trajectory traj = load_normalized_trajectory(c, depth);
  const Image image = io::read_png(c.image);
  ensure_directory(c.output);
  FrameRunner runner(c.keep_going, err);
  try {
    for (std::size_t t = 0; t < traj.size(); ++t) {
      const fs::path warped = c.output / frame_file("warped", t, traj.size(), ".png");
      runner.attempt(warped, [&] {
        const auto result = synthesis::forward_warp(image, depth, traj[0].intrinsics,
                                                    traj[t].pose, traj[t].intrinsics);
        io::write_png(warped, result.image);
        io::write_png_gray(c.output / frame_file("holes", t, traj.size(), ".png"),
                           to_png_levels(result.holes));
      });
    }
  } catch (const FrameRunner::Aborted&) {
    return 1;
  }
  write_config_echo(c, c.output / "config.json");
  return runner.failed() ? 1 : 0;
}

int cmd_eval_cam(const RunConfig& c, std::ostream& out) {
  const Trajectory est = load_trajectory(c.estimated, c.width, c.height);
  const Trajectory gt = load_trajectory(c.ground_truth, c.width, c.height);
  const auto m = eval::evaluate_normalized(est, gt);
  json per_frame = json::array();
  for (const auto& f : m.per_frame) {
    per_frame.push_back({{"rotErr", f.rot_err}, {"transErr", f.trans_err}, {"camMC", f.cam_mc}});
  }
  const json j = {{"mRotErr", m.m_rot_err},
                  {"mTransErr", m.m_trans_err},
                  {"mCamMC", m.m_cam_mc},
                  {"perFrame", per_frame}};
  if (c.output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    io::write_text(c.output, j.dump(2) + "\n");
    write_config_echo(c, echo_path_for_file(c.output));
  }
  return 0;
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& extension) {
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// One manifest row: background and object flow magnitudes pooled over every
// frame of the clip. The clip's mask.png, when present, marks moving objects.
std::string curate_clip(const fs::path& clip, double threshold) {
  const auto flows = sorted_files(clip, ".flo");
  if (flows.empty()) throw IoError(clip.string() + " holds no .flo files");
  std::optional<synthesis::ObjectMask> objects;
  if (fs::exists(clip / "mask.png")) objects = io::read_mask_png(clip / "mask.png");

  double bg_sum = 0.0, obj_sum = 0.0;
  std::size_t bg_count = 0, obj_count = 0;
  for (const auto& path : flows) {
    const auto flow = codec::read_flo(io::read_bytes(path));
    synthesis::ObjectMask background(flow.width(), flow.height(), 1);
    if (objects) {
      require_same_shape(flow, *objects, "flow vs clip mask");
      for (std::size_t i = 0; i < background.size(); ++i) background[i] = (*objects)[i] ? 0 : 1;
    }
    const auto bg = codec::flow_stats(flow, background);
    bg_sum += bg.mean_magnitude * static_cast<double>(bg.count);
    bg_count += bg.count;
    if (objects && std::count(objects->values().begin(), objects->values().end(), 1) > 0) {
      const auto ob = codec::flow_stats(flow, *objects);
      obj_sum += ob.mean_magnitude * static_cast<double>(ob.count);
      obj_count += ob.count;
    }
  }
  const double bg_mean = bg_sum / static_cast<double>(bg_count);
  const bool is_static = eval::is_static_camera(bg_mean, threshold);
  const std::string category =
      obj_count > 0
          ? std::string(eval::to_string(eval::classify_motion(obj_sum / double(obj_count))))
          : "none";
  return clip.string() + "\t" + shortest(bg_mean) + "\t" + (is_static ? "static" : "moving") +
         "\t" + category + "\n";
}

int cmd_curate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::string manifest = "# path\tbackground_mean\tverdict\tcategory\n";
  FrameRunner runner(c.keep_going, err);
  try {
    for (const auto& clip : c.clips) {
      runner.attempt(clip, [&] { manifest += curate_clip(clip, c.threshold); });
    }
  } catch (const FrameRunner::Aborted&) {
    return 1;
  }
  if (c.output.empty()) {
    out << manifest;
  } else {
    io::write_text(c.output, manifest);
    write_config_echo(c, echo_path_for_file(c.output));
  }
  return runner.failed() ? 1 : 0;
}

int cmd_qts(const RunConfig& c, std::ostream& out) {
  std::string text;
  for (double v : schedule::qts_sample_batch(c.count, c.seed)) {
    text += shortest(v);
    text += '\n';
  }
  if (c.output.empty()) {
    out << text;
  } else {
    io::write_text(c.output, text);
    write_config_echo(c, echo_path_for_file(c.output));
  }
  return 0;
}

int cmd_xtslice(const RunConfig& c) {
  const auto files = sorted_files(c.frames_dir, ".png");
  if (files.empty()) throw IoError(c.frames_dir.string() + " holds no .png frames");
  Image slice;
  for (std::size_t t = 0; t < files.size(); ++t) {
    const Image frame = io::read_png(files[t]);
    if (t == 0) {
      if (c.row < 0 || c.row >= frame.height()) {
        throw ValidationError("row " + std::to_string(c.row) + " is outside the " +
                              std::to_string(frame.height()) + "-row frames");
      }
      slice = Image(frame.width(), static_cast<int>(files.size()), frame.channels());
    } else if (frame.width() != slice.width() || frame.channels() != slice.channels() ||
               c.row >= frame.height()) {
      throw DimensionMismatchError(files[t].string() + " does not match the first frame");
    }
    for (int x = 0; x < frame.width(); ++x) {
      for (int ch = 0; ch < frame.channels(); ++ch) {
        slice(x, static_cast<int>(t), ch) = frame(x, c.row, ch);
      }
    }
  }
  io::write_png(c.output, slice);
  write_config_echo(c, echo_path_for_file(c.output));
  return 0;
}

void parse_size(const std::string& text, RunConfig& c) {
  static const std::regex pattern(R"((\d+)[xX](\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw CLI::ValidationError("--size", "expected WxH, got '" + text + "'");
  }
  c.width = std::stoi(m[1].str());
  c.height = std::stoi(m[2].str());
  if (c.width <= 0 || c.height <= 0) {
    throw CLI::ValidationError("--size", "dimensions must be positive");
  }
}

}  // namespace

std::string frame_file(const std::string& prefix, std::size_t t, std::size_t frame_count,
                       const std::string& extension) {
  const std::size_t digits =
      std::max<std::size_t>(2, std::to_string(frame_count > 0 ? frame_count - 1 : 0).size());
  std::string index = std::to_string(t);
  if (index.size() < digits) index.insert(0, digits - index.size(), '0');
  return prefix + "_" + index + extension;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "traj gen") return cmd_traj_gen(c);
    if (c.command == "flow camera") return cmd_flow_camera(c, err);
    if (c.command == "flow integrate") return cmd_flow_integrate(c, err);
    if (c.command == "flow viz") return cmd_flow_viz(c);
    if (c.command == "flow pack") return cmd_flow_pack(c);
    if (c.command == "flow stats") return cmd_flow_stats(c, out);
    if (c.command == "warp preview") return cmd_warp_preview(c, err);
    if (c.command == "eval cam") return cmd_eval_cam(c, out);
    if (c.command == "curate") return cmd_curate(c, out, err);
    if (c.command == "qts") return cmd_qts(c, out);
    if (c.command == "xtslice") return cmd_xtslice(c);
    err << "unknown command '" << c.command << "'\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string size;

  CLI::App app{"Camera-motion flow synthesis, flow codecs and camera-control evaluation",
               "camflow"};
  app.require_subcommand(1);
  app.add_flag("--keep-going", c.keep_going, "Report per-file failures and continue");

  auto add_size = [&](CLI::App* sub) {
    sub->add_option("--size", size, "Image size WxH (default 576x320)");
  };

  auto* traj = app.add_subcommand("traj", "Camera trajectories")->require_subcommand(1);
  auto* gen = traj->add_subcommand("gen", "Generate a trajectory");
  gen->add_option("--kind", c.kind,
                  "left|right|up|down|zoom-in|zoom-out|stop|circular|dolly-zoom")
      ->capture_default_str();
  gen->add_option("--magnitude", c.magnitude, "Total camera travel (scene units)")
      ->capture_default_str();
  gen->add_option("--frames", c.frames, "Frame count")->capture_default_str();
  gen->add_option("--focal", c.focal, "Focal length in pixels (default width/2)");
  gen->add_option("--radius", c.radius, "Circular: radius")->capture_default_str();
  gen->add_option("--angle", c.angle, "Circular: swept angle in degrees")->capture_default_str();
  gen->add_option("--look-at", c.look_at_depth, "Circular: fixation depth")->capture_default_str();
  gen->add_option("--subject-depth", c.subject_depth, "Dolly zoom: subject depth")
      ->capture_default_str();
  gen->add_option("--dolly", c.dolly, "Dolly zoom: forward travel")->capture_default_str();
  gen->add_option("--out", c.output, "Output file (.json or RealEstate10K text)")->required();
  add_size(gen);

  auto* flow = app.add_subcommand("flow", "Flow synthesis and codecs")->require_subcommand(1);
  auto* camera = flow->add_subcommand("camera", "Camera flow from depth and trajectory");
  auto* integrate = flow->add_subcommand("integrate", "Combine camera and object flow");
  for (auto* sub : {camera, integrate}) {
    sub->add_option("--depth", c.depth, "Depth map (.pfm, or raw float32 + .json sidecar)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--traj", c.trajectory, "Trajectory (.json or RealEstate10K text)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", c.output, "Output directory")->required();
  }
  integrate->add_option("--object-flow", c.object_flow, "Directory of object flow_XX.flo files")
      ->required()
      ->check(CLI::ExistingDirectory);
  integrate->add_option("--mask", c.mask, "Moving-object mask PNG (nonzero = object)")
      ->required()
      ->check(CLI::ExistingFile);
  integrate->add_flag("--depth-at-displaced", c.depth_at_displaced,
                      "Sample depth at the displaced position instead of the source pixel");

  auto* viz = flow->add_subcommand("viz", "Color-wheel visualization");
  viz->add_option("--max", c.max_magnitude, "Saturation magnitude in pixels (default: auto)");
  auto* pack = flow->add_subcommand("pack", "Normalize and pack into a 3-channel PNG");
  pack->add_option("--profile", c.profile, "omsm|fvsm")
      ->check(CLI::IsMember({"omsm", "fvsm"}))
      ->capture_default_str();
  auto* stats = flow->add_subcommand("stats", "Flow magnitude statistics as JSON");
  stats->add_option("--mask", c.mask, "Region PNG (nonzero = selected)")->check(CLI::ExistingFile);
  for (auto* sub : {viz, pack, stats}) {
    sub->add_option("--in", c.input, "Input .flo")->required()->check(CLI::ExistingFile);
  }
  viz->add_option("--out", c.output, "Output PNG")->required();
  pack->add_option("--out", c.output, "Output PNG")->required();
  stats->add_option("--out", c.output, "Output JSON (default stdout)");

  auto* warp = app.add_subcommand("warp", "Warped-frame previews")->require_subcommand(1);
  auto* preview = warp->add_subcommand("preview", "Forward-warp an image along a trajectory");
  preview->add_option("--image", c.image, "Input image PNG")->required()->check(CLI::ExistingFile);
  preview->add_option("--depth", c.depth, "Depth map")->required()->check(CLI::ExistingFile);
  preview->add_option("--traj", c.trajectory, "Trajectory")->required()->check(CLI::ExistingFile);
  preview->add_option("--out", c.output, "Output directory")->required();

  auto* eval = app.add_subcommand("eval", "Camera-control evaluation")->require_subcommand(1);
  auto* cam = eval->add_subcommand("cam", "Rotation/translation/extrinsic errors");
  cam->add_option("--est", c.estimated, "Estimated trajectory")
      ->required()
      ->check(CLI::ExistingFile);
  cam->add_option("--gt", c.ground_truth, "Ground-truth trajectory")
      ->required()
      ->check(CLI::ExistingFile);
  cam->add_option("--out", c.output, "Metrics JSON (default stdout)");
  add_size(cam);

  auto* curate = app.add_subcommand("curate", "Static-camera filter and motion categories");
  curate->add_option("--clip", c.clips, "Clip directory with .flo files and optional mask.png")
      ->required()
      ->check(CLI::ExistingDirectory);
  curate->add_option("--threshold", c.threshold, "Static-camera threshold in pixels")
      ->capture_default_str();
  curate->add_option("--out", c.output, "Manifest file (default stdout)");

  auto* qts = app.add_subcommand("qts", "Quadratic timestep samples");
  qts->add_option("--n", c.count, "Sample count")->capture_default_str();
  qts->add_option("--seed", c.seed, "Generator seed")->capture_default_str();
  qts->add_option("--out", c.output, "Output file (default stdout)");

  auto* xt = app.add_subcommand("xtslice", "Stack one pixel row across frames");
  xt->add_option("--frames", c.frames_dir, "Directory of frame PNGs (sorted by name)")
      ->required()
      ->check(CLI::ExistingDirectory);
  xt->add_option("--row", c.row, "Row index")->required();
  xt->add_option("--out", c.output, "Output PNG")->required();

  std::vector<const char*> argv{"camflow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!size.empty()) parse_size(size, c);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code;
  }

  for (const auto* top : app.get_subcommands()) {
    c.command = top->get_name();
    for (const auto* sub : top->get_subcommands()) c.command += " " + sub->get_name();
  }
  if (c.command == "traj gen" && c.frames < 1) {
    err << "--frames must be at least 1\n";
    return 2;
  }
  return execute(c, out, err);
}

}  // namespace camflow::cli
