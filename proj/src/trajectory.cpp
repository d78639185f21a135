#include "camflow/trajectory.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

#include <json.hpp>

#include "camflow/error.hpp"

namespace camflow::trajectory {

using geometry::Matrix3;
using geometry::Point3;

Trajectory::Trajectory(std::vector<Frame> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw ValidationError("trajectory must have at least one frame");
  for (const Frame& f : frames_) {
    if (!f.intrinsics.same_size(frames_.front().intrinsics)) {
      throw ValidationError("all frames of a trajectory must share the image size");
    }
  }
}

namespace {

constexpr std::array<std::pair<TrajectoryKind, std::string_view>, 9> kKindNames{{
    {TrajectoryKind::Left, "left"},
    {TrajectoryKind::Right, "right"},
    {TrajectoryKind::Up, "up"},
    {TrajectoryKind::Down, "down"},
    {TrajectoryKind::ZoomIn, "zoom-in"},
    {TrajectoryKind::ZoomOut, "zoom-out"},
    {TrajectoryKind::Stop, "stop"},
    {TrajectoryKind::Circular, "circular"},
    {TrajectoryKind::DollyZoom, "dolly-zoom"},
}};

void require_frame_count(int frame_count, int minimum) {
  if (frame_count < minimum) {
    throw ValidationError("frame count must be at least " + std::to_string(minimum) + ", got " +
                          std::to_string(frame_count));
  }
}

// Fraction of the way through the clip; 0 for single-frame clips.
double progress(int t, int frame_count) {
  return frame_count > 1 ? static_cast<double>(t) / (frame_count - 1) : 0.0;
}

// Camera-center direction for each basic kind (+y is down).
Point3 motion_direction(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::Left: return {-1, 0, 0};
    case TrajectoryKind::Right: return {1, 0, 0};
    case TrajectoryKind::Up: return {0, -1, 0};
    case TrajectoryKind::Down: return {0, 1, 0};
    case TrajectoryKind::ZoomIn: return {0, 0, 1};
    case TrajectoryKind::ZoomOut: return {0, 0, -1};
    case TrajectoryKind::Stop: return {0, 0, 0};
    default:
      throw ValidationError("generate_basic does not handle '" + std::string(to_string(kind)) +
                            "'; use its dedicated generator");
  }
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), end);
}

// Picks the normalized value n to print for a pixel quantity px = n * extent.
// Among doubles near px / extent that reproduce px exactly on reading, the one
// with the shortest decimal form wins, so files that were read unchanged are
// written back byte for byte.
double normalized_for_write(double px, int extent) {
  const double scale = extent;
  const double guess = px / scale;
  std::optional<double> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  double lo = guess;
  double hi = guess;
  for (int step = 0; step < 4; ++step) {
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
  }
  for (double c = lo; c <= hi; c = std::nextafter(c, std::numeric_limits<double>::infinity())) {
    if (c * scale != px) continue;
    const std::size_t len = format_double(c).size();
    if (len < best_len) {
      best = c;
      best_len = len;
    }
  }
  return best.value_or(guess);
}

double parse_double(std::string_view token, std::size_t line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("'" + std::string(token) + "' is not a number", line);
  }
  return v;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_number(std::string_view token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::string_view to_string(TrajectoryKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

TrajectoryKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw ValidationError("unknown trajectory kind '" + std::string(name) + "'");
}

Trajectory generate_basic(TrajectoryKind kind, double magnitude, int frame_count,
                          const CameraIntrinsics& k0) {
  const Point3 direction = motion_direction(kind);
  require_frame_count(frame_count, 1);
  if (!(std::isfinite(magnitude) && magnitude >= 0.0)) {
    throw ValidationError("magnitude must be finite and non-negative");
  }
  std::vector<Frame> frames;
  frames.reserve(static_cast<std::size_t>(frame_count));
  for (int t = 0; t < frame_count; ++t) {
    const Point3 center = direction * (magnitude * progress(t, frame_count));
    // + 0.0 folds negative zeros so that magnitude 0 reproduces 'stop' exactly.
    const Point3 translation = ((-center).array() + 0.0).matrix();
    frames.push_back({CameraPose(Matrix3::Identity(), translation), k0});
  }
  return Trajectory(std::move(frames));
}

Trajectory generate_circular(double radius, double total_angle_deg, int frame_count,
                             const CameraIntrinsics& k0, double look_at_depth) {
  require_frame_count(frame_count, 2);
  if (!(radius > 0.0) || !(look_at_depth > 0.0) || !std::isfinite(total_angle_deg)) {
    throw ValidationError("circular trajectory needs radius > 0 and look_at_depth > 0");
  }
  const Point3 circle_center(-radius, 0.0, 0.0);
  const Point3 target(0.0, 0.0, look_at_depth);
  std::vector<Frame> frames;
  frames.reserve(static_cast<std::size_t>(frame_count));
  for (int t = 0; t < frame_count; ++t) {
    const double theta = total_angle_deg * progress(t, frame_count) * M_PI / 180.0;
    const Point3 center =
        circle_center + radius * Point3(std::cos(theta), std::sin(theta), 0.0);
    frames.push_back({geometry::look_at(center, target), k0});
  }
  return Trajectory(std::move(frames));
}

Trajectory generate_dolly_zoom(double subject_depth, double total_dolly, int frame_count,
                               const CameraIntrinsics& k0) {
  require_frame_count(frame_count, 1);
  if (!(subject_depth > 0.0) || !std::isfinite(subject_depth)) {
    throw ValidationError("subject depth must be positive");
  }
  if (!(total_dolly > 0.0) || !(total_dolly < subject_depth)) {
    throw ValidationError("dolly distance must lie in (0, subject_depth); the camera would "
                          "reach the subject");
  }
  std::vector<Frame> frames;
  frames.reserve(static_cast<std::size_t>(frame_count));
  for (int t = 0; t < frame_count; ++t) {
    const double dz = total_dolly * progress(t, frame_count);
    const Point3 translation(0.0, 0.0, dz == 0.0 ? 0.0 : -dz);
    frames.push_back({CameraPose(Matrix3::Identity(), translation),
                      k0.with_focal_scale((subject_depth - dz) / subject_depth)});
  }
  return Trajectory(std::move(frames));
}

Trajectory normalize_to_first_frame(const Trajectory& traj) {
  const CameraPose& first = traj[0].pose;
  std::vector<Frame> frames;
  frames.reserve(traj.size());
  frames.push_back({CameraPose::identity(), traj[0].intrinsics});
  for (std::size_t t = 1; t < traj.size(); ++t) {
    frames.push_back({geometry::relative_pose(first, traj[t].pose), traj[t].intrinsics});
  }
  return Trajectory(std::move(frames));
}

Re10kClip read_re10k(std::string_view text, int width, int height) {
  std::string source;
  std::vector<std::int64_t> timestamps;
  std::vector<Frame> frames;
  std::size_t line_no = 0;
  bool first_content = true;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (first_content && fields.size() == 1 && !is_number(fields[0])) {
      source = std::string(fields[0]);
      first_content = false;
      continue;
    }
    first_content = false;
    if (fields.size() != 19) {
      throw ParseError("expected 19 fields, found " + std::to_string(fields.size()), line_no);
    }
    std::int64_t stamp = 0;
    {
      auto [ptr, ec] =
          std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), stamp);
      if (ec != std::errc() || ptr != fields[0].data() + fields[0].size()) {
        throw ParseError("timestamp '" + std::string(fields[0]) + "' is not an integer",
                         line_no);
      }
    }
    std::array<double, 18> v{};
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = parse_double(fields[i + 1], line_no);

    Matrix3 r;
    Point3 t;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) r(row, col) = v[6 + row * 4 + col];
      t(row) = v[6 + row * 4 + 3];
    }
    try {
      CameraIntrinsics k(v[0] * width, v[1] * height, v[2] * width, v[3] * height, width,
                         height);
      frames.push_back({CameraPose(r, t, kParsedRotationTolerance), k});
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    timestamps.push_back(stamp);
  }
  if (frames.empty()) throw ParseError("no camera lines found", 0);
  return {std::move(source), std::move(timestamps), Trajectory(std::move(frames))};
}

std::string write_re10k(const Re10kClip& clip) {
  if (clip.timestamps.size() != clip.trajectory.size()) {
    throw ValidationError("timestamp count does not match frame count");
  }
  std::string out;
  if (!clip.source.empty()) {
    out += clip.source;
    out += '\n';
  }
  for (std::size_t i = 0; i < clip.trajectory.size(); ++i) {
    const Frame& f = clip.trajectory[i];
    const CameraIntrinsics& k = f.intrinsics;
    out += std::to_string(clip.timestamps[i]);
    for (double v : {normalized_for_write(k.fx(), k.width()),
                     normalized_for_write(k.fy(), k.height()),
                     normalized_for_write(k.cx(), k.width()),
                     normalized_for_write(k.cy(), k.height())}) {
      out += ' ';
      out += format_double(v);
    }
    out += " 0 0";
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        out += ' ';
        out += format_double(f.pose.rotation()(row, col));
      }
      out += ' ';
      out += format_double(f.pose.translation()(row));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Trajectory& traj) {
  nlohmann::json doc;
  doc["convention"] = "world-to-camera";
  doc["pixel_origin"] = "top-left pixel center";
  doc["width"] = traj.width();
  doc["height"] = traj.height();
  nlohmann::json frames = nlohmann::json::array();
  for (const Frame& f : traj) {
    nlohmann::json jf;
    jf["fx"] = f.intrinsics.fx();
    jf["fy"] = f.intrinsics.fy();
    jf["cx"] = f.intrinsics.cx();
    jf["cy"] = f.intrinsics.cy();
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 0; row < 3; ++row) {
      rows.push_back({f.pose.rotation()(row, 0), f.pose.rotation()(row, 1),
                      f.pose.rotation()(row, 2)});
    }
    jf["R"] = rows;
    jf["t"] = {f.pose.translation()(0), f.pose.translation()(1), f.pose.translation()(2)};
    frames.push_back(jf);
  }
  doc["frames"] = frames;
  return doc.dump(2) + "\n";
}

Trajectory from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid trajectory JSON: ") + e.what(), 0);
  }
  try {
    if (doc.contains("convention") && doc["convention"] != "world-to-camera") {
      throw ValidationError("unsupported pose convention " + doc["convention"].dump());
    }
    const int width = doc.at("width").get<int>();
    const int height = doc.at("height").get<int>();
    std::vector<Frame> frames;
    for (const auto& jf : doc.at("frames")) {
      Matrix3 r;
      Point3 t;
      for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) r(row, col) = jf.at("R").at(row).at(col).get<double>();
        t(row) = jf.at("t").at(row).get<double>();
      }
      frames.push_back({CameraPose(r, t, kParsedRotationTolerance),
                        CameraIntrinsics(jf.at("fx").get<double>(), jf.at("fy").get<double>(),
                                         jf.at("cx").get<double>(), jf.at("cy").get<double>(),
                                         width, height)});
    }
    return Trajectory(std::move(frames));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trajectory JSON: ") + e.what(), 0);
  }
}

}  // namespace camflow::trajectory
