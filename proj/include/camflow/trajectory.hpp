#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "camflow/geometry.hpp"

namespace camflow::trajectory {

using geometry::CameraIntrinsics;
using geometry::CameraPose;

/// Default clip length.
inline constexpr int kDefaultFrameCount = 14;

struct Frame {
  CameraPose pose;
  CameraIntrinsics intrinsics;
};

/// Ordered per-frame (pose, intrinsics) sequence. Non-empty; every frame
/// shares the same image size.
class Trajectory {
 public:
  explicit Trajectory(std::vector<Frame> frames);

  std::size_t size() const noexcept { return frames_.size(); }
  const Frame& operator[](std::size_t i) const { return frames_[i]; }
  const std::vector<Frame>& frames() const noexcept { return frames_; }
  auto begin() const noexcept { return frames_.begin(); }
  auto end() const noexcept { return frames_.end(); }

  int width() const noexcept { return frames_.front().intrinsics.width(); }
  int height() const noexcept { return frames_.front().intrinsics.height(); }

 private:
  std::vector<Frame> frames_;
};

enum class TrajectoryKind { Left, Right, Up, Down, ZoomIn, ZoomOut, Stop, Circular, DollyZoom };

/// Canonical names: left, right, up, down, zoom-in, zoom-out, stop,
/// circular, dolly-zoom. parse throws ValidationError on unknown names.
std::string_view to_string(TrajectoryKind kind);
TrajectoryKind parse_kind(std::string_view name);

/// The seven benchmark trajectories. The camera moves linearly from the
/// origin to `magnitude` scene units along the named direction; zoom-in
/// moves it forward (+z), zoom-out backward. Names describe camera motion, so
/// under 'right' scene content flows left in the image.
Trajectory generate_basic(TrajectoryKind kind, double magnitude, int frame_count,
                          const CameraIntrinsics& k0);

/// Camera centers sweep `total_angle_deg` along a circle of `radius` in the
/// frame-1 x-y plane that passes through the origin; every frame fixates
/// (0, 0, look_at_depth).
Trajectory generate_circular(double radius, double total_angle_deg, int frame_count,
                             const CameraIntrinsics& k0, double look_at_depth);

/// Forward dolly of `total_dolly` toward a subject plane at `subject_depth`,
/// with focal length f_t = f_0 * (subject_depth - dz_t) / subject_depth so the
/// subject keeps its projected size.
Trajectory generate_dolly_zoom(double subject_depth, double total_dolly, int frame_count,
                               const CameraIntrinsics& k0);

/// Re-expresses every pose relative to frame 0, which becomes the identity.
Trajectory normalize_to_first_frame(const Trajectory& traj);

/// A RealEstate10K camera file: optional source line (usually a video URL),
/// then one line per frame:
///   timestamp fx fy cx cy 0 0 r00 r01 r02 t0 r10 r11 r12 t1 r20 r21 r22 t2
/// with intrinsics normalized by image width/height.
struct Re10kClip {
  std::string source;
  std::vector<std::int64_t> timestamps;
  Trajectory trajectory;
};

/// Rotation tolerance applied when reading poses from text.
inline constexpr double kParsedRotationTolerance = 1e-3;

/// Parses a RealEstate10K file, denormalizing intrinsics with the given
/// image size. Throws ParseError (with line number) on malformed lines and
/// ValidationError on non-orthonormal rotations.
Re10kClip read_re10k(std::string_view text, int width, int height);

/// Canonical formatting: single spaces, shortest round-trip decimals, '\n'
/// line endings. write_re10k(read_re10k(s)) == s for canonical s.
std::string write_re10k(const Re10kClip& clip);

/// JSON document with explicit convention metadata.
std::string to_json(const Trajectory& traj);
Trajectory from_json(std::string_view text);

}  // namespace camflow::trajectory
