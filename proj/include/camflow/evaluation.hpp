#pragma once

#include <string_view>
#include <vector>

#include "camflow/geometry.hpp"
#include "camflow/trajectory.hpp"

namespace camflow::eval {

using geometry::Matrix3;
using trajectory::Trajectory;

struct FrameErrors {
  double rot_err = 0.0;    ///< degrees
  double trans_err = 0.0;  ///< ||t_est - t_gt||
  double cam_mc = 0.0;     ///< Frobenius norm of [R|t]_est - [R|t]_gt
};

struct CameraMetrics {
  double m_rot_err = 0.0;
  double m_trans_err = 0.0;
  double m_cam_mc = 0.0;
  std::vector<FrameErrors> per_frame;
};

/// Tolerance for the orthonormality check on metric inputs.
inline constexpr double kMetricRotationTolerance = 1e-3;

/// Geodesic angle in degrees between two rotations, i.e.
/// acos((tr(R_est R_gt^T) - 1) / 2) with the argument clamped to [-1, 1].
/// Throws ValidationError for non-orthonormal inputs.
double rotation_error(const Matrix3& r_est, const Matrix3& r_gt);

/// Divides every translation by the largest distance between the first
/// camera center and any other; static trajectories (< 1e-9) are returned
/// unchanged.
Trajectory scale_normalize_translations(const Trajectory& traj);

/// Per-frame and mean errors. Both trajectories should already be normalized
/// to their first frame and scale-normalized. Throws ValidationError on a
/// length mismatch.
CameraMetrics evaluate_trajectories(const Trajectory& est, const Trajectory& gt);

/// Normalizes both trajectories to their first frame and to unit scale, then
/// evaluates.
CameraMetrics evaluate_normalized(const Trajectory& est, const Trajectory& gt);

/// Clip frame indices: the middle frame of the source video, then every
/// `stride` frames. Throws ValidationError when the video is too short, with
/// the minimum length in the message.
std::vector<int> select_eval_frames(int total_frames, int count = 14, int stride = 4);

/// Smallest video length accepted by select_eval_frames.
int min_frames_for_selection(int count = 14, int stride = 4);

enum class MotionCategory { Small, Medium, Large };

inline constexpr double kSmallMotionLimit = 20.0;   ///< px, exclusive
inline constexpr double kMediumMotionLimit = 40.0;  ///< px, exclusive

std::string_view to_string(MotionCategory c);

/// < 20 px small, < 40 px medium, otherwise large. Throws on negative input.
MotionCategory classify_motion(double mean_object_flow_magnitude);

inline constexpr double kStaticCameraThreshold = 1.0;

/// A clip counts as static-camera when its mean background flow magnitude
/// does not exceed `threshold`.
bool is_static_camera(double background_mean_magnitude,
                      double threshold = kStaticCameraThreshold);

}  // namespace camflow::eval
