#include "camflow/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "camflow/error.hpp"

namespace camflow::eval {

using geometry::CameraPose;
using geometry::Point3;

double rotation_error(const Matrix3& r_est, const Matrix3& r_gt) {
  if (!geometry::is_rotation(r_est, kMetricRotationTolerance) ||
      !geometry::is_rotation(r_gt, kMetricRotationTolerance)) {
    throw ValidationError("rotation_error expects orthonormal matrices");
  }
  if (r_est == r_gt) return 0.0;
  const Matrix3 delta = r_est * r_gt.transpose();
  const double cos_angle = std::clamp((delta.trace() - 1.0) / 2.0, -1.0, 1.0);
  // Same angle as acos(cos_angle), but atan2 keeps full precision near 0 and 180 degrees.
  const Point3 axis(delta(2, 1) - delta(1, 2), delta(0, 2) - delta(2, 0),
                    delta(1, 0) - delta(0, 1));
  const double sin_angle = std::min(axis.norm() / 2.0, 1.0);
  return std::atan2(sin_angle, cos_angle) * 180.0 / M_PI;
}

Trajectory scale_normalize_translations(const Trajectory& traj) {
  const Point3 origin = geometry::camera_center(traj[0].pose);
  double scale = 0.0;
  for (const auto& f : traj) {
    scale = std::max(scale, (geometry::camera_center(f.pose) - origin).norm());
  }
  if (scale < 1e-9) return traj;
  std::vector<trajectory::Frame> frames;
  frames.reserve(traj.size());
  for (const auto& f : traj) {
    frames.push_back(
        {CameraPose::unchecked(f.pose.rotation(), f.pose.translation() / scale), f.intrinsics});
  }
  return Trajectory(std::move(frames));
}

CameraMetrics evaluate_trajectories(const Trajectory& est, const Trajectory& gt) {
  if (est.size() != gt.size()) {
    throw ValidationError("trajectory lengths differ: " + std::to_string(est.size()) + " vs " +
                          std::to_string(gt.size()));
  }
  CameraMetrics m;
  m.per_frame.reserve(gt.size());
  for (std::size_t t = 0; t < gt.size(); ++t) {
    const CameraPose& e = est[t].pose;
    const CameraPose& g = gt[t].pose;
    FrameErrors fe;
    fe.rot_err = rotation_error(e.rotation(), g.rotation());
    fe.trans_err = (e.translation() - g.translation()).norm();
    Eigen::Matrix<double, 3, 4> diff;
    diff << e.rotation() - g.rotation(), e.translation() - g.translation();
    fe.cam_mc = diff.norm();
    m.m_rot_err += fe.rot_err;
    m.m_trans_err += fe.trans_err;
    m.m_cam_mc += fe.cam_mc;
    m.per_frame.push_back(fe);
  }
  const double n = static_cast<double>(gt.size());
  m.m_rot_err /= n;
  m.m_trans_err /= n;
  m.m_cam_mc /= n;
  return m;
}

CameraMetrics evaluate_normalized(const Trajectory& est, const Trajectory& gt) {
  return evaluate_trajectories(
      scale_normalize_translations(trajectory::normalize_to_first_frame(est)),
      scale_normalize_translations(trajectory::normalize_to_first_frame(gt)));
}

int min_frames_for_selection(int count, int stride) {
  // Need floor(N/2) + stride*(count-1) <= N - 1, i.e. ceil(N/2) >= stride*(count-1) + 1.
  return 2 * (stride * (count - 1) + 1) - 1;
}

std::vector<int> select_eval_frames(int total_frames, int count, int stride) {
  if (count < 1 || stride < 1) throw ValidationError("count and stride must be positive");
  const int minimum = min_frames_for_selection(count, stride);
  if (total_frames < minimum) {
    throw ValidationError("video has " + std::to_string(total_frames) + " frames; at least " +
                          std::to_string(minimum) + " are needed");
  }
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(count));
  const int first = total_frames / 2;
  for (int i = 0; i < count; ++i) indices.push_back(first + i * stride);
  return indices;
}

std::string_view to_string(MotionCategory c) {
  switch (c) {
    case MotionCategory::Small: return "small";
    case MotionCategory::Medium: return "medium";
    case MotionCategory::Large: return "large";
  }
  return "unknown";
}

MotionCategory classify_motion(double mean_object_flow_magnitude) {
  if (!(mean_object_flow_magnitude >= 0.0)) {
    throw ValidationError("flow magnitude must be non-negative");
  }
  if (mean_object_flow_magnitude < kSmallMotionLimit) return MotionCategory::Small;
  if (mean_object_flow_magnitude < kMediumMotionLimit) return MotionCategory::Medium;
  return MotionCategory::Large;
}

bool is_static_camera(double background_mean_magnitude, double threshold) {
  return background_mean_magnitude <= threshold;
}

}  // namespace camflow::eval
