#pragma once

#include <optional>

#include <Eigen/Core>

namespace camflow::geometry {

// Conventions used throughout the library:
//
//  * Extrinsics are world-to-camera: a world point X maps to R * X + t in the
//    camera frame. The camera center is therefore -R^T t.
//  * The first frame of every trajectory is the world frame (identity pose).
//  * Camera axes: +x right, +y down, +z forward (into the scene).
//  * Pixel coordinates are continuous, with (0, 0) at the center of the
//    top-left pixel.

/// Points whose camera-frame z is at or below this value are behind the camera.
inline constexpr double kMinDepth = 1e-6;

/// Per-entry tolerance for R^T R = I and det(R) = 1.
inline constexpr double kRotationTolerance = 1e-6;

using Point3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

struct Pixel {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// Pinhole intrinsics in pixels for a fixed image size.
class CameraIntrinsics {
 public:
  /// Throws ValidationError unless fx, fy > 0, the size is positive and the
  /// principal point lies in [0, width) x [0, height).
  CameraIntrinsics(double fx, double fy, double cx, double cy, int width, int height);

  /// Principal point at the image center, square pixels.
  static CameraIntrinsics centered(double focal, int width, int height);

  double fx() const noexcept { return fx_; }
  double fy() const noexcept { return fy_; }
  double cx() const noexcept { return cx_; }
  double cy() const noexcept { return cy_; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  /// Same principal point and size, focal lengths multiplied by `factor`.
  CameraIntrinsics with_focal_scale(double factor) const;

  bool same_size(const CameraIntrinsics& o) const noexcept {
    return width_ == o.width_ && height_ == o.height_;
  }

  friend bool operator==(const CameraIntrinsics&, const CameraIntrinsics&) = default;

 private:
  double fx_, fy_, cx_, cy_;
  int width_, height_;
};

/// World-to-camera rigid transform [R | t].
class CameraPose {
 public:
  CameraPose() : rotation_(Matrix3::Identity()), translation_(Point3::Zero()) {}

  /// Throws ValidationError when R is not a rotation within `tolerance`
  /// (per entry of R^T R - I, and |det R - 1|) or any entry is non-finite.
  CameraPose(const Matrix3& rotation, const Point3& translation,
             double tolerance = kRotationTolerance);

  static CameraPose identity() { return {}; }

  /// Skips validation. For poses derived from already-validated ones
  /// (composition, relative poses), where round-off would otherwise trip a
  /// tolerance chosen for raw input.
  static CameraPose unchecked(const Matrix3& rotation, const Point3& translation) {
    CameraPose p;
    p.rotation_ = rotation;
    p.translation_ = translation;
    return p;
  }

  const Matrix3& rotation() const noexcept { return rotation_; }
  const Point3& translation() const noexcept { return translation_; }

  /// Maps a world point into this camera's frame.
  Point3 transform(const Point3& world) const { return rotation_ * world + translation_; }

  /// Exact identity test (no tolerance).
  bool is_identity() const;

  friend bool operator==(const CameraPose& a, const CameraPose& b) {
    return a.rotation_ == b.rotation_ && a.translation_ == b.translation_;
  }

 private:
  Matrix3 rotation_;
  Point3 translation_;
};

/// True when R is orthonormal with determinant +1 within `tolerance`.
bool is_rotation(const Matrix3& r, double tolerance = kRotationTolerance);

/// Rotation of `degrees` about the unit axis `axis`.
Matrix3 axis_angle(const Point3& axis, double degrees);

/// Back-projects pixel `p` at z-depth `depth` into the camera frame.
/// Throws InvalidDepthError for non-positive or non-finite depth.
Point3 unproject(const Pixel& p, double depth, const CameraIntrinsics& k);

/// Projects a world point through `pose` and `k`.
/// Throws BehindCameraError when the camera-frame z is <= kMinDepth.
Pixel project(const Point3& x, const CameraPose& pose, const CameraIntrinsics& k);

/// Non-throwing variant of project(); empty when behind the camera.
std::optional<Pixel> try_project(const Point3& x, const CameraPose& pose,
                                 const CameraIntrinsics& k);

Point3 camera_center(const CameraPose& pose);

/// b expressed relative to a: maps a's camera frame into b's camera frame.
CameraPose relative_pose(const CameraPose& a, const CameraPose& b);

/// Applies `first`, then `second` (world -> first camera -> second camera).
CameraPose compose(const CameraPose& second, const CameraPose& first);

/// Builds the world-to-camera pose of a camera at `center` looking at
/// `target`, keeping the camera's +y axis as close as possible to world +y.
CameraPose look_at(const Point3& center, const Point3& target);

}  // namespace camflow::geometry
