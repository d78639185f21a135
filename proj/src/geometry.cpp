#include "camflow/geometry.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Geometry>

#include "camflow/error.hpp"

namespace camflow::geometry {

namespace {

std::string format_point(const Point3& p) {
  std::ostringstream os;
  os << "(" << p.x() << ", " << p.y() << ", " << p.z() << ")";
  return os.str();
}

}  // namespace

CameraIntrinsics::CameraIntrinsics(double fx, double fy, double cx, double cy, int width,
                                   int height)
    : fx_(fx), fy_(fy), cx_(cx), cy_(cy), width_(width), height_(height) {
  if (!(std::isfinite(fx) && fx > 0.0) || !(std::isfinite(fy) && fy > 0.0)) {
    throw ValidationError("focal lengths must be positive and finite");
  }
  if (width <= 0 || height <= 0) {
    throw ValidationError("image size must be positive");
  }
  if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height)) {
    throw ValidationError("principal point must lie inside the image");
  }
}

CameraIntrinsics CameraIntrinsics::centered(double focal, int width, int height) {
  return {focal, focal, (width - 1) / 2.0, (height - 1) / 2.0, width, height};
}

CameraIntrinsics CameraIntrinsics::with_focal_scale(double factor) const {
  return {fx_ * factor, fy_ * factor, cx_, cy_, width_, height_};
}

bool is_rotation(const Matrix3& r, double tolerance) {
  if (!r.allFinite()) return false;
  const Matrix3 gram = r.transpose() * r - Matrix3::Identity();
  if (gram.cwiseAbs().maxCoeff() > tolerance) return false;
  return std::abs(r.determinant() - 1.0) <= tolerance;
}

CameraPose::CameraPose(const Matrix3& rotation, const Point3& translation, double tolerance)
    : rotation_(rotation), translation_(translation) {
  if (!is_rotation(rotation, tolerance)) {
    throw ValidationError("rotation is not orthonormal with det +1");
  }
  if (!translation.allFinite()) {
    throw ValidationError("translation must be finite");
  }
}

bool CameraPose::is_identity() const {
  return rotation_ == Matrix3::Identity() && translation_ == Point3::Zero();
}

Matrix3 axis_angle(const Point3& axis, double degrees) {
  return Eigen::AngleAxisd(degrees * M_PI / 180.0, axis.normalized()).toRotationMatrix();
}

Point3 unproject(const Pixel& p, double depth, const CameraIntrinsics& k) {
  if (!std::isfinite(depth) || depth <= 0.0) {
    throw InvalidDepthError("depth must be positive and finite, got " + std::to_string(depth));
  }
  return {(p.u - k.cx()) * depth / k.fx(), (p.v - k.cy()) * depth / k.fy(), depth};
}

std::optional<Pixel> try_project(const Point3& x, const CameraPose& pose,
                                 const CameraIntrinsics& k) {
  const Point3 c = pose.transform(x);
  if (!(c.z() > kMinDepth)) return std::nullopt;
  return Pixel{k.fx() * c.x() / c.z() + k.cx(), k.fy() * c.y() / c.z() + k.cy()};
}

Pixel project(const Point3& x, const CameraPose& pose, const CameraIntrinsics& k) {
  if (auto p = try_project(x, pose, k)) return *p;
  const Point3 c = pose.transform(x);
  throw BehindCameraError("point " + format_point(x) + " lies behind the camera (z = " +
                              std::to_string(c.z()) + ")",
                          c);
}

Point3 camera_center(const CameraPose& pose) {
  return -(pose.rotation().transpose() * pose.translation());
}

CameraPose relative_pose(const CameraPose& a, const CameraPose& b) {
  const Matrix3 r = b.rotation() * a.rotation().transpose();
  return CameraPose::unchecked(r, b.translation() - r * a.translation());
}

CameraPose compose(const CameraPose& second, const CameraPose& first) {
  return CameraPose::unchecked(second.rotation() * first.rotation(),
                               second.rotation() * first.translation() + second.translation());
}

CameraPose look_at(const Point3& center, const Point3& target) {
  const Point3 forward = target - center;
  if (!(forward.norm() > 0.0)) {
    throw ValidationError("look_at target coincides with the camera center");
  }
  const Point3 z = forward.normalized();
  const Point3 down = Point3::UnitY();
  Point3 x = down.cross(z);
  if (!(x.norm() > 1e-12)) {
    throw ValidationError("look_at direction is parallel to the image y axis");
  }
  x.normalize();
  const Point3 y = z.cross(x);
  Matrix3 r;
  r.row(0) = x.transpose();
  r.row(1) = y.transpose();
  r.row(2) = z.transpose();
  return CameraPose(r, -(r * center));
}

}  // namespace camflow::geometry
