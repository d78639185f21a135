#include <doctest.h>

#include <cmath>
#include <random>

#include "camflow/error.hpp"
#include "camflow/geometry.hpp"
#include "test_util.hpp"

using namespace camflow;
using namespace camflow::geometry;

namespace {

const CameraIntrinsics kCam(100.0, 120.0, 287.5, 159.5, 576, 320);

}  // namespace

TEST_CASE("intrinsics reject invalid parameters") {
  CHECK_THROWS_AS(CameraIntrinsics(0.0, 1.0, 1.0, 1.0, 10, 10), ValidationError);
  CHECK_THROWS_AS(CameraIntrinsics(1.0, -1.0, 1.0, 1.0, 10, 10), ValidationError);
  CHECK_THROWS_AS(CameraIntrinsics(1.0, 1.0, 10.0, 1.0, 10, 10), ValidationError);
  CHECK_THROWS_AS(CameraIntrinsics(1.0, 1.0, 1.0, -0.5, 10, 10), ValidationError);
  CHECK_THROWS_AS(CameraIntrinsics(1.0, 1.0, 0.0, 0.0, 0, 10), ValidationError);
  CHECK_NOTHROW(CameraIntrinsics(1.0, 1.0, 0.0, 0.0, 10, 10));
}

TEST_CASE("pose rejects non-rotations") {
  Matrix3 scaled = Matrix3::Identity() * 1.01;
  CHECK_THROWS_AS(CameraPose(scaled, Point3::Zero()), ValidationError);
  Matrix3 reflection = Matrix3::Identity();
  reflection(0, 0) = -1;
  CHECK_THROWS_AS(CameraPose(reflection, Point3::Zero()), ValidationError);
  CHECK_THROWS_AS(CameraPose(Matrix3::Identity(), Point3(NAN, 0, 0)), ValidationError);
}

TEST_CASE("unproject") {
  SUBCASE("principal ray") {
    const Point3 x = unproject({kCam.cx(), kCam.cy()}, 10.0, kCam);
    CHECK(x == Point3(0, 0, 10));
  }
  SUBCASE("offset pixel, hand-computed") {
    // (100 px / 100 px focal) * 10 = 10
    const Point3 x = unproject({kCam.cx() + 100.0, kCam.cy()}, 10.0, kCam);
    CHECK(x.x() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(x.y() == 0.0);
    CHECK(x.z() == 10.0);
  }
  SUBCASE("invalid depth") {
    CHECK_THROWS_AS(unproject({1, 1}, 0.0, kCam), InvalidDepthError);
    CHECK_THROWS_AS(unproject({1, 1}, -2.0, kCam), InvalidDepthError);
    CHECK_THROWS_AS(unproject({1, 1}, NAN, kCam), InvalidDepthError);
    CHECK_THROWS_AS(unproject({1, 1}, INFINITY, kCam), InvalidDepthError);
  }
}

TEST_CASE("project") {
  SUBCASE("principal ray") {
    const Pixel p = project({0, 0, 10}, CameraPose::identity(), kCam);
    CHECK(p.u == kCam.cx());
    CHECK(p.v == kCam.cy());
  }
  SUBCASE("translated camera, closed form u = fx * tx / z + cx") {
    const CameraPose pose(Matrix3::Identity(), {0.5, 0, 0});
    const Pixel p = project({0, 0, 10}, pose, kCam);
    CHECK(p.u == doctest::Approx(kCam.cx() + 5.0).epsilon(1e-15));
    CHECK(p.v == kCam.cy());
  }
  SUBCASE("behind camera carries the point") {
    try {
      project({0, 0, -1}, CameraPose::identity(), kCam);
      FAIL("expected BehindCameraError");
    } catch (const BehindCameraError& e) {
      CHECK(e.camera_point() == Point3(0, 0, -1));
    }
    CHECK_THROWS_AS(project({0, 0, kMinDepth}, CameraPose::identity(), kCam), BehindCameraError);
    CHECK_NOTHROW(project({0, 0, 2 * kMinDepth}, CameraPose::identity(), kCam));
  }
}

TEST_CASE("unproject/project round trip on random pixels") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 575.0), v(0.0, 319.0), d(0.1, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const Pixel p{u(rng), v(rng)};
    const Pixel q = project(unproject(p, d(rng), kCam), CameraPose::identity(), kCam);
    CHECK(std::abs(q.u - p.u) < 1e-9);
    CHECK(std::abs(q.v - p.v) < 1e-9);
  }
}

TEST_CASE("pure rotation projection is depth independent") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 575.0), v(0.0, 319.0), d(0.5, 50.0);
  const CameraPose pose(axis_angle({0.2, 1.0, 0.1}, 8.0), Point3::Zero());
  for (int i = 0; i < 200; ++i) {
    const Pixel p{u(rng), v(rng)};
    const Pixel a = project(unproject(p, d(rng), kCam), pose, kCam);
    const Pixel b = project(unproject(p, d(rng), kCam), pose, kCam);
    CHECK(std::abs(a.u - b.u) < 1e-7);
    CHECK(std::abs(a.v - b.v) < 1e-7);
  }
}

TEST_CASE("camera_center") {
  CHECK(camera_center(CameraPose::identity()) == Point3::Zero());
  CHECK(camera_center(CameraPose(Matrix3::Identity(), {1, 2, 3})) == Point3(-1, -2, -3));

  // R = Rz(90): R^T (1,0,0) = (0,-1,0), so -R^T t = (0,1,0).
  const CameraPose rz(axis_angle({0, 0, 1}, 90.0), {1, 0, 0});
  const Point3 c = camera_center(rz);
  CHECK(c.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.y() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.z() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("relative_pose") {
  std::mt19937_64 rng(3);
  SUBCASE("self is identity") {
    const CameraPose p = testing::random_pose(rng);
    const CameraPose r = relative_pose(p, p);
    CHECK((r.rotation() - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(r.translation().cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("relative to identity returns the pose") {
    const CameraPose b = testing::random_pose(rng);
    CHECK(relative_pose(CameraPose::identity(), b) == b);
  }
  SUBCASE("compose(relative(a, b), a) == b") {
    for (int i = 0; i < 100; ++i) {
      const CameraPose a = testing::random_pose(rng);
      const CameraPose b = testing::random_pose(rng);
      const CameraPose c = compose(relative_pose(a, b), a);
      CHECK((c.rotation() - b.rotation()).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((c.translation() - b.translation()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("look_at aims the optical axis at the target") {
  const Point3 center(1.0, -0.5, 0.3);
  const Point3 target(0.0, 0.0, 6.0);
  const CameraPose pose = look_at(center, target);
  CHECK(camera_center(pose).isApprox(center, 1e-12));
  const Pixel p = project(target, pose, kCam);
  CHECK(p.u == doctest::Approx(kCam.cx()).epsilon(1e-12));
  CHECK(p.v == doctest::Approx(kCam.cy()).epsilon(1e-12));
  CHECK(look_at(Point3::Zero(), {0, 0, 1}).is_identity());
  CHECK_THROWS_AS(look_at(Point3::Zero(), Point3::Zero()), ValidationError);
}
