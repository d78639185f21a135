#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "camflow/error.hpp"
#include "camflow/evaluation.hpp"
#include "test_util.hpp"

using namespace camflow;
using namespace camflow::eval;
using geometry::CameraIntrinsics;
using geometry::CameraPose;
using geometry::Point3;
using trajectory::Frame;

namespace {

const CameraIntrinsics kCam = CameraIntrinsics::centered(288.0, 576, 320);

Trajectory from_poses(const std::vector<CameraPose>& poses) {
  std::vector<Frame> frames;
  for (const auto& p : poses) frames.push_back({p, kCam});
  return Trajectory(frames);
}

Trajectory random_trajectory(std::mt19937_64& rng, int n) {
  std::vector<CameraPose> poses;
  for (int i = 0; i < n; ++i) poses.push_back(testing::random_pose(rng));
  return from_poses(poses);
}

}  // namespace

TEST_CASE("rotation_error") {
  const Matrix3 i = Matrix3::Identity();
  CHECK(rotation_error(i, i) == 0.0);
  CHECK(std::abs(rotation_error(geometry::axis_angle({0, 0, 1}, 10.0), i) - 10.0) < 1e-9);
  CHECK(std::abs(rotation_error(geometry::axis_angle({1, 2, 3}, 73.5), i) - 73.5) < 1e-9);
  const double half_turn = rotation_error(geometry::axis_angle({0, 1, 0}, 180.0), i);
  CHECK(std::isfinite(half_turn));
  CHECK(std::abs(half_turn - 180.0) < 1e-9);
  CHECK_THROWS_AS(rotation_error(i * 1.1, i), ValidationError);
  CHECK_THROWS_AS(rotation_error(i, Matrix3::Zero()), ValidationError);
}

TEST_CASE("rotation_error agrees with the trace formula and is symmetric") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const Matrix3 a = testing::random_rotation(rng);
    const Matrix3 b = testing::random_rotation(rng);
    const double c = std::clamp(((a * b.transpose()).trace() - 1.0) / 2.0, -1.0, 1.0);
    const double via_trace = std::acos(c) * 180.0 / M_PI;
    CHECK(std::abs(rotation_error(a, b) - via_trace) < 1e-6);
    CHECK(std::abs(rotation_error(a, b) - rotation_error(b, a)) < 1e-9);
  }
}

TEST_CASE("scale_normalize_translations") {
  SUBCASE("static trajectory is unchanged") {
    const Trajectory t = from_poses({CameraPose(), CameraPose(), CameraPose()});
    const Trajectory n = scale_normalize_translations(t);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(n[i].pose == t[i].pose);
  }
  SUBCASE("farthest camera ends at unit distance") {
    const Trajectory t = from_poses({CameraPose(), CameraPose(Matrix3::Identity(), {-1, 0, 0}),
                                     CameraPose(Matrix3::Identity(), {-4, 0, 0}),
                                     CameraPose(Matrix3::Identity(), {-2, 0, 0})});
    const Trajectory n = scale_normalize_translations(t);
    CHECK(geometry::camera_center(n[2].pose).norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(geometry::camera_center(n[1].pose).norm() == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("uses camera centers, not raw translations") {
    // Rotated camera: |t| = 2 but its center is 2 away as well; a second
    // camera with a large t but center at origin must not set the scale.
    const Matrix3 r = geometry::axis_angle({0, 1, 0}, 30.0);
    const Trajectory t = from_poses({CameraPose(), CameraPose(r, r * Point3(0, 0, -2)),
                                     CameraPose(r, Point3::Zero())});
    const Trajectory n = scale_normalize_translations(t);
    CHECK(geometry::camera_center(n[1].pose).norm() == doctest::Approx(1.0));
  }
  SUBCASE("idempotent") {
    std::mt19937_64 rng(23);
    const Trajectory t = trajectory::normalize_to_first_frame(random_trajectory(rng, 14));
    const Trajectory once = scale_normalize_translations(t);
    const Trajectory twice = scale_normalize_translations(once);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK((once[i].pose.translation() - twice[i].pose.translation()).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("evaluate_trajectories") {
  std::mt19937_64 rng(29);
  SUBCASE("identical trajectories give zeros") {
    const Trajectory t = random_trajectory(rng, 14);
    const auto m = evaluate_trajectories(t, t);
    CHECK(m.m_rot_err == 0.0);
    CHECK(m.m_trans_err == 0.0);
    CHECK(m.m_cam_mc == 0.0);
    CHECK(m.per_frame.size() == 14);
  }
  SUBCASE("constant translation offset") {
    std::vector<CameraPose> id(5), shifted(5, CameraPose(Matrix3::Identity(), {0.3, 0, 0}));
    const auto m = evaluate_trajectories(from_poses(shifted), from_poses(id));
    CHECK(m.m_rot_err == 0.0);
    CHECK(m.m_trans_err == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(m.m_cam_mc == doctest::Approx(0.3).epsilon(1e-15));
  }
  SUBCASE("10 degree rotation pair") {
    std::vector<CameraPose> id(14),
        rotated(14, CameraPose(geometry::axis_angle({0, 0, 1}, 10.0), Point3::Zero()));
    const auto m = evaluate_trajectories(from_poses(rotated), from_poses(id));
    CHECK(std::abs(m.m_rot_err - 10.0) < 1e-6);
    CHECK(m.m_trans_err == 0.0);
  }
  SUBCASE("extrinsic error bounds the translation error") {
    for (int k = 0; k < 50; ++k) {
      const auto m = evaluate_trajectories(random_trajectory(rng, 6), random_trajectory(rng, 6));
      for (const auto& f : m.per_frame) CHECK(f.cam_mc >= f.trans_err);
    }
  }
  SUBCASE("mean rotation error ignores a shared global rotation") {
    const Trajectory a = random_trajectory(rng, 10);
    const Trajectory b = random_trajectory(rng, 10);
    const CameraPose g(testing::random_rotation(rng), Point3::Zero());
    std::vector<CameraPose> ga, gb;
    for (const auto& f : a) ga.push_back(geometry::compose(g, f.pose));
    for (const auto& f : b) gb.push_back(geometry::compose(g, f.pose));
    const double before = evaluate_trajectories(a, b).m_rot_err;
    const double after = evaluate_trajectories(from_poses(ga), from_poses(gb)).m_rot_err;
    CHECK(std::abs(before - after) < 1e-9);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(evaluate_trajectories(random_trajectory(rng, 3), random_trajectory(rng, 4)),
                    ValidationError);
  }
  SUBCASE("normalized evaluation of a trajectory against itself") {
    const Trajectory t = random_trajectory(rng, 14);
    const auto m = evaluate_normalized(t, t);
    CHECK(m.m_rot_err == 0.0);
    CHECK(m.m_trans_err == 0.0);
    CHECK(m.m_cam_mc == 0.0);
  }
}

TEST_CASE("select_eval_frames") {
  const auto a = select_eval_frames(120);
  REQUIRE(a.size() == 14);
  CHECK(a.front() == 60);
  CHECK(a[1] == 64);
  CHECK(a.back() == 112);
  const auto b = select_eval_frames(105);
  CHECK(b.front() == 52);
  CHECK(b.back() == 104);
  CHECK(min_frames_for_selection() == 105);
  CHECK_THROWS_AS(select_eval_frames(104), ValidationError);
  try {
    select_eval_frames(60);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("105") != std::string::npos);
  }
  // brute-force check of the minimum for other shapes
  for (int count = 1; count < 6; ++count) {
    for (int stride = 1; stride < 6; ++stride) {
      int n = 1;
      while (n / 2 + stride * (count - 1) > n - 1) ++n;
      CHECK(min_frames_for_selection(count, stride) == n);
    }
  }
}

TEST_CASE("classify_motion") {
  CHECK(classify_motion(0.0) == MotionCategory::Small);
  CHECK(classify_motion(19.9) == MotionCategory::Small);
  CHECK(classify_motion(20.0) == MotionCategory::Medium);
  CHECK(classify_motion(39.9) == MotionCategory::Medium);
  CHECK(classify_motion(39.999) == MotionCategory::Medium);
  CHECK(classify_motion(40.0) == MotionCategory::Large);
  CHECK(classify_motion(1e6) == MotionCategory::Large);
  CHECK_THROWS_AS(classify_motion(-0.1), ValidationError);
  CHECK(to_string(MotionCategory::Medium) == "medium");

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0.0, 80.0);
  for (int i = 0; i < 1000; ++i) {
    double a = d(rng), b = d(rng);
    if (a > b) std::swap(a, b);
    CHECK(static_cast<int>(classify_motion(a)) <= static_cast<int>(classify_motion(b)));
  }
}

TEST_CASE("is_static_camera") {
  CHECK(is_static_camera(0.0));
  CHECK(is_static_camera(1.0));
  CHECK_FALSE(is_static_camera(1.0001));
  CHECK_FALSE(is_static_camera(0.5, 0.4));
  CHECK(is_static_camera(0.4, 0.4));
}
