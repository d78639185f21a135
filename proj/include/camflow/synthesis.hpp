#pragma once

#include <cstdint>
#include <optional>

#include "camflow/geometry.hpp"
#include "camflow/grid.hpp"

namespace camflow::synthesis {

using geometry::CameraIntrinsics;
using geometry::CameraPose;
using geometry::Pixel;

/// Metric z-depth of frame 1, one value per pixel. All values finite and > 0.
class DepthMap {
 public:
  /// Throws InvalidDepthError on the first non-finite or non-positive value.
  explicit DepthMap(Grid<double> values);
  DepthMap(int width, int height, double fill);

  int width() const noexcept { return values_.width(); }
  int height() const noexcept { return values_.height(); }
  double operator()(int x, int y) const { return values_(x, y); }
  const Grid<double>& values() const noexcept { return values_; }

  /// Bilinear lookup with coordinates clamped to the image.
  double sample(double u, double v) const;

 private:
  Grid<double> values_;
};

/// Displacement of each pixel from frame 1 to frame t, in pixels.
struct FlowVector {
  double dx = 0.0;
  double dy = 0.0;

  friend bool operator==(const FlowVector&, const FlowVector&) = default;
};

using FlowField = Grid<FlowVector>;

/// Binary moving-object mask, 1 = object. Values are 0 or 1.
using ObjectMask = Grid<std::uint8_t>;

/// 1 where the synthesized flow is valid, 0 where the point fell behind the
/// target camera (the flow there is zero).
using ValidityMask = Grid<std::uint8_t>;

struct SynthesizedFlow {
  FlowField flow;
  ValidityMask valid;
};

/// Throws ValidationError if any mask value is outside {0, 1}.
void check_mask(const ObjectMask& mask);

/// Fraction of pixels above which an object mask is discarded.
inline constexpr double kMaxMaskCoverage = 0.5;

/// False when more than half of the pixels are marked as object; such masks
/// are treated as empty by integrate_flows().
bool validate_mask(const ObjectMask& mask);

/// Frame-1 -> frame-t pixel mapping through depth, for one target camera.
class FrameMapping {
 public:
  /// Throws DimensionMismatchError unless both intrinsics share one size.
  FrameMapping(const CameraIntrinsics& source, const CameraPose& pose,
               const CameraIntrinsics& target);

  struct Mapped {
    FlowVector displacement;
    double depth;  ///< z in the target camera frame
  };

  /// Maps the source pixel `p` seen at `depth`; empty when the point ends up
  /// behind the target camera. The displacement is exactly zero when the
  /// pose is the identity and both intrinsics are equal.
  std::optional<Mapped> map(const Pixel& p, double depth) const;

  std::optional<FlowVector> displacement(const Pixel& p, double depth) const {
    if (auto m = map(p, depth)) return m->displacement;
    return std::nullopt;
  }

  bool is_identity() const noexcept { return identity_; }

 private:
  CameraIntrinsics source_;
  CameraPose pose_;
  CameraIntrinsics target_;
  bool identity_;
};

/// Where an object pixel's displaced position x' takes its depth from.
enum class DisplacedDepth {
  AtSource,     ///< depth of the original pixel x
  AtDisplaced,  ///< bilinear depth at x' (clamped to the image)
};

/// Camera-induced flow for every pixel of frame 1. Throws
/// DimensionMismatchError when depth and intrinsics disagree, and Error when
/// every pixel lands behind the camera.
SynthesizedFlow camera_flow(const DepthMap& depth, const CameraIntrinsics& k1,
                            const CameraPose& pose_t, const CameraIntrinsics& k_t);

/// Camera-object flow. Outside the mask the result is the camera flow; on
/// the mask, x' = x + object_flow(x) is pushed through the camera motion to
/// x'_t and the flow is x'_t - x.
SynthesizedFlow integrate_flows(const DepthMap& depth, const CameraIntrinsics& k1,
                                const CameraPose& pose_t, const CameraIntrinsics& k_t,
                                const FlowField& object_flow, const ObjectMask& mask,
                                DisplacedDepth policy = DisplacedDepth::AtSource);

struct WarpResult {
  Image image;
  Grid<std::uint8_t> holes;  ///< 1 where nothing landed
};

/// Forward-splats `image` into frame t. Each source pixel goes to the nearest
/// target pixel; the smallest transformed depth wins, ties to the smaller
/// source index. Holes are zero-filled.
WarpResult forward_warp(const Image& image, const DepthMap& depth, const CameraIntrinsics& k1,
                        const CameraPose& pose_t, const CameraIntrinsics& k_t);

/// output(x) = bilinear sample of `target` at x + flow(x), border-clamped.
Image backward_warp(const Image& target, const FlowField& flow);

}  // namespace camflow::synthesis
