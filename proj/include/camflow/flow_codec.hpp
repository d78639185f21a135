#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "camflow/grid.hpp"
#include "camflow/synthesis.hpp"

namespace camflow::codec {

using synthesis::FlowField;
using synthesis::FlowVector;
using synthesis::ObjectMask;

/// Per-axis normalization constants in pixels.
struct FlowScale {
  double sx;
  double sy;

  /// Throws ValidationError unless both scales are positive and finite.
  static FlowScale make(double sx, double sy);

  static constexpr FlowScale object_motion() { return {18.0, 12.0}; }
  static constexpr FlowScale video_synthesis() { return {45.0, 24.0}; }
};

/// Named scale profiles: "omsm" (object-motion model, 18x12) and "fvsm"
/// (flow-conditioned video model, 45x24).
FlowScale scale_for_profile(std::string_view profile);

/// Divide by the per-axis scale, then clamp to [-1, 1].
FlowField normalize_flow(const FlowField& flow, const FlowScale& scale);

/// Inverse of normalize_flow for inputs in [-1, 1]; throws ValidationError
/// on values outside that range.
FlowField denormalize_flow(const FlowField& normalized, const FlowScale& scale);

/// Three-channel image fed to an RGB autoencoder: (x, y, (x + y) / 2).
class PackedFlowImage {
 public:
  using Texel = std::array<double, 3>;

  explicit PackedFlowImage(const FlowField& normalized);

  int width() const noexcept { return texels_.width(); }
  int height() const noexcept { return texels_.height(); }
  Texel& operator()(int x, int y) { return texels_(x, y); }
  const Texel& operator()(int x, int y) const { return texels_(x, y); }

 private:
  Grid<Texel> texels_;
};

PackedFlowImage pack_three_channel(const FlowField& normalized);

/// Reads channels 1 and 2 only; channel 3 is ignored.
FlowField unpack_three_channel(const PackedFlowImage& packed);

/// 8-bit encoding of a packed image, v -> round((v + 1) * 127.5).
Image packed_to_image(const PackedFlowImage& packed);
std::uint8_t quantize_packed(double v);

/// Middlebury .flo tag, "PIEH" read as a little-endian float.
inline constexpr float kFloMagic = 202021.25f;

/// Serializes to .flo (little-endian, row-major, interleaved dx/dy float32).
/// Values are rounded to float32.
std::vector<std::uint8_t> write_flo(const FlowField& flow);

/// Throws FormatError on a wrong tag, non-positive size, or a payload whose
/// length differs from 12 + 8*W*H bytes.
FlowField read_flo(std::span<const std::uint8_t> bytes);

struct FlowStats {
  double mean_magnitude = 0.0;
  double max_magnitude = 0.0;
  std::size_t count = 0;
};

/// Magnitude statistics over the pixels where `region` is nonzero (all pixels
/// without a region). Throws ValidationError when the region selects nothing.
FlowStats flow_stats(const FlowField& flow, const std::optional<ObjectMask>& region = {});

/// Number of hues on the Middlebury color wheel.
inline constexpr int kWheelSize = 55;

/// Position of a flow direction on the color wheel, in [0, kWheelSize).
/// Opposite directions are kWheelSize / 2 apart.
double wheel_position(double dx, double dy);

/// RGB color of the wheel at a (fractional) position, channels in [0, 1].
std::array<double, 3> wheel_color(double position);

/// Middlebury color coding: hue from direction, saturation from
/// magnitude / max_magnitude (the largest magnitude in the field when not
/// given). Zero flow is white; magnitudes beyond the max are darkened.
Image visualize(const FlowField& flow, std::optional<double> max_magnitude = {});

}  // namespace camflow::codec
