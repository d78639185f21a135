#include "camflow/flow_codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "camflow/error.hpp"

namespace camflow::codec {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
void append_le(std::vector<std::uint8_t>& out, T value) {
  std::array<std::uint8_t, sizeof(T)> raw;
  std::memcpy(raw.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  out.insert(out.end(), raw.begin(), raw.end());
}

template <typename T>
T load_le(const std::uint8_t* p) {
  std::array<std::uint8_t, sizeof(T)> raw;
  std::memcpy(raw.data(), p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  T value;
  std::memcpy(&value, raw.data(), sizeof(T));
  return value;
}

std::array<std::array<int, 3>, kWheelSize> build_wheel() {
  // Transition lengths between the six primary hues.
  constexpr int kRY = 15, kYG = 6, kGC = 4, kCB = 11, kBM = 13, kMR = 6;
  static_assert(kRY + kYG + kGC + kCB + kBM + kMR == kWheelSize);
  std::array<std::array<int, 3>, kWheelSize> wheel{};
  int k = 0;
  for (int i = 0; i < kRY; ++i) wheel[k++] = {255, 255 * i / kRY, 0};
  for (int i = 0; i < kYG; ++i) wheel[k++] = {255 - 255 * i / kYG, 255, 0};
  for (int i = 0; i < kGC; ++i) wheel[k++] = {0, 255, 255 * i / kGC};
  for (int i = 0; i < kCB; ++i) wheel[k++] = {0, 255 - 255 * i / kCB, 255};
  for (int i = 0; i < kBM; ++i) wheel[k++] = {255 * i / kBM, 0, 255};
  for (int i = 0; i < kMR; ++i) wheel[k++] = {255, 0, 255 - 255 * i / kMR};
  return wheel;
}

const std::array<std::array<int, 3>, kWheelSize>& wheel() {
  static const auto w = build_wheel();
  return w;
}

}  // namespace

FlowScale FlowScale::make(double sx, double sy) {
  if (!(std::isfinite(sx) && sx > 0.0) || !(std::isfinite(sy) && sy > 0.0)) {
    throw ValidationError("flow scales must be positive and finite");
  }
  return {sx, sy};
}

FlowScale scale_for_profile(std::string_view profile) {
  if (profile == "omsm") return FlowScale::object_motion();
  if (profile == "fvsm") return FlowScale::video_synthesis();
  throw ValidationError("unknown normalization profile '" + std::string(profile) +
                        "' (expected omsm or fvsm)");
}

FlowField normalize_flow(const FlowField& flow, const FlowScale& scale) {
  FlowField out(flow.width(), flow.height());
  for (std::size_t i = 0; i < flow.size(); ++i) {
    out[i] = {std::clamp(flow[i].dx / scale.sx, -1.0, 1.0),
              std::clamp(flow[i].dy / scale.sy, -1.0, 1.0)};
  }
  return out;
}

FlowField denormalize_flow(const FlowField& normalized, const FlowScale& scale) {
  FlowField out(normalized.width(), normalized.height());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const FlowVector v = normalized[i];
    if (!(std::abs(v.dx) <= 1.0) || !(std::abs(v.dy) <= 1.0)) {
      throw ValidationError("normalized flow at index " + std::to_string(i) +
                            " lies outside [-1, 1]");
    }
    out[i] = {v.dx * scale.sx, v.dy * scale.sy};
  }
  return out;
}

PackedFlowImage::PackedFlowImage(const FlowField& normalized)
    : texels_(normalized.width(), normalized.height()) {
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const FlowVector v = normalized[i];
    texels_[i] = {v.dx, v.dy, (v.dx + v.dy) / 2.0};
  }
}

PackedFlowImage pack_three_channel(const FlowField& normalized) {
  return PackedFlowImage(normalized);
}

FlowField unpack_three_channel(const PackedFlowImage& packed) {
  FlowField out(packed.width(), packed.height());
  for (int y = 0; y < packed.height(); ++y) {
    for (int x = 0; x < packed.width(); ++x) {
      const auto& t = packed(x, y);
      out(x, y) = {t[0], t[1]};
    }
  }
  return out;
}

std::uint8_t quantize_packed(double v) {
  const double scaled = std::round((std::clamp(v, -1.0, 1.0) + 1.0) * 127.5);
  return static_cast<std::uint8_t>(scaled);
}

Image packed_to_image(const PackedFlowImage& packed) {
  Image out(packed.width(), packed.height(), 3);
  for (int y = 0; y < packed.height(); ++y) {
    for (int x = 0; x < packed.width(); ++x) {
      for (int c = 0; c < 3; ++c) {
        out(x, y, c) = static_cast<float>(quantize_packed(packed(x, y)[c])) / 255.0f;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> write_flo(const FlowField& flow) {
  std::vector<std::uint8_t> out;
  out.reserve(12 + flow.size() * 8);
  append_le(out, kFloMagic);
  append_le(out, static_cast<std::int32_t>(flow.width()));
  append_le(out, static_cast<std::int32_t>(flow.height()));
  for (const FlowVector& v : flow.values()) {
    append_le(out, static_cast<float>(v.dx));
    append_le(out, static_cast<float>(v.dy));
  }
  return out;
}

FlowField read_flo(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) {
    throw FormatError(".flo header needs 12 bytes, got " + std::to_string(bytes.size()));
  }
  const float magic = load_le<float>(bytes.data());
  if (magic != kFloMagic) throw FormatError("not a .flo file: wrong magic number");
  const std::int32_t width = load_le<std::int32_t>(bytes.data() + 4);
  const std::int32_t height = load_le<std::int32_t>(bytes.data() + 8);
  if (width <= 0 || height <= 0) {
    throw FormatError(".flo size must be positive, got " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
  const std::uint64_t expected =
      12 + 8ull * static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  if (bytes.size() != expected) {
    throw FormatError(".flo payload size mismatch: expected " + std::to_string(expected) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
  FlowField flow(width, height);
  const std::uint8_t* p = bytes.data() + 12;
  for (std::size_t i = 0; i < flow.size(); ++i, p += 8) {
    flow[i] = {load_le<float>(p), load_le<float>(p + 4)};
  }
  return flow;
}

FlowStats flow_stats(const FlowField& flow, const std::optional<ObjectMask>& region) {
  if (region) require_same_shape(flow, *region, "flow vs region");
  FlowStats s;
  double sum = 0.0;
  for (std::size_t i = 0; i < flow.size(); ++i) {
    if (region && (*region)[i] == 0) continue;
    const double m = std::hypot(flow[i].dx, flow[i].dy);
    sum += m;
    s.max_magnitude = std::max(s.max_magnitude, m);
    ++s.count;
  }
  if (s.count == 0) throw ValidationError("flow statistics region is empty");
  s.mean_magnitude = sum / static_cast<double>(s.count);
  return s;
}

double wheel_position(double dx, double dy) {
  const double a = std::atan2(-dy, -dx) / M_PI;
  double pos = (a + 1.0) / 2.0 * kWheelSize;
  if (pos >= kWheelSize) pos -= kWheelSize;
  return pos;
}

std::array<double, 3> wheel_color(double position) {
  const double base = std::floor(position);
  const double f = position - base;
  const int k0 = ((static_cast<int>(base) % kWheelSize) + kWheelSize) % kWheelSize;
  const int k1 = (k0 + 1) % kWheelSize;
  std::array<double, 3> rgb{};
  for (int c = 0; c < 3; ++c) {
    rgb[c] = ((1.0 - f) * wheel()[k0][c] + f * wheel()[k1][c]) / 255.0;
  }
  return rgb;
}

Image visualize(const FlowField& flow, std::optional<double> max_magnitude) {
  double max_rad = 0.0;
  if (max_magnitude) {
    if (!(*max_magnitude > 0.0)) throw ValidationError("max magnitude must be positive");
    max_rad = *max_magnitude;
  } else {
    for (const FlowVector& v : flow.values()) max_rad = std::max(max_rad, std::hypot(v.dx, v.dy));
  }

  Image out(flow.width(), flow.height(), 3, 1.0f);
  if (max_rad == 0.0) return out;
  for (int y = 0; y < flow.height(); ++y) {
    for (int x = 0; x < flow.width(); ++x) {
      const FlowVector v = flow(x, y);
      const double rad = std::hypot(v.dx, v.dy) / max_rad;
      const auto rgb = wheel_color(wheel_position(v.dx, v.dy));
      for (int c = 0; c < 3; ++c) {
        const double col = rad <= 1.0 ? 1.0 - rad * (1.0 - rgb[c]) : rgb[c] * 0.75;
        out(x, y, c) = static_cast<float>(col);
      }
    }
  }
  return out;
}

}  // namespace camflow::codec
