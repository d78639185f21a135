#include "camflow/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "camflow/error.hpp"

namespace camflow::synthesis {

namespace {

struct BilinearTap {
  int x0, y0, x1, y1;
  double wx, wy;
};

BilinearTap bilinear_tap(double u, double v, int width, int height) {
  u = std::clamp(u, 0.0, static_cast<double>(width - 1));
  v = std::clamp(v, 0.0, static_cast<double>(height - 1));
  BilinearTap t;
  t.x0 = static_cast<int>(std::floor(u));
  t.y0 = static_cast<int>(std::floor(v));
  t.x1 = std::min(t.x0 + 1, width - 1);
  t.y1 = std::min(t.y0 + 1, height - 1);
  t.wx = u - t.x0;
  t.wy = v - t.y0;
  return t;
}

template <typename Fetch>
double blend(const BilinearTap& t, Fetch&& fetch) {
  const double top = (1.0 - t.wx) * fetch(t.x0, t.y0) + t.wx * fetch(t.x1, t.y0);
  const double bottom = (1.0 - t.wx) * fetch(t.x0, t.y1) + t.wx * fetch(t.x1, t.y1);
  return (1.0 - t.wy) * top + t.wy * bottom;
}

void require_intrinsics_match(const DepthMap& depth, const CameraIntrinsics& k) {
  if (depth.width() != k.width() || depth.height() != k.height()) {
    throw DimensionMismatchError("depth map is " + std::to_string(depth.width()) + "x" +
                                 std::to_string(depth.height()) + " but intrinsics are " +
                                 std::to_string(k.width()) + "x" + std::to_string(k.height()));
  }
}

}  // namespace

DepthMap::DepthMap(Grid<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double d = values_[i];
    if (!std::isfinite(d) || d <= 0.0) {
      throw InvalidDepthError("depth at pixel (" + std::to_string(i % values_.width()) + ", " +
                              std::to_string(i / values_.width()) +
                              ") is not positive and finite: " + std::to_string(d));
    }
  }
}

DepthMap::DepthMap(int width, int height, double fill)
    : DepthMap(Grid<double>(width, height, fill)) {}

double DepthMap::sample(double u, double v) const {
  const BilinearTap t = bilinear_tap(u, v, width(), height());
  return blend(t, [this](int x, int y) { return values_(x, y); });
}

void check_mask(const ObjectMask& mask) {
  for (std::uint8_t m : mask.values()) {
    if (m > 1) throw ValidationError("object mask values must be 0 or 1");
  }
}

bool validate_mask(const ObjectMask& mask) {
  check_mask(mask);
  const auto covered = std::count(mask.values().begin(), mask.values().end(), std::uint8_t{1});
  return static_cast<double>(covered) <= kMaxMaskCoverage * static_cast<double>(mask.size());
}

FrameMapping::FrameMapping(const CameraIntrinsics& source, const CameraPose& pose,
                           const CameraIntrinsics& target)
    : source_(source), pose_(pose), target_(target),
      identity_(pose.is_identity() && source == target) {
  if (!source.same_size(target)) {
    throw DimensionMismatchError("source and target intrinsics describe different image sizes");
  }
}

std::optional<FrameMapping::Mapped> FrameMapping::map(const Pixel& p, double depth) const {
  if (identity_) return Mapped{{0.0, 0.0}, depth};
  const geometry::Point3 world = geometry::unproject(p, depth, source_);
  const geometry::Point3 cam = pose_.transform(world);
  if (!(cam.z() > geometry::kMinDepth)) return std::nullopt;
  const double u = target_.fx() * cam.x() / cam.z() + target_.cx();
  const double v = target_.fy() * cam.y() / cam.z() + target_.cy();
  return Mapped{{u - p.u, v - p.v}, cam.z()};
}

SynthesizedFlow camera_flow(const DepthMap& depth, const CameraIntrinsics& k1,
                            const CameraPose& pose_t, const CameraIntrinsics& k_t) {
  require_intrinsics_match(depth, k1);
  const FrameMapping mapping(k1, pose_t, k_t);
  SynthesizedFlow out{FlowField(depth.width(), depth.height()),
                      ValidityMask(depth.width(), depth.height(), 1)};
  std::size_t valid = 0;
  for (int y = 0; y < depth.height(); ++y) {
    for (int x = 0; x < depth.width(); ++x) {
      if (auto d = mapping.displacement({double(x), double(y)}, depth(x, y))) {
        out.flow(x, y) = *d;
        ++valid;
      } else {
        out.valid(x, y) = 0;
      }
    }
  }
  if (valid == 0) throw Error("every pixel lands behind the target camera");
  return out;
}

SynthesizedFlow integrate_flows(const DepthMap& depth, const CameraIntrinsics& k1,
                                const CameraPose& pose_t, const CameraIntrinsics& k_t,
                                const FlowField& object_flow, const ObjectMask& mask,
                                DisplacedDepth policy) {
  require_intrinsics_match(depth, k1);
  require_same_shape(depth.values(), object_flow, "object flow vs depth");
  require_same_shape(depth.values(), mask, "object mask vs depth");

  SynthesizedFlow out = camera_flow(depth, k1, pose_t, k_t);
  if (!validate_mask(mask)) return out;

  const FrameMapping mapping(k1, pose_t, k_t);
  for (int y = 0; y < depth.height(); ++y) {
    for (int x = 0; x < depth.width(); ++x) {
      if (mask(x, y) == 0) continue;
      const FlowVector object = object_flow(x, y);
      const Pixel displaced{x + object.dx, y + object.dy};
      const double d = policy == DisplacedDepth::AtSource ? depth(x, y)
                                                          : depth.sample(displaced.u, displaced.v);
      // x'_t - x = (x'_t - x') + (x' - x)
      if (auto camera = mapping.displacement(displaced, d)) {
        out.flow(x, y) = {object.dx + camera->dx, object.dy + camera->dy};
        out.valid(x, y) = 1;
      } else {
        out.flow(x, y) = {};
        out.valid(x, y) = 0;
      }
    }
  }
  return out;
}

WarpResult forward_warp(const Image& image, const DepthMap& depth, const CameraIntrinsics& k1,
                        const CameraPose& pose_t, const CameraIntrinsics& k_t) {
  require_intrinsics_match(depth, k1);
  if (!image.same_shape(depth.values())) {
    throw DimensionMismatchError("image and depth map differ in size");
  }
  const FrameMapping mapping(k1, pose_t, k_t);
  const int w = image.width();
  const int h = image.height();
  const int channels = image.channels();

  Grid<double> zbuffer(w, h, std::numeric_limits<double>::infinity());
  Grid<std::int64_t> winner(w, h, -1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto m = mapping.map({double(x), double(y)}, depth(x, y));
      if (!m) continue;
      const double tu = std::floor(x + m->displacement.dx + 0.5);
      const double tv = std::floor(y + m->displacement.dy + 0.5);
      if (!(tu >= 0 && tu < w && tv >= 0 && tv < h)) continue;
      const int ix = static_cast<int>(tu);
      const int iy = static_cast<int>(tv);
      // Strict '<': on equal depth the earlier (smaller index) source keeps the pixel.
      if (m->depth < zbuffer(ix, iy)) {
        zbuffer(ix, iy) = m->depth;
        winner(ix, iy) = static_cast<std::int64_t>(y) * w + x;
      }
    }
  }

  WarpResult out{Image(w, h, channels, 0.0f), Grid<std::uint8_t>(w, h, 1)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::int64_t src = winner(x, y);
      if (src < 0) continue;
      const int sx = static_cast<int>(src % w);
      const int sy = static_cast<int>(src / w);
      for (int c = 0; c < channels; ++c) out.image(x, y, c) = image(sx, sy, c);
      out.holes(x, y) = 0;
    }
  }
  return out;
}

Image backward_warp(const Image& target, const FlowField& flow) {
  if (!target.same_shape(flow)) {
    throw DimensionMismatchError("image and flow field differ in size");
  }
  Image out(target.width(), target.height(), target.channels());
  for (int y = 0; y < target.height(); ++y) {
    for (int x = 0; x < target.width(); ++x) {
      const FlowVector f = flow(x, y);
      const BilinearTap t = bilinear_tap(x + f.dx, y + f.dy, target.width(), target.height());
      for (int c = 0; c < target.channels(); ++c) {
        out(x, y, c) = static_cast<float>(
            blend(t, [&](int sx, int sy) { return double(target(sx, sy, c)); }));
      }
    }
  }
  return out;
}

}  // namespace camflow::synthesis
