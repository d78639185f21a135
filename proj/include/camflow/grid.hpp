#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "camflow/error.hpp"

namespace camflow {

inline std::size_t checked_pixel_count(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

/// Dense row-major H x W grid. Pixel (x, y) lives at index y * width + x.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height), data_(checked_pixel_count(width, height), fill) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(int x, int y) { return data_[index(x, y)]; }
  const T& operator()(int x, int y) const { return data_[index(x, y)]; }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::vector<T>& values() noexcept { return data_; }
  const std::vector<T>& values() const noexcept { return data_; }

  template <typename U>
  bool same_shape(const Grid<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

template <typename A, typename B>
void require_same_shape(const Grid<A>& a, const Grid<B>& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionMismatchError(std::string(what) + ": " + std::to_string(a.width()) + "x" +
                                 std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                 "x" + std::to_string(b.height()));
  }
}

/// Interleaved multi-channel float image, values nominally in [0, 1].
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, float fill = 0.0f)
      : width_(width), height_(height), channels_(channels),
        data_(checked_pixel_count(width, height) *
                  static_cast<std::size_t>(check_channels(channels)),
              fill) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }

  float& operator()(int x, int y, int c) { return data_[offset(x, y, c)]; }
  float operator()(int x, int y, int c) const { return data_[offset(x, y, c)]; }

  std::vector<float>& values() noexcept { return data_; }
  const std::vector<float>& values() const noexcept { return data_; }

  template <typename U>
  bool same_shape(const Grid<U>& g) const noexcept {
    return width() == g.width() && height() == g.height();
  }

  bool operator==(const Image&) const = default;

 private:
  static int check_channels(int c) {
    if (c <= 0) throw ValidationError("image must have at least one channel");
    return c;
  }
  std::size_t offset(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width()) +
            static_cast<std::size_t>(x)) * static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(c);
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

}  // namespace camflow
