#include <doctest.h>

#include <bit>
#include <cstring>
#include <fstream>

#include "camflow/error.hpp"
#include "camflow/image_io.hpp"
#include "test_util.hpp"

using namespace camflow;
using testing::TempDir;

namespace {

Grid<double> ramp(int w, int h) {
  Grid<double> g(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) g(x, y) = 0.5 + x + 100.0 * y;  // exact in float32
  return g;
}

}  // namespace

TEST_CASE("png round trip") {
  TempDir dir("png");
  for (int channels : {1, 3, 4}) {
    Image img(7, 5, channels);
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 7; ++x)
        for (int c = 0; c < channels; ++c)
          img(x, y, c) = float((x * 31 + y * 17 + c * 5) % 256) / 255.0f;
    const auto path = dir / ("img" + std::to_string(channels) + ".png");
    io::write_png(path, img);
    const Image back = io::read_png(path);
    REQUIRE(back.channels() == channels);
    REQUIRE(back.width() == 7);
    REQUIRE(back.height() == 5);
    for (std::size_t i = 0; i < img.values().size(); ++i) {
      CHECK(std::lround(back.values()[i] * 255.0f) == std::lround(img.values()[i] * 255.0f));
    }
  }
}

TEST_CASE("png gray bytes and mask reading") {
  TempDir dir("mask");
  Grid<std::uint8_t> g(4, 3, 0);
  g(1, 0) = 255;
  g(2, 2) = 7;
  io::write_png_gray(dir / "m.png", g);
  const auto mask = io::read_mask_png(dir / "m.png");
  CHECK(mask(1, 0) == 1);
  CHECK(mask(2, 2) == 1);
  CHECK(mask(0, 0) == 0);
  int ones = 0;
  for (auto v : mask.values()) ones += v;
  CHECK(ones == 2);
}

TEST_CASE("png errors") {
  TempDir dir("pngerr");
  CHECK_THROWS_AS(io::read_png(dir / "missing.png"), IoError);
  io::write_text(dir / "bad.png", "not a png");
  CHECK_THROWS_AS(io::read_png(dir / "bad.png"), Error);
}

TEST_CASE("pfm round trip and layout") {
  TempDir dir("pfm");
  const Grid<double> g = ramp(3, 2);
  io::write_pfm(dir / "d.pfm", g);
  CHECK(io::read_pfm(dir / "d.pfm") == g);

  // Bottom row comes first in the file.
  const auto bytes = io::read_bytes(dir / "d.pfm");
  const std::string header = "Pf\n3 2\n";
  REQUIRE(bytes.size() > header.size());
  CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
  const std::size_t payload = bytes.size() - 6 * 4;
  float first;
  std::memcpy(&first, bytes.data() + payload, 4);
  if constexpr (std::endian::native == std::endian::little) CHECK(first == float(g(0, 1)));
}

TEST_CASE("pfm big-endian input") {
  TempDir dir("pfmbe");
  std::string s = "Pf\n2 1\n1.0\n";
  for (float v : {1.5f, 2.25f}) {
    std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
    for (int shift = 24; shift >= 0; shift -= 8) s.push_back(char((bits >> shift) & 0xff));
  }
  io::write_text(dir / "be.pfm", s);
  const auto g = io::read_pfm(dir / "be.pfm");
  CHECK(g(0, 0) == 1.5);
  CHECK(g(1, 0) == 2.25);
}

TEST_CASE("pfm errors") {
  TempDir dir("pfmerr");
  io::write_text(dir / "color.pfm", "PF\n1 1\n-1.0\n000000000000");
  CHECK_THROWS_AS(io::read_pfm(dir / "color.pfm"), FormatError);
  io::write_text(dir / "short.pfm", "Pf\n4 4\n-1.0\n0123");
  CHECK_THROWS_AS(io::read_pfm(dir / "short.pfm"), FormatError);
}

TEST_CASE("raw depth with sidecar") {
  TempDir dir("raw");
  const Grid<double> g = ramp(5, 4);
  io::write_raw_depth(dir / "d.bin", g);
  CHECK(std::filesystem::exists(dir / "d.bin.json"));
  CHECK(io::read_raw_depth(dir / "d.bin") == g);
  CHECK(io::read_bytes(dir / "d.bin").size() == 5 * 4 * 4);

  const auto depth = io::read_depth(dir / "d.bin");
  CHECK(depth.width() == 5);
  CHECK(depth(4, 3) == g(4, 3));

  io::write_text(dir / "d.bin.json", R"({"width": 6, "height": 4})");
  CHECK_THROWS_AS(io::read_raw_depth(dir / "d.bin"), FormatError);
}

TEST_CASE("read_depth validates values") {
  TempDir dir("depthval");
  Grid<double> g(2, 2, 1.0);
  g(1, 1) = 0.0;
  io::write_pfm(dir / "zero.pfm", g);
  CHECK_THROWS_AS(io::read_depth(dir / "zero.pfm"), InvalidDepthError);
}
