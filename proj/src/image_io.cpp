#include "camflow/image_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <png.h>

#include "camflow/error.hpp"

namespace camflow::io {

namespace {

std::uint8_t to_byte(float v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
}

png_uint_32 png_format_for(int channels) {
  switch (channels) {
    case 1: return PNG_FORMAT_GRAY;
    case 2: return PNG_FORMAT_GA;
    case 3: return PNG_FORMAT_RGB;
    case 4: return PNG_FORMAT_RGBA;
    default: throw ValidationError("PNG supports 1 to 4 channels");
  }
}

void write_png_buffer(const fs::path& path, int width, int height, int channels,
                      const std::vector<std::uint8_t>& data) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = png_format_for(channels);
  if (!png_image_write_to_file(&image, path.c_str(), 0, data.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw IoError("cannot write " + path.string() + ": " + msg);
  }
}

std::string read_pfm_token(std::istream& in) {
  std::string token;
  in >> token;
  if (!in) throw FormatError("truncated PFM header");
  return token;
}

float to_host(float v, bool little_endian) {
  const bool swap = little_endian != (std::endian::native == std::endian::little);
  if (!swap) return v;
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  bits = ((bits & 0xFF) << 24) | ((bits & 0xFF00) << 8) | ((bits >> 8) & 0xFF00) | (bits >> 24);
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("short write to " + path.string());
}

Image read_png(const fs::path& path) {
  const auto bytes = read_bytes(path);
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError(path.string() + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  const int channels = (color ? 3 : 1) + (alpha ? 1 : 0);
  image.format = png_format_for(channels);
  std::vector<std::uint8_t> data(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, data.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw FormatError(path.string() + ": " + msg);
  }
  Image img(static_cast<int>(image.width), static_cast<int>(image.height), channels);
  std::transform(data.begin(), data.end(), img.values().begin(),
                 [](std::uint8_t b) { return b / 255.0f; });
  return img;
}

void write_png(const fs::path& path, const Image& image) {
  std::vector<std::uint8_t> data(image.values().size());
  std::transform(image.values().begin(), image.values().end(), data.begin(), to_byte);
  write_png_buffer(path, image.width(), image.height(), image.channels(), data);
}

void write_png_gray(const fs::path& path, const Grid<std::uint8_t>& values) {
  write_png_buffer(path, values.width(), values.height(), 1, values.values());
}

synthesis::ObjectMask read_mask_png(const fs::path& path) {
  const Image img = read_png(path);
  synthesis::ObjectMask mask(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) mask(x, y) = img(x, y, 0) != 0.0f ? 1 : 0;
  }
  return mask;
}

Grid<double> read_pfm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string kind = read_pfm_token(in);
  if (kind != "Pf") {
    throw FormatError(path.string() + ": only grayscale PFM (Pf) depth maps are supported");
  }
  int width = 0;
  int height = 0;
  double scale = 0.0;
  try {
    width = std::stoi(read_pfm_token(in));
    height = std::stoi(read_pfm_token(in));
    scale = std::stod(read_pfm_token(in));
  } catch (const std::logic_error&) {
    throw FormatError(path.string() + ": malformed PFM header");
  }
  if (width <= 0 || height <= 0 || scale == 0.0) {
    throw FormatError(path.string() + ": invalid PFM size or scale");
  }
  in.get();  // single whitespace byte before the raster
  const bool little_endian = scale < 0.0;
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<float> raw(count);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count * 4));
  if (static_cast<std::size_t>(in.gcount()) != count * 4) {
    throw FormatError(path.string() + ": PFM raster truncated (expected " +
                      std::to_string(count * 4) + " bytes, got " + std::to_string(in.gcount()) +
                      ")");
  }
  Grid<double> out(width, height);
  for (int y = 0; y < height; ++y) {
    const std::size_t row = static_cast<std::size_t>(height - 1 - y) * width;
    for (int x = 0; x < width; ++x) out(x, y) = to_host(raw[row + x], little_endian);
  }
  return out;
}

void write_pfm(const fs::path& path, const Grid<double>& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  const bool little = std::endian::native == std::endian::little;
  out << "Pf\n" << values.width() << " " << values.height() << "\n" << (little ? "-1.0" : "1.0")
      << "\n";
  for (int y = values.height() - 1; y >= 0; --y) {
    for (int x = 0; x < values.width(); ++x) {
      const float v = static_cast<float>(values(x, y));
      out.write(reinterpret_cast<const char*>(&v), 4);
    }
  }
  if (!out) throw IoError("short write to " + path.string());
}

Grid<double> read_raw_depth(const fs::path& path) {
  fs::path sidecar = path;
  sidecar += ".json";
  int width = 0;
  int height = 0;
  try {
    const auto meta = nlohmann::json::parse(read_text(sidecar));
    width = meta.at("width").get<int>();
    height = meta.at("height").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(sidecar.string() + ": " + e.what());
  }
  const auto bytes = read_bytes(path);
  const std::size_t count = checked_pixel_count(width, height);
  if (bytes.size() != count * 4) {
    throw FormatError(path.string() + ": expected " + std::to_string(count * 4) +
                      " bytes of float32 depth, got " + std::to_string(bytes.size()));
  }
  Grid<double> out(width, height);
  for (std::size_t i = 0; i < count; ++i) {
    float v;
    std::memcpy(&v, bytes.data() + 4 * i, 4);
    out[i] = to_host(v, true);
  }
  return out;
}

void write_raw_depth(const fs::path& path, const Grid<double>& values) {
  std::vector<std::uint8_t> bytes(values.size() * 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const float v = to_host(static_cast<float>(values[i]), true);
    std::memcpy(bytes.data() + 4 * i, &v, 4);
  }
  write_bytes(path, bytes);
  fs::path sidecar = path;
  sidecar += ".json";
  write_text(sidecar,
             nlohmann::json{{"width", values.width()}, {"height", values.height()}}.dump() + "\n");
}

synthesis::DepthMap read_depth(const fs::path& path) {
  if (path.extension() == ".pfm") return synthesis::DepthMap(read_pfm(path));
  return synthesis::DepthMap(read_raw_depth(path));
}

}  // namespace camflow::io
