#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "camflow/grid.hpp"
#include "camflow/synthesis.hpp"

namespace camflow::io {

namespace fs = std::filesystem;

std::vector<std::uint8_t> read_bytes(const fs::path& path);
std::string read_text(const fs::path& path);
void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes);
void write_text(const fs::path& path, const std::string& text);

/// 8-bit PNG. Gray, gray+alpha, RGB and RGBA inputs are accepted; palette and
/// 16-bit images are expanded/stripped to 8 bits. Values map to [0, 1].
Image read_png(const fs::path& path);

/// Writes 1, 3 or 4 channel images as 8-bit PNG, round(clamp(v, 0, 1) * 255).
void write_png(const fs::path& path, const Image& image);

/// Single-channel 8-bit PNG straight from bytes.
void write_png_gray(const fs::path& path, const Grid<std::uint8_t>& values);

/// Object mask from an 8-bit PNG: any nonzero sample in the first channel = 1.
synthesis::ObjectMask read_mask_png(const fs::path& path);

/// Grayscale PFM ("Pf"). Rows are stored bottom-to-top; a negative scale
/// means little-endian, positive big-endian.
Grid<double> read_pfm(const fs::path& path);
void write_pfm(const fs::path& path, const Grid<double>& values);

/// Raw little-endian float32 grid with a JSON sidecar `<path>.json`
/// holding {"width": W, "height": H}.
Grid<double> read_raw_depth(const fs::path& path);
void write_raw_depth(const fs::path& path, const Grid<double>& values);

/// Dispatches on extension: .pfm -> PFM, anything else -> raw + sidecar.
synthesis::DepthMap read_depth(const fs::path& path);

}  // namespace camflow::io
