#pragma once

#include "riskfield/grid.hpp"
#include "riskfield/projection.hpp"
#include "riskfield/riskmap.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace riskfield {

struct Rgb {
  std::uint8_t r{0}, g{0}, b{0};
};

/// Interleaved 8-bit RGB raster.
struct RgbImage {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> data;  // 3 bytes per pixel, row-major

  RgbImage() = default;
  RgbImage(int w, int h, Rgb fill = {});
  void set(int row, int col, Rgb c);
  Rgb get(int row, int col) const;
};

/// 256-entry false-color ramp (black -> red -> yellow -> white):
///   r = min(255, 3i), g = clamp(3i - 255), b = clamp(3i - 510).
Rgb risk_color(int level);

/// Binary PGM (P5, maxval 255): 0 stays 0, set pixels become 255.
void write_pgm(const Mask& mask, const std::filesystem::path& path);

/// Grayscale PGM with the linear mapping [0, c_max] -> [0, 255].
void write_pgm(const RiskMap& risk, const std::filesystem::path& path);

/// Reads a P5 PGM as a binary mask (any nonzero sample counts as set).
/// Throws ProtocolError on malformed files.
Mask read_pgm_mask(const std::filesystem::path& path);

void write_ppm(const RgbImage& image, const std::filesystem::path& path);

/// False-color rendering of the risk map through risk_color().
RgbImage render_risk_image(const RiskMap& risk);

/// Stamps 3x3 blocks at every valid sample.
void draw_samples(RgbImage& image, std::span<const PixelSample> samples, Rgb color);

}  // namespace riskfield
