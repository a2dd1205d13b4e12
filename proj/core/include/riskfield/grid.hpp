#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace riskfield {

/// Row-major H x W grid aligned with image coordinates: at(row n, col m).
template <typename T>
struct ImageGrid {
  int width{0};
  int height{0};
  std::vector<T> data;

  ImageGrid() = default;
  ImageGrid(int w, int h, T fill = T{})
      : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  T& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  const T& at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height && col >= 0 && col < width;
  }
  bool same_shape(const ImageGrid& other) const {
    return width == other.width && height == other.height;
  }
  std::size_t size() const { return data.size(); }

  bool operator==(const ImageGrid&) const = default;
};

/// Binary segmentation mask, values 0/1.
using Mask = ImageGrid<std::uint8_t>;

inline int mask_area(const Mask& mask) {
  int count = 0;
  for (std::uint8_t v : mask.data) {
    count += (v != 0);
  }
  return count;
}

}  // namespace riskfield
