#include "riskfield/image_io.hpp"

#include "riskfield/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

namespace riskfield {

namespace {

void write_binary(const std::filesystem::path& path, const std::string& header,
                  const std::uint8_t* bytes, std::size_t count) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open image file for writing: " + path.string());
  }
  out << header;
  out.write(reinterpret_cast<const char*>(bytes), static_cast<std::streamsize>(count));
  if (!out) {
    throw ValidationError("failed writing image file: " + path.string());
  }
}

// Reads one whitespace/comment-delimited PNM header token.
std::string next_token(std::istream& in) {
  std::string token;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) {
        break;
      }
      continue;
    }
    token.push_back(c);
  }
  return token;
}

}  // namespace

RgbImage::RgbImage(int w, int h, Rgb fill) : width(w), height(h) {
  data.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < data.size(); i += 3) {
    data[i] = fill.r;
    data[i + 1] = fill.g;
    data[i + 2] = fill.b;
  }
}

void RgbImage::set(int row, int col, Rgb c) {
  const std::size_t i = (static_cast<std::size_t>(row) * width + col) * 3;
  data[i] = c.r;
  data[i + 1] = c.g;
  data[i + 2] = c.b;
}

Rgb RgbImage::get(int row, int col) const {
  const std::size_t i = (static_cast<std::size_t>(row) * width + col) * 3;
  return Rgb{data[i], data[i + 1], data[i + 2]};
}

Rgb risk_color(int level) {
  const int i = std::clamp(level, 0, 255);
  auto band = [](int x) { return static_cast<std::uint8_t>(std::clamp(x, 0, 255)); };
  return Rgb{band(3 * i), band(3 * i - 255), band(3 * i - 510)};
}

void write_pgm(const Mask& mask, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes(mask.data.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = mask.data[i] != 0 ? 255 : 0;
  }
  const std::string header =
      "P5\n" + std::to_string(mask.width) + " " + std::to_string(mask.height) + "\n255\n";
  write_binary(path, header, bytes.data(), bytes.size());
}

void write_pgm(const RiskMap& risk, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes(risk.values.data.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const double scaled = risk.values.data[i] / risk.c_max * 255.0;
    bytes[i] = static_cast<std::uint8_t>(std::clamp<long>(std::lround(scaled), 0, 255));
  }
  const std::string header =
      "P5\n" + std::to_string(risk.width()) + " " + std::to_string(risk.height()) + "\n255\n";
  write_binary(path, header, bytes.data(), bytes.size());
}

Mask read_pgm_mask(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ProtocolError("mask file missing: " + path.string());
  }
  if (next_token(in) != "P5") {
    throw ProtocolError("mask file is not binary PGM (P5): " + path.string());
  }
  int width = 0;
  int height = 0;
  int maxval = 0;
  try {
    width = std::stoi(next_token(in));
    height = std::stoi(next_token(in));
    maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    throw ProtocolError("mask file has a malformed header: " + path.string());
  }
  if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 255) {
    throw ProtocolError("mask file has invalid dimensions or maxval: " + path.string());
  }
  std::vector<char> raw(static_cast<std::size_t>(width) * height);
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw ProtocolError("mask file truncated: " + path.string());
  }
  Mask mask(width, height, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    mask.data[i] = raw[i] != 0 ? 1 : 0;
  }
  return mask;
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) {
  const std::string header =
      "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  write_binary(path, header, image.data.data(), image.data.size());
}

RgbImage render_risk_image(const RiskMap& risk) {
  RgbImage image(risk.width(), risk.height());
  for (int n = 0; n < risk.height(); ++n) {
    for (int m = 0; m < risk.width(); ++m) {
      const double scaled = risk.values.at(n, m) / risk.c_max * 255.0;
      const int level = static_cast<int>(std::clamp<long>(std::lround(scaled), 0, 255));
      image.set(n, m, risk_color(level));
    }
  }
  return image;
}

void draw_samples(RgbImage& image, std::span<const PixelSample> samples, Rgb color) {
  for (const PixelSample& s : samples) {
    if (!s.valid) {
      continue;
    }
    for (int dn = -1; dn <= 1; ++dn) {
      for (int dm = -1; dm <= 1; ++dm) {
        const int n = s.n + dn;
        const int m = s.m + dm;
        if (n >= 0 && n < image.height && m >= 0 && m < image.width) {
          image.set(n, m, color);
        }
      }
    }
  }
}

}  // namespace riskfield
