#pragma once

#include "riskfield/grid.hpp"
#include "riskfield/params.hpp"
#include "riskfield/perception.hpp"

#include <span>

namespace riskfield {

/// Dense per-pixel hazard severity aligned with the camera image; every value
/// lies in [0, c_max].
struct RiskMap {
  ImageGrid<double> values;
  double c_max{1.0};

  int width() const { return values.width; }
  int height() const { return values.height; }
};

double logistic(double x);

/// Sigmoid of the normalized mask area: logistic(kappa_a * (|M|/(H*W) - eta_a)).
double area_score(const Mask& mask, const RiskParams& params);

/// min(1, depth_m / d_ref).
double depth_score(double depth_m, const RiskParams& params);

/// Identity mapping of the detection confidence; rejects p outside [0, 1].
double confidence_score(double p);

/// Per-hazard cost grid: mask pixels carry the clamped weighted sum of the
/// four factor scores (computed once per detection), everything else is 0.
ImageGrid<double> hazard_cost_map(const HazardDetection& det, const RiskParams& params);

/// Pixel-wise maximum over hazard cost grids; an empty list yields a zero map
/// of the given dimensions. Throws ValidationError on dimension mismatch.
RiskMap fuse(std::span<const ImageGrid<double>> maps, int width, int height, double c_max);

/// Convenience: per-detection cost maps fused into the final risk map.
RiskMap build_risk_map(std::span<const HazardDetection> detections, const RiskParams& params,
                       int width, int height);

}  // namespace riskfield
