#include "riskfield/riskmap.hpp"

#include "riskfield/errors.hpp"

#include <algorithm>
#include <cmath>

namespace riskfield {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double area_score(const Mask& mask, const RiskParams& params) {
  const double total = static_cast<double>(mask.width) * static_cast<double>(mask.height);
  const double ratio = static_cast<double>(mask_area(mask)) / total;
  return logistic(params.kappa_a * (ratio - params.eta_a));
}

double depth_score(double depth_m, const RiskParams& params) {
  return std::min(1.0, depth_m / params.d_ref);
}

double confidence_score(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("confidence outside [0, 1]");
  }
  return p;
}

ImageGrid<double> hazard_cost_map(const HazardDetection& det, const RiskParams& params) {
  ImageGrid<double> cost(det.mask.width, det.mask.height, 0.0);
  // The four factor scores are constant across one detection's mask.
  const double c_area = area_score(det.mask, params);
  const double c_conf = confidence_score(det.confidence);
  const double c_depth = depth_score(det.depth_m, params);
  const double value =
      std::min(params.c_max, params.alpha_vlm * det.c_vlm + params.alpha_area * c_area +
                                 params.alpha_conf * c_conf + params.alpha_depth * c_depth);
  for (std::size_t i = 0; i < cost.data.size(); ++i) {
    if (det.mask.data[i] != 0) {
      cost.data[i] = value;
    }
  }
  return cost;
}

RiskMap fuse(std::span<const ImageGrid<double>> maps, int width, int height, double c_max) {
  RiskMap risk;
  risk.c_max = c_max;
  risk.values = ImageGrid<double>(width, height, 0.0);
  for (const ImageGrid<double>& m : maps) {
    if (m.width != width || m.height != height) {
      throw ValidationError("fuse: cost map dimensions mismatch");
    }
    for (std::size_t i = 0; i < risk.values.data.size(); ++i) {
      risk.values.data[i] = std::max(risk.values.data[i], m.data[i]);
    }
  }
  return risk;
}

RiskMap build_risk_map(std::span<const HazardDetection> detections, const RiskParams& params,
                       int width, int height) {
  std::vector<ImageGrid<double>> maps;
  maps.reserve(detections.size());
  for (const HazardDetection& det : detections) {
    maps.push_back(hazard_cost_map(det, params));
  }
  return fuse(maps, width, height, params.c_max);
}

}  // namespace riskfield
