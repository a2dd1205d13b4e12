#include "riskfield/perception.hpp"

#include "riskfield/errors.hpp"
#include "riskfield/projection.hpp"
#include "riskfield/rng.hpp"

#include <algorithm>
#include <cmath>

namespace riskfield {

void validate_detection(const HazardDetection& det, int width, int height) {
  if (det.c_vlm < 0.0 || det.c_vlm > 1.0) {
    throw ValidationError("detection '" + det.hazard_id + "': c_vlm outside [0, 1]");
  }
  if (det.confidence < 0.0 || det.confidence > 1.0) {
    throw ValidationError("detection '" + det.hazard_id + "': confidence outside [0, 1]");
  }
  if (det.depth_m < 0.0) {
    throw ValidationError("detection '" + det.hazard_id + "': depth_m must be nonnegative");
  }
  if (det.mask.width != width || det.mask.height != height) {
    throw ValidationError("detection '" + det.hazard_id + "': mask dimensions mismatch");
  }
}

std::vector<HazardDetection> oracle_perceive(const Scenario& scenario,
                                             const CameraModel& camera,
                                             const MotorcycleState& /*state*/) {
  // The state (v, phi) is part of the query per the provider contract but the
  // oracle derives nothing from it.
  std::vector<HazardDetection> detections;
  for (const Hazard& hazard : scenario.hazards) {
    Mask mask = rasterize_footprint(hazard, camera);
    if (mask_area(mask) == 0) {
      continue;  // not visible from this pose
    }
    HazardDetection det;
    det.hazard_id = hazard.id;
    det.label = hazard.label;
    det.c_vlm = hazard.base_context_score;
    det.confidence = 1.0;
    det.depth_m = hazard.depth_m;
    det.mask = std::move(mask);
    detections.push_back(std::move(det));
  }
  return detections;
}

Mask morph_mask(const Mask& mask, int radius) {
  if (radius == 0) {
    return mask;
  }
  const bool dilate = radius > 0;
  const int r = std::abs(radius);
  // Separable running max (dilate) / min (erode) over a square kernel.
  auto pass = [&](const Mask& src, bool rows) {
    Mask out(src.width, src.height, 0);
    for (int n = 0; n < src.height; ++n) {
      for (int m = 0; m < src.width; ++m) {
        std::uint8_t v = dilate ? 0 : 1;
        for (int k = -r; k <= r; ++k) {
          const int nn = rows ? n : n + k;
          const int mm = rows ? m + k : m;
          // Out-of-bounds neighbors count as background.
          const std::uint8_t s = src.in_bounds(nn, mm) ? src.at(nn, mm) : 0;
          v = dilate ? std::max(v, s) : std::min(v, s);
        }
        out.at(n, m) = v;
      }
    }
    return out;
  };
  return pass(pass(mask, true), false);
}

std::vector<HazardDetection> noisy_perceive(const Scenario& scenario,
                                            const CameraModel& camera,
                                            const MotorcycleState& state,
                                            const NoiseParams& noise, std::uint64_t seed) {
  std::vector<HazardDetection> oracle = oracle_perceive(scenario, camera, state);
  std::vector<HazardDetection> detections;
  detections.reserve(oracle.size());
  for (std::size_t i = 0; i < scenario.hazards.size(); ++i) {
    // One RNG substream per hazard index keeps draws independent of which
    // hazards happen to be visible.
    std::mt19937_64 rng = make_rng(seed, i + 1);
    const double drop = uniform_unit(rng);
    const double cvlm_offset = gaussian(rng) * noise.c_vlm_std;
    const double conf_offset = gaussian(rng) * noise.confidence_std;
    if (drop < noise.dropout_prob) {
      continue;
    }
    const std::string& id = scenario.hazards[i].id;
    auto it = std::find_if(oracle.begin(), oracle.end(),
                           [&](const HazardDetection& d) { return d.hazard_id == id; });
    if (it == oracle.end()) {
      continue;  // hazard not visible
    }
    HazardDetection det = *it;
    det.c_vlm = std::clamp(det.c_vlm + cvlm_offset, 0.0, 1.0);
    det.confidence = std::clamp(det.confidence + conf_offset, 0.0, 1.0);
    det.mask = morph_mask(det.mask, noise.mask_morph_radius);
    if (mask_area(det.mask) == 0) {
      continue;  // erosion can delete a small mask entirely
    }
    detections.push_back(std::move(det));
  }
  return detections;
}

Mask PerceptionProvider::render_mask(const Hazard& hazard, const CameraModel& camera) const {
  return rasterize_footprint(hazard, camera);
}

std::vector<HazardDetection> OracleProvider::perceive(const Scenario& scenario,
                                                      const CameraModel& camera,
                                                      const MotorcycleState& state) {
  return oracle_perceive(scenario, camera, state);
}

std::vector<HazardDetection> NoisyProvider::perceive(const Scenario& scenario,
                                                     const CameraModel& camera,
                                                     const MotorcycleState& state) {
  return noisy_perceive(scenario, camera, state, noise_, seed_);
}

Mask NoisyProvider::render_mask(const Hazard& hazard, const CameraModel& camera) const {
  return morph_mask(rasterize_footprint(hazard, camera), noise_.mask_morph_radius);
}

}  // namespace riskfield
