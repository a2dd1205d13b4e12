#pragma once

#include "riskfield/grid.hpp"
#include "riskfield/params.hpp"
#include "riskfield/scene.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace riskfield {

/// One provider-reported hazard: semantics (label, scores, depth) plus the
/// binary segmentation mask aligned with the camera image.
struct HazardDetection {
  std::string hazard_id;
  std::string label;
  double c_vlm{0.0};       // contextual score in [0, 1]
  double confidence{0.0};  // detection confidence in [0, 1]
  double depth_m{0.0};     // depth deviation [m]
  Mask mask;
};

/// Throws ValidationError on out-of-range scores or mask dimension mismatch.
void validate_detection(const HazardDetection& det, int width, int height);

/// Ground-truth provider: one detection per visible hazard, masks rasterized
/// from footprints, c_vlm = base_context_score, confidence = 1. Hazards whose
/// mask comes out empty are omitted.
std::vector<HazardDetection> oracle_perceive(const Scenario& scenario,
                                             const CameraModel& camera,
                                             const MotorcycleState& state);

/// Oracle output perturbed deterministically by `seed`: per-hazard dropout,
/// clamped gaussian noise on c_vlm and confidence, and mask morphology.
std::vector<HazardDetection> noisy_perceive(const Scenario& scenario,
                                            const CameraModel& camera,
                                            const MotorcycleState& state,
                                            const NoiseParams& noise,
                                            std::uint64_t seed);

/// Square-kernel dilation (radius > 0) or erosion (radius < 0); 0 is identity.
Mask morph_mask(const Mask& mask, int radius);

/// Episode-level perception adapter. perceive() runs once per scene; the
/// simulator re-renders masks from the scene snapshot each frame while the
/// detection semantics stay frozen.
class PerceptionProvider {
 public:
  virtual ~PerceptionProvider() = default;

  virtual std::vector<HazardDetection> perceive(const Scenario& scenario,
                                                const CameraModel& camera,
                                                const MotorcycleState& state) = 0;

  /// Re-render the mask of a previously detected hazard from a new viewpoint.
  virtual Mask render_mask(const Hazard& hazard, const CameraModel& camera) const;
};

class OracleProvider final : public PerceptionProvider {
 public:
  std::vector<HazardDetection> perceive(const Scenario& scenario, const CameraModel& camera,
                                        const MotorcycleState& state) override;
};

class NoisyProvider final : public PerceptionProvider {
 public:
  NoisyProvider(NoiseParams noise, std::uint64_t seed) : noise_(noise), seed_(seed) {}

  std::vector<HazardDetection> perceive(const Scenario& scenario, const CameraModel& camera,
                                        const MotorcycleState& state) override;
  Mask render_mask(const Hazard& hazard, const CameraModel& camera) const override;

 private:
  NoiseParams noise_;
  std::uint64_t seed_;
};

/// Builds a fresh provider for one episode from the episode seed.
using ProviderFactory =
    std::function<std::unique_ptr<PerceptionProvider>(std::uint64_t episode_seed)>;

ProviderFactory oracle_provider_factory();
ProviderFactory noisy_provider_factory(NoiseParams noise);

}  // namespace riskfield
