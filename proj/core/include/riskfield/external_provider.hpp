#pragma once

#include "riskfield/perception.hpp"
#include "riskfield/scene.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace riskfield {

/// One perception query as handed to an external provider process: the scene
/// snapshot, the motorcycle state context (v, phi), the prompt text (passed
/// through verbatim), and the camera description.
struct PerceptionRequest {
  std::string prompt;
  double v{0.0};
  double phi{0.0};
  CameraModel camera;
  std::vector<Hazard> hazards;
};

/// Provider invocation descriptor. `command` is executed as
/// `command <workdir>` and must write response.json (plus mask sidecars) into
/// the work directory; an empty command means the response is already staged.
struct ExternalEndpoint {
  std::string command;
  std::filesystem::path workdir;
  double timeout_s{30.0};
};

/// Writes request.json (and creates the directory if needed).
void write_request(const PerceptionRequest& request, const std::filesystem::path& dir);

/// Parses request.json; used by provider implementations such as the bundled
/// echo provider. Throws ProtocolError.
PerceptionRequest read_request(const std::filesystem::path& dir);

/// Writes response.json with one PGM mask sidecar per detection.
void write_response(std::span<const HazardDetection> detections,
                    const std::filesystem::path& dir);

/// Parses and validates response.json. Masks may be PGM sidecar references or
/// inline run-length encodings. Pass expected dimensions of 0 to accept the
/// declared ones. Throws ProtocolError naming the offending detection/file.
std::vector<HazardDetection> read_response(const std::filesystem::path& dir,
                                           int expected_width, int expected_height);

/// Full exchange: write request, invoke the provider, read the response.
/// Throws ProtocolError on malformed responses or timeout.
std::vector<HazardDetection> external_perceive(const PerceptionRequest& request,
                                               const ExternalEndpoint& endpoint);

class ExternalProvider final : public PerceptionProvider {
 public:
  ExternalProvider(ExternalEndpoint endpoint, std::string prompt)
      : endpoint_(std::move(endpoint)), prompt_(std::move(prompt)) {}

  std::vector<HazardDetection> perceive(const Scenario& scenario, const CameraModel& camera,
                                        const MotorcycleState& state) override;

 private:
  ExternalEndpoint endpoint_;
  std::string prompt_;
};

/// Episodes get distinct exchange subdirectories (ep_<seed>) under the
/// endpoint's work directory, so parallel trials never collide.
ProviderFactory external_provider_factory(ExternalEndpoint endpoint, std::string prompt);

}  // namespace riskfield
