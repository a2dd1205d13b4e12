#pragma once

// JSON bindings for scenario documents, provider exchanges, and result
// reports. Requires the nlohmann/json single header on the include path.

#include "riskfield/params.hpp"
#include "riskfield/perception.hpp"
#include "riskfield/scene.hpp"
#include "riskfield/simulator.hpp"

#include <json.hpp>

namespace riskfield {

using Json = nlohmann::json;

// --- params ---------------------------------------------------------------

void to_json(Json& j, const RiskParams& p);
void from_json(const Json& j, RiskParams& p);

void to_json(Json& j, const PlannerParams& p);
void from_json(const Json& j, PlannerParams& p);

void to_json(Json& j, const NoiseParams& p);
void from_json(const Json& j, NoiseParams& p);

void to_json(Json& j, const TrialParams& p);
void from_json(const Json& j, TrialParams& p);

// --- scene ----------------------------------------------------------------

void to_json(Json& j, const MotorcycleState& s);
void from_json(const Json& j, MotorcycleState& s);

void to_json(Json& j, const Intrinsics& k);
void from_json(const Json& j, Intrinsics& k);

void to_json(Json& j, const CameraMount& m);
void from_json(const Json& j, CameraMount& m);

void to_json(Json& j, const CameraRig& rig);
void from_json(const Json& j, CameraRig& rig);

void to_json(Json& j, const RoadCorridor& road);
void from_json(const Json& j, RoadCorridor& road);

void to_json(Json& j, const Hazard& h);
void from_json(const Json& j, Hazard& h);

/// Camera with the full world-to-camera transform (16 numbers, row-major).
void to_json(Json& j, const CameraModel& cam);
void from_json(const Json& j, CameraModel& cam);

void to_json(Json& j, const Scenario& s);
void from_json(const Json& j, Scenario& s);

// --- simulator ------------------------------------------------------------

void to_json(Json& j, const EpisodeResult& r);  // omits the trajectory (CSV output)
void to_json(Json& j, const TrialResult& r);
void to_json(Json& j, const BatchMetrics& m);
void to_json(Json& j, const BatchCell& c);

}  // namespace riskfield
