// serialization.hpp
// JSON encodings for the CLI surface: measurement models, scenario configs,
// inequality reports, empirical counts, and estimate reports.

#pragma once

#include <optional>

#include <json.hpp>

#include "complab/classical.hpp"
#include "complab/measurement.hpp"
#include "complab/qubit.hpp"
#include "complab/sampling.hpp"
#include "complab/young.hpp"

namespace complab {

/// One scenario: a state plus exactly one measurement specification, either
/// an explicit model or interferometer angles.
struct ScenarioConfig {
    Vec3 state;
    std::optional<MeasurementModel> model;
    std::optional<YoungSetting> young;
    double verdict_tolerance = verdict_tol;

    BlochState bloch() const { return BlochState(state); }

    /// Resolves the measurement, converting angles when needed.
    MeasurementModel resolve_model() const;
};

nlohmann::json to_json(const Vec3& v);
Vec3 vec3_from_json(const nlohmann::json& j, const char* what);

/// {"gamma_x":..., "gamma_z":..., "gamma_xz":..., "n":[...]} with optional
/// "axis_x"/"axis_z" present only for non-default measurement axes.
nlohmann::json to_json(const MeasurementModel& m);
MeasurementModel model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InequalityReport& r);

nlohmann::json to_json(const EmpiricalCounts& c);
EmpiricalCounts counts_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EstimatedReport& r);

nlohmann::json to_json(const ScenarioConfig& c);
ScenarioConfig scenario_from_json(const nlohmann::json& j);

}  // namespace complab
