#include "complab/serialization.hpp"

namespace complab {

using nlohmann::json;

MeasurementModel ScenarioConfig::resolve_model() const {
    if (model.has_value() == young.has_value()) {
        throw std::invalid_argument(
            "scenario: exactly one of an explicit model or interferometer angles "
            "must be given");
    }
    if (model) return *model;
    return gammas_from_angles(*young);
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument(std::string(what) +
                                    ": expected an array of 3 numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json to_json(const MeasurementModel& m) {
    json j{{"gamma_x", m.gamma_x()},
           {"gamma_z", m.gamma_z()},
           {"gamma_xz", m.gamma_xz()},
           {"n", to_json(m.n().vec())}};
    if (!m.has_default_axes()) {
        j["axis_x"] = to_json(m.axis_x().vec());
        j["axis_z"] = to_json(m.axis_z().vec());
    }
    return j;
}

MeasurementModel model_from_json(const json& j) {
    const double gx = j.at("gamma_x").get<double>();
    const double gz = j.at("gamma_z").get<double>();
    const double gxz = j.at("gamma_xz").get<double>();
    const Direction n{vec3_from_json(j.at("n"), "model.n")};
    if (j.contains("axis_x") || j.contains("axis_z")) {
        const Direction ax{vec3_from_json(j.at("axis_x"), "model.axis_x")};
        const Direction az{vec3_from_json(j.at("axis_z"), "model.axis_z")};
        return {gx, gz, gxz, n, ax, az};
    }
    return {gx, gz, gxz, n};
}

json to_json(const InequalityReport& r) {
    return {{"four_values", r.four_values},
            {"margin_upper", r.margin_upper},
            {"margin_lower", r.margin_lower},
            {"verdict", to_string(r.verdict)}};
}

json to_json(const EmpiricalCounts& c) {
    return {{"n_pp", c.at(+1, +1)}, {"n_pm", c.at(+1, -1)}, {"n_mp", c.at(-1, +1)},
            {"n_mm", c.at(-1, -1)}, {"N", c.total},         {"seed", c.seed}};
}

EmpiricalCounts counts_from_json(const json& j) {
    EmpiricalCounts c;
    c.counts = {j.at("n_pp").get<std::uint64_t>(), j.at("n_pm").get<std::uint64_t>(),
                j.at("n_mp").get<std::uint64_t>(), j.at("n_mm").get<std::uint64_t>()};
    c.total = j.at("N").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

namespace {

json to_json(const MomentEstimate& e) {
    return {{"value", e.value}, {"std_error", e.std_error}};
}

json to_json(const MarginEstimate& e) {
    return {{"value", e.value}, {"std_error", e.std_error}, {"z_score", e.z_score}};
}

}  // namespace

json to_json(const EstimatedReport& r) {
    return {{"estimates",
             {{"mean_x", to_json(r.mean_x)},
              {"mean_z", to_json(r.mean_z)},
              {"corr_xz", to_json(r.corr_xz)}}},
            {"margins",
             {{"upper", to_json(r.margin_upper)}, {"lower", to_json(r.margin_lower)}}},
            {"verdict", to_string(r.verdict)},
            {"verdict_confident", r.verdict_confident},
            {"confidence_sigmas", r.confidence_sigmas}};
}

json to_json(const ScenarioConfig& c) {
    json j{{"state", to_json(c.state)}};
    if (c.model) j["model"] = to_json(*c.model);
    if (c.young) j["young"] = {{"theta", c.young->theta()}, {"phi", c.young->phi()}};
    if (c.verdict_tolerance != verdict_tol) j["verdict_tol"] = c.verdict_tolerance;
    return j;
}

ScenarioConfig scenario_from_json(const json& j) {
    ScenarioConfig c{.state = vec3_from_json(j.at("state"), "state"),
                     .model = std::nullopt,
                     .young = std::nullopt};
    if (j.contains("model") && j.contains("young")) {
        throw std::invalid_argument(
            "scenario: give either \"model\" or \"young\", not both");
    }
    if (j.contains("model")) {
        c.model = model_from_json(j.at("model"));
    } else if (j.contains("young")) {
        c.young = YoungSetting(j.at("young").at("theta").get<double>(),
                               j.at("young").at("phi").get<double>());
    } else {
        throw std::invalid_argument("scenario: missing \"model\" or \"young\"");
    }
    if (j.contains("verdict_tol")) {
        c.verdict_tolerance = j.at("verdict_tol").get<double>();
    }
    return c;
}

}  // namespace complab
