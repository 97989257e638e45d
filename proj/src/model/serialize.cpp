#include "windlasso/model/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "windlasso/core/errors.hpp"

namespace windlasso {

using nlohmann::json;

namespace {

json spec_to_json(const ModelSpec& spec) {
    json j;
    j["mean_lags"] = spec.mean_lags;
    j["pos_shock_lags"] = spec.pos_shock_lags;
    j["neg_shock_lags"] = spec.neg_shock_lags;
    j["diurnal_count"] = spec.diurnal_count;
    j["annual_count"] = spec.annual_count;
    j["diurnal_period"] = spec.diurnal_period;
    j["annual_period"] = spec.annual_period;
    j["alpha"] = spec.alpha;
    j["lambda_grid"] = spec.lambda_grid;
    j["lambda_count"] = spec.lambda_count;
    j["lambda_min_ratio"] = spec.lambda_min_ratio;
    j["cd_tol"] = spec.cd_tol;
    j["cd_max_sweeps"] = spec.cd_max_sweeps;
    j["irw_tol"] = spec.irw_tol;
    j["irw_max_iter"] = spec.irw_max_iter;
    j["lag_subset"] = spec.lag_subset;
    return j;
}

ModelSpec spec_from_json(const json& j) {
    ModelSpec spec;
    spec.mean_lags = j.at("mean_lags").get<int>();
    spec.pos_shock_lags = j.at("pos_shock_lags").get<int>();
    spec.neg_shock_lags = j.at("neg_shock_lags").get<int>();
    spec.diurnal_count = j.at("diurnal_count").get<int>();
    spec.annual_count = j.at("annual_count").get<int>();
    spec.diurnal_period = j.at("diurnal_period").get<std::int64_t>();
    spec.annual_period = j.at("annual_period").get<std::int64_t>();
    spec.alpha = j.at("alpha").get<double>();
    spec.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
    spec.lambda_count = j.at("lambda_count").get<int>();
    spec.lambda_min_ratio = j.at("lambda_min_ratio").get<double>();
    spec.cd_tol = j.at("cd_tol").get<double>();
    spec.cd_max_sweeps = j.at("cd_max_sweeps").get<int>();
    spec.irw_tol = j.at("irw_tol").get<double>();
    spec.irw_max_iter = j.at("irw_max_iter").get<int>();
    spec.lag_subset = j.at("lag_subset").get<std::vector<int>>();
    return spec;
}

json coefficients_to_json(const SparseCoefficients& coef) {
    json labels = json::array();
    json values = json::array();
    for (std::size_t i = 0; i < coef.size(); ++i) {
        labels.push_back(to_string(coef.labels[i]));
        values.push_back(coef.values[i]);
    }
    return json{{"labels", std::move(labels)}, {"values", std::move(values)}};
}

SparseCoefficients coefficients_from_json(const json& j) {
    SparseCoefficients coef;
    const auto& labels = j.at("labels");
    const auto& values = j.at("values");
    if (labels.size() != values.size()) {
        throw ParseError("coefficient labels and values differ in length");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        coef.labels.push_back(parse_column_label(labels[i].get<std::string>()));
        coef.values.push_back(values[i].get<double>());
    }
    return coef;
}

void put_finite(json& j, const char* key, double value) {
    if (std::isfinite(value)) j[key] = value;
}

double get_or_nan(const json& j, const char* key) {
    if (j.contains(key) && j.at(key).is_number()) return j.at(key).get<double>();
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string fitted_model_to_json(const FittedModel& model, const std::string& config_hash) {
    json j;
    j["format"] = "windlasso-model/1";
    j["model_type"] = "svarx_tarchx";
    j["method"] = model.method;
    if (!config_hash.empty()) j["config_hash"] = config_hash;
    j["spec"] = spec_to_json(model.spec);
    j["station_count"] = model.station_count;
    j["iterations_used"] = model.iterations_used;
    put_finite(j, "final_delta", model.final_delta);
    j["converged"] = model.converged;
    j["delta_history"] = model.delta_history;
    json equations = json::array();
    for (const auto& eq : model.equations) {
        json e;
        e["target"] = to_string(eq.target);
        e["mean"] = coefficients_to_json(eq.mean_coefficients);
        e["variance"] = coefficients_to_json(eq.variance_coefficients);
        e["sigma_floor"] = eq.sigma_floor;
        put_finite(e, "lambda_mean", eq.lambda_mean);
        put_finite(e, "lambda_variance", eq.lambda_variance);
        equations.push_back(std::move(e));
    }
    j["equations"] = std::move(equations);
    return j.dump(2) + "\n";
}

FittedModel fitted_model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (j.value("format", "") != "windlasso-model/1") {
        throw ParseError("unsupported model format '" + j.value("format", "") + "'");
    }
    if (j.value("model_type", "") != "svarx_tarchx") {
        throw ParseError("model file holds a '" + j.value("model_type", "") +
                         "' model, expected svarx_tarchx");
    }
    FittedModel model;
    model.method = j.value("method", "lasso");
    model.spec = spec_from_json(j.at("spec"));
    model.station_count = j.at("station_count").get<int>();
    model.iterations_used = j.at("iterations_used").get<int>();
    model.final_delta = get_or_nan(j, "final_delta");
    model.converged = j.at("converged").get<bool>();
    model.delta_history = j.value("delta_history", std::vector<double>{});
    for (const auto& e : j.at("equations")) {
        FittedEquation eq;
        eq.target = parse_variable_ref(e.at("target").get<std::string>());
        eq.mean_coefficients = coefficients_from_json(e.at("mean"));
        eq.variance_coefficients = coefficients_from_json(e.at("variance"));
        eq.sigma_floor = e.at("sigma_floor").get<double>();
        eq.lambda_mean = get_or_nan(e, "lambda_mean");
        eq.lambda_variance = get_or_nan(e, "lambda_variance");
        model.equations.push_back(std::move(eq));
    }
    const int expected = model.station_count * kVarKinds;
    if (model.equation_count() != expected) {
        throw ParseError("model file holds " + std::to_string(model.equation_count()) +
                         " equations, expected " + std::to_string(expected));
    }
    return model;
}

void save_fitted_model(const FittedModel& model, const std::string& path,
                       const std::string& config_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << fitted_model_to_json(model, config_hash);
}

FittedModel load_fitted_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return fitted_model_from_json(buffer.str());
}

}  // namespace windlasso
