#pragma once

#include <string>

#include "windlasso/model/fitted_model.hpp"

namespace windlasso {

/**
 * Versioned model persistence.
 *
 * The format is JSON with sorted keys and shortest round-trip number
 * encoding, so saving the same model twice yields byte-identical files and a
 * reloaded model reproduces forecasts bit-exactly. Only structure is stored
 * (spec, labels, sparse coefficients, convergence metadata); in-sample
 * residual and sigma paths are recomputed from data on demand.
 */
std::string fitted_model_to_json(const FittedModel& model, const std::string& config_hash = "");

FittedModel fitted_model_from_json(const std::string& text);

void save_fitted_model(const FittedModel& model, const std::string& path,
                       const std::string& config_hash = "");

FittedModel load_fitted_model(const std::string& path);

}  // namespace windlasso
