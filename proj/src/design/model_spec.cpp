#include "windlasso/design/model_spec.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "windlasso/core/errors.hpp"

namespace windlasso {

void ModelSpec::validate() const {
    if (mean_lags < 1 || pos_shock_lags < 1 || neg_shock_lags < 1) {
        throw InvalidValueError("lag counts must be >= 1");
    }
    if (diurnal_count < 4 || annual_count < 4) {
        throw InvalidValueError("spline counts must be >= 4 (cubic basis)");
    }
    if (diurnal_period < diurnal_count || annual_period < annual_count) {
        throw InvalidValueError("spline period shorter than its knot count");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidValueError("alpha must lie in [0, 1]");
    }
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        if (lambda_grid[i] <= 0.0) throw InvalidValueError("lambda grid must be positive");
        if (i > 0 && lambda_grid[i] >= lambda_grid[i - 1]) {
            throw InvalidValueError("lambda grid must be strictly descending");
        }
    }
    if (lambda_grid.empty()) {
        if (lambda_count < 1) throw InvalidValueError("lambda_count must be >= 1");
        if (!(lambda_min_ratio > 0.0 && lambda_min_ratio < 1.0)) {
            throw InvalidValueError("lambda_min_ratio must lie in (0, 1)");
        }
    }
    if (cd_tol <= 0.0) throw InvalidValueError("cd_tol must be positive");
    if (cd_max_sweeps < 1) throw InvalidValueError("cd_max_sweeps must be >= 1");
    if (irw_tol <= 0.0) throw InvalidValueError("irw_tol must be positive");
    if (irw_max_iter < 1) throw InvalidValueError("irw_max_iter must be >= 1");
    for (int lag : lag_subset) {
        if (lag < 1 || lag > mean_lags) {
            throw InvalidValueError("lag_subset entry " + std::to_string(lag) +
                                    " outside 1.." + std::to_string(mean_lags));
        }
    }
}

std::vector<int> ModelSpec::active_mean_lags() const {
    if (!lag_subset.empty()) {
        std::vector<int> lags = lag_subset;
        std::sort(lags.begin(), lags.end());
        lags.erase(std::unique(lags.begin(), lags.end()), lags.end());
        return lags;
    }
    std::vector<int> lags(static_cast<std::size_t>(mean_lags));
    std::iota(lags.begin(), lags.end(), 1);
    return lags;
}

int ModelSpec::min_history() const {
    const auto lags = active_mean_lags();
    const int max_mean = lags.empty() ? 0 : lags.back();
    return std::max({max_mean, pos_shock_lags, neg_shock_lags});
}

}  // namespace windlasso
