#pragma once

#include <cstdint>
#include <vector>

namespace windlasso {

/**
 * Structural hyperparameters of the periodic VARX mean / threshold-ARCH
 * variance model and of its penalized estimation.
 *
 * Defaults follow the production configuration: two days of 10-minute lags
 * in both parts, daily and yearly spline periods. Desk-scale runs shrink the
 * lag set through `lag_subset` and the spline periods through the period
 * fields.
 */
struct ModelSpec {
    int mean_lags = 289;       // J: autoregressive depth of the mean part
    int pos_shock_lags = 289;  // P: positive-shock depth of the variance part
    int neg_shock_lags = 289;  // Q: negative-shock depth

    int diurnal_count = 6;   // k1 basis functions on the daily cycle
    int annual_count = 4;    // k2 basis functions on the yearly cycle
    std::int64_t diurnal_period = 144;
    std::int64_t annual_period = 52560;

    double alpha = 1.0;                // 1 = lasso, 0 = ridge, between = elastic net
    std::vector<double> lambda_grid;   // explicit descending grid; empty = automatic
    int lambda_count = 100;
    double lambda_min_ratio = 1e-4;

    double cd_tol = 1e-7;
    int cd_max_sweeps = 10000;

    double irw_tol = 1e-3;   // RMS change of the sigma path that counts as converged
    int irw_max_iter = 10;

    /// Active mean lags; empty means the full range 1..mean_lags.
    std::vector<int> lag_subset;

    /// Throws InvalidValueError when any field is out of range.
    void validate() const;

    std::vector<int> active_mean_lags() const;

    /// First usable row index: max over active mean lags and shock depths.
    int min_history() const;
};

}  // namespace windlasso
