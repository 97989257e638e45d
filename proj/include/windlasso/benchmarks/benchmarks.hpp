#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>

#include "windlasso/data/panel.hpp"

namespace windlasso {

/**
 * Comparison models: the naive persistence predictor, univariate AR(p) and
 * the full-vector VAR(p), both fitted by OLS with an intercept.
 */
struct BenchmarkModel {
    enum class Kind { Persistence, AR, VAR };

    Kind kind = Kind::Persistence;
    int order = 0;
    int station_count = 0;

    // AR part (single target series)
    VariableRef target{};
    Eigen::VectorXd ar_coefficients;  // [intercept, phi_1..phi_p]
    double ar_innovation_sd = 0.0;

    // VAR part (full dependent vector)
    Eigen::VectorXd var_intercept;       // V
    Eigen::MatrixXd var_coefficients;    // V x (V*p), blocks [A_1 ... A_p]
    Eigen::MatrixXd var_innovation_cov;  // V x V

    std::string tag() const;
};

BenchmarkModel make_persistence(int station_count);

/// OLS fit of an AR(p) with intercept. Needs length > 10*p observations;
/// singular normal equations raise RankError.
BenchmarkModel fit_ar(std::span<const double> series, int order, VariableRef target = {},
                      int station_count = 1);

/// Equation-by-equation OLS over the full dependent vector.
BenchmarkModel fit_var(const Panel& panel, int order);

/// Smallest AIC over order 1..max_order.
int choose_ar_order(std::span<const double> series, int max_order);
int choose_var_order(const Panel& panel, int max_order);

/// The naive forecast: every horizon repeats the origin's values.
/// Returns horizon x V, each row the panel row at the origin.
Eigen::MatrixXd persistence_forecast(const Panel& panel, std::int64_t origin, int horizon);

struct BenchmarkForecast {
    Eigen::MatrixXd point;  // horizon x V (AR fills only the target column)
    Eigen::MatrixXd sd;     // same shape; 0 where the model carries no spread
};

/// Recursive multi-step forecasts with forecast-error standard deviations
/// (AR: psi-weight accumulation; VAR: companion covariance recursion).
BenchmarkForecast forecast_benchmark(const BenchmarkModel& model, const Panel& panel,
                                     std::int64_t origin, int horizon);

/// Companion form of the AR/VAR dynamics (closed-form forecast cross-checks).
Eigen::MatrixXd companion_matrix(const BenchmarkModel& model);

std::string benchmark_to_json(const BenchmarkModel& model, const std::string& config_hash = "");
BenchmarkModel benchmark_from_json(const std::string& text);

/// First `rows` observations as a panel (fit ranges for benchmarks and fits).
Panel panel_head(const Panel& panel, std::int64_t rows);

}  // namespace windlasso
