#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace windlasso {

/// sign(z) * max(|z| - gamma, 0); the scalar lasso update kernel.
inline double soft_threshold(double z, double gamma) {
    if (z > gamma) return z - gamma;
    if (z < -gamma) return z + gamma;
    return 0.0;
}

/**
 * One penalized weighted least-squares problem.
 *
 * Objective, for descending lambda values:
 *
 *   sum_t w_t (y_t - x_t' b)^2
 *     + lambda * alpha * sum_{j penalized} |b_j|
 *     + (lambda / 2) * (1 - alpha) * sum_{j penalized} b_j^2
 *
 * The residual sum is not divided by n; lambda values and the reported
 * lambda_max follow the same convention.
 *
 * The design is referenced, never copied, so one matrix can serve many
 * equations (responses and weights differ per equation). When `standardize`
 * is set, non-intercept columns are implicitly centered and scaled to unit
 * weighted variance inside the solver, the penalty applies to the scaled
 * coefficients, and results are mapped back to the original column scales; a
 * constant unpenalized column must then be present to absorb the centering.
 * `penalize` left empty marks constant columns exempt and everything else
 * penalized.
 */
struct ShrinkageProblem {
    const Eigen::MatrixXd* design = nullptr;
    Eigen::VectorXd y;
    Eigen::VectorXd weights;               // empty = unit weights
    double alpha = 1.0;
    std::vector<double> lambda_grid;       // empty = automatic path
    std::vector<std::uint8_t> penalize;    // empty = constant columns exempt
    double cd_tol = 1e-7;
    int max_sweeps = 10000;
    int lambda_count = 100;
    double lambda_min_ratio = 1e-4;
    bool standardize = true;
    bool check_objective = false;          // assert per-sweep objective descent
};

struct PathResult {
    std::vector<double> lambdas;
    Eigen::MatrixXd coefficients;      // p x n_lambda, original scale
    std::vector<int> df;               // nonzero coefficients per lambda
    std::vector<double> weighted_rss;
    std::vector<double> aic;           // filled by select_by_aic
    int chosen = -1;
    int total_sweeps = 0;

    int n_lambda() const { return static_cast<int>(lambdas.size()); }
};

/// Smallest lambda at which every penalized coefficient is exactly zero.
double compute_lambda_max(const ShrinkageProblem& problem);

/// Cyclic coordinate descent over the lambda path with warm starts.
/// Throws ConvergenceError if a lambda exceeds max_sweeps.
PathResult fit_path(const ShrinkageProblem& problem);

/// Picks the lambda minimizing n*ln(wRSS/n) + 2*df; ties go to the sparser
/// (larger lambda) model. Sets path.chosen and returns those coefficients.
Eigen::VectorXd select_by_aic(PathResult& path, std::int64_t n);

/// Diagnostics export: lambda, df, rss, aic rows.
void write_path_csv(const PathResult& path, std::ostream& out);

}  // namespace windlasso
