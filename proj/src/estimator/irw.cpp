#include "windlasso/estimator/irw.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/parallel.hpp"
#include "windlasso/design/design_matrix.hpp"
#include "windlasso/shrinkage/coordinate_descent.hpp"

namespace windlasso {

namespace {

constexpr double kSigmaFloorFactor = 1e-6;  // times the sd of the |residual| response

std::vector<std::uint8_t> penalize_all_but_first(int cols) {
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(cols), 1);
    flags[0] = 0;  // intercept
    return flags;
}

SparseCoefficients sparsify(const Eigen::VectorXd& beta,
                            const std::vector<ColumnLabel>& labels) {
    SparseCoefficients out;
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
        out.add(labels[static_cast<std::size_t>(j)], beta(j));
    }
    return out;
}

// y - X beta exploiting coefficient sparsity.
Eigen::VectorXd sparse_residual(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& beta) {
    Eigen::VectorXd r = y;
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
        if (beta(j) != 0.0) r -= X.col(j) * beta(j);
    }
    return r;
}

Eigen::VectorXd sparse_product(const Eigen::MatrixXd& X, const Eigen::VectorXd& beta) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(X.rows());
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
        if (beta(j) != 0.0) out += X.col(j) * beta(j);
    }
    return out;
}

double effective_alpha(const ModelSpec& spec, const std::string& method) {
    if (method == "lasso") return 1.0;
    if (method == "elastic_net") return spec.alpha;
    throw InvalidValueError("unknown estimation method '" + method +
                            "' (expected lasso or elastic_net)");
}

}  // namespace

FittedModel fit_irw(const Panel& panel, const ModelSpec& spec_in, const std::string& method,
                    const FitOptions& options) {
    ModelSpec spec = spec_in;
    spec.alpha = effective_alpha(spec_in, method);
    spec.validate();

    const int n_vars = panel.column_count();
    const std::int64_t first = spec.min_history();
    const DesignBlock mean_design = build_mean_design_matrix(panel, spec);
    const std::int64_t rows = mean_design.rows();

    std::vector<Eigen::VectorXd> responses(static_cast<std::size_t>(n_vars));
    for (int e = 0; e < n_vars; ++e) {
        responses[static_cast<std::size_t>(e)] =
            panel.values.col(e).segment(first, rows);
    }

    std::vector<Eigen::VectorXd> weights(static_cast<std::size_t>(n_vars),
                                         Eigen::VectorXd::Ones(rows));
    std::vector<std::vector<double>> mean_grids(static_cast<std::size_t>(n_vars),
                                                spec.lambda_grid);
    std::vector<std::vector<double>> variance_grids(static_cast<std::size_t>(n_vars),
                                                    spec.lambda_grid);

    std::vector<Eigen::VectorXd> mean_beta(static_cast<std::size_t>(n_vars));
    std::vector<Eigen::VectorXd> variance_beta(static_cast<std::size_t>(n_vars));
    std::vector<Eigen::VectorXd> sigma(static_cast<std::size_t>(n_vars));
    std::vector<Eigen::VectorXd> prev_sigma(static_cast<std::size_t>(n_vars));
    std::vector<double> lambda_mean(static_cast<std::size_t>(n_vars), 0.0);
    std::vector<double> lambda_variance(static_cast<std::size_t>(n_vars), 0.0);
    std::vector<double> sigma_floor(static_cast<std::size_t>(n_vars), 0.0);
    Eigen::MatrixXd residual_full;
    std::vector<ColumnLabel> variance_labels;

    std::vector<double> delta_history;
    bool converged = false;
    int iterations = 0;

    for (int pass = 1; pass <= spec.irw_max_iter; ++pass) {
        iterations = pass;

        // Mean equations, independently per target given the current weights.
        parallel_for(static_cast<std::size_t>(n_vars), options.workers, [&](std::size_t e) {
            ShrinkageProblem problem;
            problem.design = &mean_design.matrix;
            problem.y = responses[e];
            problem.weights = weights[e];
            problem.alpha = spec.alpha;
            problem.penalize = penalize_all_but_first(mean_design.cols());
            problem.cd_tol = spec.cd_tol;
            problem.max_sweeps = spec.cd_max_sweeps;
            problem.lambda_count = spec.lambda_count;
            problem.lambda_min_ratio = spec.lambda_min_ratio;
            problem.check_objective = options.check_objective;
            if (!mean_grids[e].empty()) problem.lambda_grid = mean_grids[e];
            PathResult path = fit_path(problem);
            if (mean_grids[e].empty()) mean_grids[e] = path.lambdas;
            mean_beta[e] = select_by_aic(path, rows);
            lambda_mean[e] = path.lambdas[static_cast<std::size_t>(path.chosen)];
        });

        // Residual matrix over the full panel; rows before the usable range
        // stay zero so early shock lags contribute nothing.
        residual_full = Eigen::MatrixXd::Zero(panel.rows(), n_vars);
        for (int e = 0; e < n_vars; ++e) {
            residual_full.col(e).segment(first, rows) = sparse_residual(
                mean_design.matrix, responses[static_cast<std::size_t>(e)],
                mean_beta[static_cast<std::size_t>(e)]);
        }

        const DesignBlock variance_design = build_variance_design_matrix(residual_full, spec);
        variance_labels = variance_design.labels;

        parallel_for(static_cast<std::size_t>(n_vars), options.workers, [&](std::size_t e) {
            const Eigen::VectorXd abs_resid =
                residual_full.col(static_cast<Eigen::Index>(e)).segment(first, rows).cwiseAbs();
            if ((abs_resid.array() == 0.0).all()) {
                throw DegenerateDataError(
                    "residuals of " + to_string(variable_at(static_cast<int>(e), n_vars / kVarKinds)) +
                    " are identically zero; variance fit is degenerate");
            }
            ShrinkageProblem problem;
            problem.design = &variance_design.matrix;
            problem.y = abs_resid;
            problem.alpha = spec.alpha;
            problem.penalize = penalize_all_but_first(variance_design.cols());
            problem.cd_tol = spec.cd_tol;
            problem.max_sweeps = spec.cd_max_sweeps;
            problem.lambda_count = spec.lambda_count;
            problem.lambda_min_ratio = spec.lambda_min_ratio;
            problem.check_objective = options.check_objective;
            if (!variance_grids[e].empty()) problem.lambda_grid = variance_grids[e];
            PathResult path = fit_path(problem);
            if (variance_grids[e].empty()) variance_grids[e] = path.lambdas;
            variance_beta[e] = select_by_aic(path, rows);
            lambda_variance[e] = path.lambdas[static_cast<std::size_t>(path.chosen)];

            // Linear scale model: floor the fitted path at a small positive
            // value so the re-weighting stays defined.
            const double mean_abs = abs_resid.mean();
            double sd = std::sqrt((abs_resid.array() - mean_abs).square().sum() /
                                  static_cast<double>(rows > 1 ? rows - 1 : 1));
            if (sd == 0.0) sd = mean_abs > 0.0 ? mean_abs : 1.0;
            const double floor = kSigmaFloorFactor * sd;
            sigma_floor[e] = floor;
            Eigen::VectorXd fitted = sparse_product(variance_design.matrix, variance_beta[e]);
            const auto floored = (fitted.array() < floor).count();
            if (floored * 2 > rows) {
                throw IllConditioningError(
                    "variance fit for " +
                    to_string(variable_at(static_cast<int>(e), n_vars / kVarKinds)) +
                    " floored on " + std::to_string(floored) + " of " + std::to_string(rows) +
                    " rows");
            }
            sigma[e] = fitted.cwiseMax(floor);
        });

        if (pass >= 2) {
            double worst = 0.0;
            for (int e = 0; e < n_vars; ++e) {
                const double rms =
                    std::sqrt((sigma[static_cast<std::size_t>(e)] -
                               prev_sigma[static_cast<std::size_t>(e)])
                                  .squaredNorm() /
                              static_cast<double>(rows));
                worst = std::max(worst, rms);
            }
            delta_history.push_back(worst);
            if (worst < spec.irw_tol) converged = true;
        }
        prev_sigma = sigma;
        if (converged || pass == spec.irw_max_iter) break;

        for (int e = 0; e < n_vars; ++e) {
            weights[static_cast<std::size_t>(e)] =
                sigma[static_cast<std::size_t>(e)].array().square().inverse();
        }
    }

    FittedModel model;
    model.spec = spec;
    model.station_count = panel.station_count();
    model.method = method;
    model.iterations_used = iterations;
    model.converged = converged;
    model.delta_history = delta_history;
    model.final_delta = delta_history.empty() ? std::numeric_limits<double>::quiet_NaN()
                                              : delta_history.back();

    for (int e = 0; e < n_vars; ++e) {
        const auto idx = static_cast<std::size_t>(e);
        FittedEquation eq;
        eq.target = variable_at(e, panel.station_count());
        eq.mean_coefficients = sparsify(mean_beta[idx], mean_design.labels);
        eq.variance_coefficients = sparsify(variance_beta[idx], variance_labels);
        eq.residual_path = residual_full.col(e).segment(first, rows);
        eq.sigma_path = sigma[idx];
        eq.sigma_floor = sigma_floor[idx];
        eq.lambda_mean = lambda_mean[idx];
        eq.lambda_variance = lambda_variance[idx];
        model.equations.push_back(std::move(eq));
    }
    return model;
}

ModelApplication apply_model(const FittedModel& model, const Panel& panel) {
    const ModelSpec& spec = model.spec;
    if (panel.station_count() != model.station_count) {
        throw InvalidValueError("panel station count does not match the model");
    }
    const int n_vars = panel.column_count();
    const std::int64_t first = spec.min_history();
    const DesignBlock mean_design = build_mean_design_matrix(panel, spec);
    const std::int64_t rows = mean_design.rows();

    ModelApplication app;
    app.first_row = first;
    app.residuals.setZero(rows, n_vars);

    Eigen::MatrixXd residual_full = Eigen::MatrixXd::Zero(panel.rows(), n_vars);
    std::vector<Eigen::VectorXd> dense_mean(static_cast<std::size_t>(n_vars));
    for (int e = 0; e < n_vars; ++e) {
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(mean_design.cols());
        const auto& coef = model.equations[static_cast<std::size_t>(e)].mean_coefficients;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            bool found = false;
            for (int j = 0; j < mean_design.cols(); ++j) {
                if (mean_design.labels[static_cast<std::size_t>(j)] == coef.labels[i]) {
                    beta(j) = coef.values[i];
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw InvalidValueError("model coefficient " + to_string(coef.labels[i]) +
                                        " has no column in this design");
            }
        }
        const Eigen::VectorXd y = panel.values.col(e).segment(first, rows);
        app.residuals.col(e) = sparse_residual(mean_design.matrix, y, beta);
        residual_full.col(e).segment(first, rows) = app.residuals.col(e);
    }

    const DesignBlock variance_design = build_variance_design_matrix(residual_full, spec);
    app.sigma.setZero(rows, n_vars);
    for (int e = 0; e < n_vars; ++e) {
        const auto& eq = model.equations[static_cast<std::size_t>(e)];
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(variance_design.cols());
        const auto& coef = eq.variance_coefficients;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            bool found = false;
            for (int j = 0; j < variance_design.cols(); ++j) {
                if (variance_design.labels[static_cast<std::size_t>(j)] == coef.labels[i]) {
                    beta(j) = coef.values[i];
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw InvalidValueError("model coefficient " + to_string(coef.labels[i]) +
                                        " has no column in this design");
            }
        }
        const double floor = eq.sigma_floor > 0.0 ? eq.sigma_floor : 1e-12;
        app.sigma.col(e) = sparse_product(variance_design.matrix, beta).cwiseMax(floor);
    }
    return app;
}

}  // namespace windlasso
