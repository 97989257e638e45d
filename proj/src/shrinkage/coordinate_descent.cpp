#include "windlasso/shrinkage/coordinate_descent.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

namespace {

// Working state of one problem: standardization constants plus the residual
// carried across lambda values for warm starts.
class Solver {
  public:
    explicit Solver(const ShrinkageProblem& problem) : p_(problem) {
        if (!p_.design) throw InvalidValueError("shrinkage problem has no design matrix");
        const auto& X = *p_.design;
        n_ = X.rows();
        cols_ = static_cast<int>(X.cols());
        if (n_ < 1 || cols_ < 1) throw InvalidValueError("empty design matrix");
        if (p_.y.size() != n_) throw InvalidValueError("response length mismatch");
        if (!(p_.alpha >= 0.0 && p_.alpha <= 1.0)) {
            throw InvalidValueError("alpha must lie in [0, 1]");
        }
        if (p_.cd_tol <= 0.0) throw InvalidValueError("cd_tol must be positive");

        if (p_.weights.size() == 0) {
            w_ = Eigen::VectorXd::Ones(n_);
        } else {
            if (p_.weights.size() != n_) throw InvalidValueError("weight length mismatch");
            if ((p_.weights.array() <= 0.0).any()) {
                throw InvalidValueError("weights must be strictly positive");
            }
            w_ = p_.weights;
        }
        wsum_ = w_.sum();

        penalized_.assign(static_cast<std::size_t>(cols_), 1);
        if (!p_.penalize.empty()) {
            if (p_.penalize.size() != static_cast<std::size_t>(cols_)) {
                throw InvalidValueError("penalize flag length mismatch");
            }
            penalized_ = p_.penalize;
        } else {
            for (int j = 0; j < cols_; ++j) {
                if (X.col(j).maxCoeff() == X.col(j).minCoeff()) penalized_[j] = 0;
            }
        }

        // A constant unpenalized column doubles as the centering absorber.
        intercept_col_ = -1;
        if (p_.standardize) {
            for (int j = 0; j < cols_; ++j) {
                if (!penalized_[j] && X.col(j).maxCoeff() == X.col(j).minCoeff() &&
                    X(0, j) != 0.0) {
                    intercept_col_ = j;
                    break;
                }
            }
        }
        const bool center = intercept_col_ >= 0;

        mu_.setZero(cols_);
        scale_.setOnes(cols_);
        curvature_.setZero(cols_);
        col_wsum_.setZero(cols_);
        inert_.assign(static_cast<std::size_t>(cols_), 0);
        for (int j = 0; j < cols_; ++j) {
            if (j == intercept_col_) {
                inert_[j] = 1;  // handled analytically
                continue;
            }
            const auto col = X.col(j);
            const double wmean = col.dot(w_) / wsum_;
            if (p_.standardize) {
                if (center) mu_(j) = wmean;
                const double wvar =
                    (col.array() - wmean).square().matrix().dot(w_) / wsum_;
                const double sd = std::sqrt(wvar);
                if (sd == 0.0) {
                    inert_[j] = 1;  // constant column: coefficient pinned at zero
                    continue;
                }
                scale_(j) = sd;
            }
            // sum_t w x~^2 and sum_t w x~ for the working column
            const double s = scale_(j);
            double a = 0.0;
            if (center) {
                a = (col.array() - mu_(j)).square().matrix().dot(w_) / (s * s);
            } else {
                a = col.array().square().matrix().dot(w_) / (s * s);
            }
            if (a == 0.0) {
                inert_[j] = 1;
                continue;
            }
            curvature_(j) = a;
            col_wsum_(j) = (col.dot(w_) - mu_(j) * wsum_) / s;
        }

        ybar_ = intercept_col_ >= 0 ? p_.y.dot(w_) / wsum_ : 0.0;
        ytil_ = p_.y.array() - ybar_;

        theta_.setZero(cols_);
        residual_ = ytil_;
        wresidual_ = w_.cwiseProduct(residual_);
    }

    double lambda_max() {
        // Fit the unpenalized coordinates first so the gradient is taken at
        // the null model.
        for (int it = 0; it < 1000; ++it) {
            if (sweep_unpenalized() < p_.cd_tol) break;
        }
        double top = 0.0;
        const auto& X = *p_.design;
        const double swr = wresidual_.sum();
        for (int j = 0; j < cols_; ++j) {
            if (!penalized_[j] || inert_[j]) continue;
            const double z = (X.col(j).dot(wresidual_) - mu_(j) * swr) / scale_(j);
            top = std::max(top, std::abs(2.0 * z));
        }
        const double denom = std::max(p_.alpha, 1e-3);
        return top > 0.0 ? top / denom : 1e-12;
    }

    std::vector<double> make_grid() {
        std::vector<double> grid;
        if (!p_.lambda_grid.empty()) {
            grid = p_.lambda_grid;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (grid[i] <= 0.0 || (i > 0 && grid[i] >= grid[i - 1])) {
                    throw InvalidValueError("lambda grid must be positive and descending");
                }
            }
            return grid;
        }
        if (p_.lambda_count < 1) throw InvalidValueError("lambda_count must be >= 1");
        const double top = lambda_max();
        if (p_.lambda_count == 1) return {top};
        const double ratio = p_.lambda_min_ratio;
        if (!(ratio > 0.0 && ratio < 1.0)) {
            throw InvalidValueError("lambda_min_ratio must lie in (0, 1)");
        }
        grid.reserve(static_cast<std::size_t>(p_.lambda_count));
        const double step = std::log(ratio) / (p_.lambda_count - 1);
        for (int i = 0; i < p_.lambda_count; ++i) grid.push_back(top * std::exp(step * i));
        return grid;
    }

    PathResult run() {
        const auto grid = make_grid();
        PathResult path;
        path.lambdas = grid;
        path.coefficients.setZero(cols_, static_cast<int>(grid.size()));
        path.df.resize(grid.size());
        path.weighted_rss.resize(grid.size());
        path.aic.assign(grid.size(), std::numeric_limits<double>::quiet_NaN());

        for (std::size_t i = 0; i < grid.size(); ++i) {
            path.total_sweeps += solve_one(grid[i]);
            const Eigen::VectorXd beta = original_scale();
            path.coefficients.col(static_cast<int>(i)) = beta;
            path.df[i] = static_cast<int>((beta.array() != 0.0).count());
            path.weighted_rss[i] = wresidual_.dot(residual_);
        }
        return path;
    }

  private:
    double sweep(double lambda, bool active_only) {
        const auto& X = *p_.design;
        const double l1 = lambda * p_.alpha;
        const double l2 = lambda * (1.0 - p_.alpha);
        double swr = wresidual_.sum();
        double max_delta = 0.0;
        for (int j = 0; j < cols_; ++j) {
            if (inert_[j]) continue;
            const bool pen = penalized_[j] != 0;
            if (active_only && pen && theta_(j) == 0.0) continue;
            const double z = (X.col(j).dot(wresidual_) - mu_(j) * swr) / scale_(j);
            const double zp = z + curvature_(j) * theta_(j);
            double next;
            if (pen) {
                next = soft_threshold(2.0 * zp, l1) / (2.0 * curvature_(j) + l2);
            } else {
                next = zp / curvature_(j);
            }
            const double delta = next - theta_(j);
            if (delta != 0.0) {
                theta_(j) = next;
                apply_move(j, delta);
                swr -= delta * col_wsum_(j);
            }
            max_delta = std::max(max_delta, std::abs(delta));
        }
        return max_delta;
    }

    double sweep_unpenalized() {
        const auto& X = *p_.design;
        double swr = wresidual_.sum();
        double max_delta = 0.0;
        for (int j = 0; j < cols_; ++j) {
            if (inert_[j] || penalized_[j]) continue;
            const double z = (X.col(j).dot(wresidual_) - mu_(j) * swr) / scale_(j);
            const double next = (z + curvature_(j) * theta_(j)) / curvature_(j);
            const double delta = next - theta_(j);
            if (delta != 0.0) {
                theta_(j) = next;
                apply_move(j, delta);
                swr -= delta * col_wsum_(j);
            }
            max_delta = std::max(max_delta, std::abs(delta));
        }
        return max_delta;
    }

    void apply_move(int j, double delta) {
        const auto& col = p_.design->col(j);
        const double inv_s = 1.0 / scale_(j);
        const double m = mu_(j);
        for (Eigen::Index t = 0; t < n_; ++t) {
            const double v = (col(t) - m) * inv_s * delta;
            residual_(t) -= v;
            wresidual_(t) -= w_(t) * v;
        }
    }

    // Sweep cap applies per lambda value; returns the sweeps consumed.
    int solve_one(double lambda) {
        double prev_objective = std::numeric_limits<double>::infinity();
        int sweeps = 0;
        while (true) {
            ++sweeps;
            check_sweep_budget(sweeps, lambda);
            const double full_delta = sweep(lambda, false);
            if (p_.check_objective) {
                const double obj = objective(lambda);
                if (obj > prev_objective * (1.0 + 1e-12) + 1e-9) {
                    throw std::logic_error("coordinate descent objective increased");
                }
                prev_objective = obj;
            }
            if (full_delta < p_.cd_tol) return sweeps;
            while (true) {
                ++sweeps;
                check_sweep_budget(sweeps, lambda);
                if (sweep(lambda, true) < p_.cd_tol) break;
            }
        }
    }

    void check_sweep_budget(int sweeps, double lambda) const {
        if (sweeps <= p_.max_sweeps) return;
        const Eigen::VectorXd beta = original_scale();
        throw ConvergenceError(
            "coordinate descent exceeded " + std::to_string(p_.max_sweeps) +
                " sweeps at lambda=" + format_double(lambda),
            std::vector<double>(beta.data(), beta.data() + beta.size()), lambda);
    }

    double objective(double lambda) const {
        double pen = 0.0;
        for (int j = 0; j < cols_; ++j) {
            if (!penalized_[j]) continue;
            pen += lambda * p_.alpha * std::abs(theta_(j)) +
                   0.5 * lambda * (1.0 - p_.alpha) * theta_(j) * theta_(j);
        }
        return wresidual_.dot(residual_) + pen;
    }

    Eigen::VectorXd original_scale() const {
        Eigen::VectorXd beta = theta_.cwiseQuotient(scale_);
        if (intercept_col_ >= 0) {
            double intercept = ybar_;
            for (int j = 0; j < cols_; ++j) {
                if (j != intercept_col_) intercept -= beta(j) * mu_(j);
            }
            beta(intercept_col_) = intercept / (*p_.design)(0, intercept_col_);
        }
        return beta;
    }

    const ShrinkageProblem& p_;
    Eigen::Index n_ = 0;
    int cols_ = 0;
    Eigen::VectorXd w_;
    double wsum_ = 0.0;
    std::vector<std::uint8_t> penalized_;
    std::vector<std::uint8_t> inert_;
    int intercept_col_ = -1;
    Eigen::VectorXd mu_, scale_, curvature_, col_wsum_;
    double ybar_ = 0.0;
    Eigen::VectorXd ytil_;
    Eigen::VectorXd theta_;       // working-scale coefficients
    Eigen::VectorXd residual_;    // ytil - X~ theta
    Eigen::VectorXd wresidual_;   // w .* residual
};

}  // namespace

double compute_lambda_max(const ShrinkageProblem& problem) {
    Solver solver(problem);
    return solver.lambda_max();
}

PathResult fit_path(const ShrinkageProblem& problem) {
    Solver solver(problem);
    return solver.run();
}

Eigen::VectorXd select_by_aic(PathResult& path, std::int64_t n) {
    if (path.n_lambda() == 0) throw InvalidValueError("empty path");
    if (n < 1) throw InvalidValueError("AIC needs n >= 1");
    double best = std::numeric_limits<double>::infinity();
    int best_index = 0;
    for (int i = 0; i < path.n_lambda(); ++i) {
        const double rss = std::max(path.weighted_rss[static_cast<std::size_t>(i)], 1e-300);
        const double aic = static_cast<double>(n) * std::log(rss / static_cast<double>(n)) +
                           2.0 * path.df[static_cast<std::size_t>(i)];
        path.aic[static_cast<std::size_t>(i)] = aic;
        // Strict improvement only: ties keep the earlier (larger) lambda.
        if (aic < best) {
            best = aic;
            best_index = i;
        }
    }
    path.chosen = best_index;
    return path.coefficients.col(best_index);
}

void write_path_csv(const PathResult& path, std::ostream& out) {
    out << "lambda,df,rss,aic\n";
    for (int i = 0; i < path.n_lambda(); ++i) {
        out << format_double(path.lambdas[static_cast<std::size_t>(i)]) << ","
            << path.df[static_cast<std::size_t>(i)] << ","
            << format_double(path.weighted_rss[static_cast<std::size_t>(i)]) << ","
            << format_double(path.aic[static_cast<std::size_t>(i)]) << "\n";
    }
}

}  // namespace windlasso
