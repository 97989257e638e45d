#include "windlasso/benchmarks/benchmarks.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "windlasso/core/errors.hpp"

namespace windlasso {

using nlohmann::json;

std::string BenchmarkModel::tag() const {
    switch (kind) {
        case Kind::Persistence:
            return "persistence";
        case Kind::AR:
            return "ar" + std::to_string(order);
        case Kind::VAR:
            return "var" + std::to_string(order);
    }
    return "benchmark";
}

BenchmarkModel make_persistence(int station_count) {
    BenchmarkModel model;
    model.kind = BenchmarkModel::Kind::Persistence;
    model.station_count = station_count;
    return model;
}

namespace {

struct OlsFit {
    Eigen::MatrixXd coefficients;  // cols(design) x n_rhs
    Eigen::MatrixXd residuals;     // n x n_rhs
};

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::MatrixXd& rhs) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols()) {
        throw RankError("singular normal equations (rank " + std::to_string(qr.rank()) +
                        " of " + std::to_string(design.cols()) + ")");
    }
    OlsFit fit;
    fit.coefficients = qr.solve(rhs);
    fit.residuals = rhs - design * fit.coefficients;
    return fit;
}

void require_length(std::int64_t n, int order) {
    if (order < 1) throw InvalidValueError("benchmark order must be >= 1");
    if (n <= 10 * static_cast<std::int64_t>(order)) {
        throw LengthError("need more than " + std::to_string(10 * order) +
                          " observations for order " + std::to_string(order));
    }
}

}  // namespace

BenchmarkModel fit_ar(std::span<const double> series, int order, VariableRef target,
                      int station_count) {
    const auto n = static_cast<std::int64_t>(series.size());
    require_length(n, order);
    const std::int64_t rows = n - order;
    Eigen::MatrixXd design(rows, order + 1);
    Eigen::VectorXd y(rows);
    for (std::int64_t t = 0; t < rows; ++t) {
        design(t, 0) = 1.0;
        for (int j = 1; j <= order; ++j) {
            design(t, j) = series[static_cast<std::size_t>(t + order - j)];
        }
        y(t) = series[static_cast<std::size_t>(t + order)];
    }
    const OlsFit fit = ols(design, y);

    BenchmarkModel model;
    model.kind = BenchmarkModel::Kind::AR;
    model.order = order;
    model.target = target;
    model.station_count = station_count;
    model.ar_coefficients = fit.coefficients.col(0);
    const auto dof = static_cast<double>(rows - order - 1);
    model.ar_innovation_sd = std::sqrt(fit.residuals.col(0).squaredNorm() / std::max(dof, 1.0));
    return model;
}

BenchmarkModel fit_var(const Panel& panel, int order) {
    const std::int64_t n = panel.rows();
    require_length(n, order);
    const int n_vars = panel.column_count();
    const std::int64_t rows = n - order;
    const int cols = 1 + n_vars * order;
    Eigen::MatrixXd design(rows, cols);
    design.col(0).setOnes();
    for (int j = 1; j <= order; ++j) {
        design.middleCols(1 + (j - 1) * n_vars, n_vars) =
            panel.values.middleRows(order - j, rows);
    }
    const Eigen::MatrixXd rhs = panel.values.middleRows(order, rows);
    const OlsFit fit = ols(design, rhs);

    BenchmarkModel model;
    model.kind = BenchmarkModel::Kind::VAR;
    model.order = order;
    model.station_count = panel.station_count();
    model.var_intercept = fit.coefficients.row(0).transpose();
    model.var_coefficients = fit.coefficients.bottomRows(n_vars * order).transpose();
    model.var_innovation_cov =
        fit.residuals.transpose() * fit.residuals /
        static_cast<double>(std::max<std::int64_t>(rows - cols, 1));
    return model;
}

namespace {

double aic_of(double rss, std::int64_t n, long params) {
    return static_cast<double>(n) * std::log(std::max(rss / static_cast<double>(n), 1e-300)) +
           2.0 * static_cast<double>(params);
}

}  // namespace

int choose_ar_order(std::span<const double> series, int max_order) {
    if (max_order < 1) throw InvalidValueError("max_order must be >= 1");
    double best = std::numeric_limits<double>::infinity();
    int best_order = 1;
    for (int p = 1; p <= max_order; ++p) {
        const auto n = static_cast<std::int64_t>(series.size());
        if (n <= 10 * static_cast<std::int64_t>(p)) break;
        // Score every order on the rows the largest candidate can use, so the
        // comparison is like for like.
        const std::int64_t rows = n - max_order;
        Eigen::MatrixXd design(rows, p + 1);
        Eigen::VectorXd y(rows);
        for (std::int64_t t = 0; t < rows; ++t) {
            design(t, 0) = 1.0;
            for (int j = 1; j <= p; ++j) {
                design(t, j) = series[static_cast<std::size_t>(t + max_order - j)];
            }
            y(t) = series[static_cast<std::size_t>(t + max_order)];
        }
        const OlsFit fit = ols(design, y);
        const double aic = aic_of(fit.residuals.col(0).squaredNorm(), rows, p + 1);
        if (aic < best) {
            best = aic;
            best_order = p;
        }
    }
    return best_order;
}

int choose_var_order(const Panel& panel, int max_order) {
    if (max_order < 1) throw InvalidValueError("max_order must be >= 1");
    const int n_vars = panel.column_count();
    double best = std::numeric_limits<double>::infinity();
    int best_order = 1;
    for (int p = 1; p <= max_order; ++p) {
        if (panel.rows() <= 10 * static_cast<std::int64_t>(p)) break;
        const std::int64_t rows = panel.rows() - max_order;
        const int cols = 1 + n_vars * p;
        Eigen::MatrixXd design(rows, cols);
        design.col(0).setOnes();
        for (int j = 1; j <= p; ++j) {
            design.middleCols(1 + (j - 1) * n_vars, n_vars) =
                panel.values.middleRows(max_order - j, rows);
        }
        const Eigen::MatrixXd rhs = panel.values.middleRows(max_order, rows);
        const OlsFit fit = ols(design, rhs);
        double aic = 0.0;
        for (int e = 0; e < n_vars; ++e) {
            aic += aic_of(fit.residuals.col(e).squaredNorm(), rows, cols);
        }
        if (aic < best) {
            best = aic;
            best_order = p;
        }
    }
    return best_order;
}

Eigen::MatrixXd persistence_forecast(const Panel& panel, std::int64_t origin, int horizon) {
    if (origin < 0 || origin >= panel.rows()) {
        throw RangeError("forecast origin " + std::to_string(origin) + " outside the panel");
    }
    if (horizon < 1) throw InvalidValueError("horizon must be >= 1");
    return panel.values.row(origin).replicate(horizon, 1);
}

BenchmarkForecast forecast_benchmark(const BenchmarkModel& model, const Panel& panel,
                                     std::int64_t origin, int horizon) {
    if (origin < 0 || origin >= panel.rows()) {
        throw RangeError("forecast origin " + std::to_string(origin) + " outside the panel");
    }
    if (horizon < 1) throw InvalidValueError("horizon must be >= 1");
    const int n_vars = panel.column_count();
    BenchmarkForecast out;
    out.point.setZero(horizon, n_vars);
    out.sd.setZero(horizon, n_vars);

    switch (model.kind) {
        case BenchmarkModel::Kind::Persistence: {
            out.point = persistence_forecast(panel, origin, horizon);
            return out;
        }
        case BenchmarkModel::Kind::AR: {
            const int p = model.order;
            if (origin + 1 < p) throw RangeError("origin leaves too little AR history");
            const int target_col = panel.column(model.target);
            std::vector<double> history(static_cast<std::size_t>(p + horizon));
            for (int j = 0; j < p; ++j) {
                history[static_cast<std::size_t>(p - 1 - j)] =
                    panel.values(origin - j, target_col);
            }
            for (int o = 0; o < horizon; ++o) {
                double value = model.ar_coefficients(0);
                for (int j = 1; j <= p; ++j) {
                    value += model.ar_coefficients(j) *
                             history[static_cast<std::size_t>(p + o - j)];
                }
                history[static_cast<std::size_t>(p + o)] = value;
                out.point(o, target_col) = value;
            }
            // Forecast spread from the moving-average weights.
            std::vector<double> psi(static_cast<std::size_t>(horizon));
            psi[0] = 1.0;
            for (int i = 1; i < horizon; ++i) {
                double s = 0.0;
                for (int j = 1; j <= std::min(i, p); ++j) {
                    s += model.ar_coefficients(j) * psi[static_cast<std::size_t>(i - j)];
                }
                psi[static_cast<std::size_t>(i)] = s;
            }
            double acc = 0.0;
            for (int o = 0; o < horizon; ++o) {
                acc += psi[static_cast<std::size_t>(o)] * psi[static_cast<std::size_t>(o)];
                out.sd(o, target_col) = model.ar_innovation_sd * std::sqrt(acc);
            }
            return out;
        }
        case BenchmarkModel::Kind::VAR: {
            const int p = model.order;
            if (origin + 1 < p) throw RangeError("origin leaves too little VAR history");
            Eigen::MatrixXd history(p + horizon, n_vars);
            for (int j = 0; j < p; ++j) {
                history.row(p - 1 - j) = panel.values.row(origin - j);
            }
            for (int o = 0; o < horizon; ++o) {
                Eigen::VectorXd value = model.var_intercept;
                for (int j = 1; j <= p; ++j) {
                    value += model.var_coefficients.middleCols((j - 1) * n_vars, n_vars) *
                             history.row(p + o - j).transpose();
                }
                history.row(p + o) = value.transpose();
                out.point.row(o) = value.transpose();
            }
            // Companion covariance recursion: S_o = A S_{o-1} A' + Sigma~.
            const Eigen::MatrixXd companion = companion_matrix(model);
            const int dim = static_cast<int>(companion.rows());
            Eigen::MatrixXd sigma_tilde = Eigen::MatrixXd::Zero(dim, dim);
            sigma_tilde.topLeftCorner(n_vars, n_vars) = model.var_innovation_cov;
            Eigen::MatrixXd cov = sigma_tilde;
            for (int o = 0; o < horizon; ++o) {
                if (o > 0) cov = companion * cov * companion.transpose() + sigma_tilde;
                out.sd.row(o) =
                    cov.topLeftCorner(n_vars, n_vars).diagonal().cwiseSqrt().transpose();
            }
            return out;
        }
    }
    throw InvalidValueError("unknown benchmark kind");
}

Eigen::MatrixXd companion_matrix(const BenchmarkModel& model) {
    if (model.kind == BenchmarkModel::Kind::AR) {
        const int p = model.order;
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
        for (int j = 1; j <= p; ++j) companion(0, j - 1) = model.ar_coefficients(j);
        if (p > 1) {
            companion.bottomLeftCorner(p - 1, p - 1).setIdentity();
        }
        return companion;
    }
    if (model.kind == BenchmarkModel::Kind::VAR) {
        const int p = model.order;
        const int n_vars = static_cast<int>(model.var_intercept.size());
        const int dim = n_vars * p;
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(dim, dim);
        companion.topRows(n_vars) = model.var_coefficients;
        if (p > 1) {
            companion.bottomLeftCorner(n_vars * (p - 1), n_vars * (p - 1)).setIdentity();
        }
        return companion;
    }
    throw InvalidValueError("persistence has no companion form");
}

std::string benchmark_to_json(const BenchmarkModel& model, const std::string& config_hash) {
    json j;
    j["format"] = "windlasso-model/1";
    if (!config_hash.empty()) j["config_hash"] = config_hash;
    j["order"] = model.order;
    j["station_count"] = model.station_count;
    switch (model.kind) {
        case BenchmarkModel::Kind::Persistence:
            j["model_type"] = "persistence";
            break;
        case BenchmarkModel::Kind::AR: {
            j["model_type"] = "ar";
            j["target"] = to_string(model.target);
            j["coefficients"] = std::vector<double>(
                model.ar_coefficients.data(),
                model.ar_coefficients.data() + model.ar_coefficients.size());
            j["innovation_sd"] = model.ar_innovation_sd;
            break;
        }
        case BenchmarkModel::Kind::VAR: {
            j["model_type"] = "var";
            const int n_vars = static_cast<int>(model.var_intercept.size());
            j["intercept"] = std::vector<double>(model.var_intercept.data(),
                                                 model.var_intercept.data() + n_vars);
            json rows = json::array();
            for (int r = 0; r < n_vars; ++r) {
                rows.push_back(std::vector<double>(
                    model.var_coefficients.row(r).begin(), model.var_coefficients.row(r).end()));
            }
            j["coefficients"] = std::move(rows);
            json cov = json::array();
            for (int r = 0; r < n_vars; ++r) {
                cov.push_back(std::vector<double>(model.var_innovation_cov.row(r).begin(),
                                                  model.var_innovation_cov.row(r).end()));
            }
            j["innovation_cov"] = std::move(cov);
            break;
        }
    }
    return j.dump(2) + "\n";
}

BenchmarkModel benchmark_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    const std::string type = j.value("model_type", "");
    BenchmarkModel model;
    model.order = j.value("order", 0);
    model.station_count = j.value("station_count", 0);
    if (type == "persistence") {
        model.kind = BenchmarkModel::Kind::Persistence;
        return model;
    }
    if (type == "ar") {
        model.kind = BenchmarkModel::Kind::AR;
        model.target = parse_variable_ref(j.at("target").get<std::string>());
        const auto coef = j.at("coefficients").get<std::vector<double>>();
        model.ar_coefficients =
            Eigen::Map<const Eigen::VectorXd>(coef.data(), static_cast<Eigen::Index>(coef.size()));
        model.ar_innovation_sd = j.at("innovation_sd").get<double>();
        return model;
    }
    if (type == "var") {
        model.kind = BenchmarkModel::Kind::VAR;
        const auto intercept = j.at("intercept").get<std::vector<double>>();
        const int n_vars = static_cast<int>(intercept.size());
        model.var_intercept = Eigen::Map<const Eigen::VectorXd>(intercept.data(), n_vars);
        const auto& rows = j.at("coefficients");
        model.var_coefficients.resize(n_vars, n_vars * model.order);
        for (int r = 0; r < n_vars; ++r) {
            const auto row = rows[static_cast<std::size_t>(r)].get<std::vector<double>>();
            model.var_coefficients.row(r) =
                Eigen::Map<const Eigen::RowVectorXd>(row.data(),
                                                     static_cast<Eigen::Index>(row.size()));
        }
        const auto& cov = j.at("innovation_cov");
        model.var_innovation_cov.resize(n_vars, n_vars);
        for (int r = 0; r < n_vars; ++r) {
            const auto row = cov[static_cast<std::size_t>(r)].get<std::vector<double>>();
            model.var_innovation_cov.row(r) =
                Eigen::Map<const Eigen::RowVectorXd>(row.data(), n_vars);
        }
        return model;
    }
    throw ParseError("model file holds a '" + type + "' model, expected a benchmark");
}

Panel panel_head(const Panel& panel, std::int64_t rows) {
    if (rows < 1 || rows > panel.rows()) {
        throw InvalidValueError("panel_head rows out of range");
    }
    Panel head;
    head.stations = panel.stations;
    head.start_epoch = panel.start_epoch;
    head.step_seconds = panel.step_seconds;
    head.values = panel.values.topRows(rows);
    if (panel.azimuth_deg) head.azimuth_deg = panel.azimuth_deg->topRows(rows);
    return head;
}

}  // namespace windlasso
