#include "windlasso/design/design_matrix.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

std::vector<int> DesignBlock::zero_columns() const {
    std::vector<int> out;
    for (int j = 0; j < cols(); ++j) {
        if ((matrix.col(j).array() == 0.0).all()) out.push_back(j);
    }
    return out;
}

SplinePair make_spline_pair(const ModelSpec& spec) {
    return {PeriodicSplineBasis(spec.diurnal_period, spec.diurnal_count),
            PeriodicSplineBasis(spec.annual_period, spec.annual_count)};
}

namespace {

// Seasonal factor block shared by the level terms and every lag: slot 0 is
// the constant 1, then diurnal-only, annual-only, and product factors in
// label order.
struct SeasonalSlots {
    std::vector<ColumnLabel> slot_labels;  // (i1, i2) pairs, slot 0 = (1, 1)
    Eigen::MatrixXd factors;               // rows x slots, column 0 all ones

    int count() const { return static_cast<int>(slot_labels.size()); }
};

SeasonalSlots make_mean_slots(const SplinePair& splines, const ModelSpec& spec,
                              std::int64_t first_row, std::int64_t rows) {
    const int k1 = spec.diurnal_count;
    const int k2 = spec.annual_count;
    SeasonalSlots slots;
    slots.slot_labels.push_back(ColumnLabel::spline(1, 1));
    for (int i1 = 2; i1 <= k1; ++i1) slots.slot_labels.push_back(ColumnLabel::spline(i1, 1));
    for (int i2 = 2; i2 <= k2; ++i2) slots.slot_labels.push_back(ColumnLabel::spline(1, i2));
    for (int i1 = 2; i1 <= k1; ++i1) {
        for (int i2 = 2; i2 <= k2; ++i2) {
            slots.slot_labels.push_back(ColumnLabel::spline(i1, i2));
        }
    }
    slots.factors.resize(rows, slots.count());
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::int64_t t = first_row + r;
        const double* d = splines.diurnal.row(t);
        const double* a = splines.annual.row(t);
        int c = 0;
        slots.factors(r, c++) = 1.0;
        for (int i1 = 2; i1 <= k1; ++i1) slots.factors(r, c++) = d[i1 - 1];
        for (int i2 = 2; i2 <= k2; ++i2) slots.factors(r, c++) = a[i2 - 1];
        for (int i1 = 2; i1 <= k1; ++i1) {
            for (int i2 = 2; i2 <= k2; ++i2) slots.factors(r, c++) = d[i1 - 1] * a[i2 - 1];
        }
    }
    return slots;
}

SeasonalSlots make_diurnal_slots(const SplinePair& splines, const ModelSpec& spec,
                                 std::int64_t first_row, std::int64_t rows) {
    const int k1 = spec.diurnal_count;
    SeasonalSlots slots;
    slots.slot_labels.push_back(ColumnLabel::spline(1, 1));
    for (int i1 = 2; i1 <= k1; ++i1) slots.slot_labels.push_back(ColumnLabel::spline(i1, 1));
    slots.factors.resize(rows, slots.count());
    for (std::int64_t r = 0; r < rows; ++r) {
        const double* d = splines.diurnal.row(first_row + r);
        slots.factors(r, 0) = 1.0;
        for (int i1 = 2; i1 <= k1; ++i1) slots.factors(r, i1 - 1) = d[i1 - 1];
    }
    return slots;
}

std::int64_t usable_rows_or_throw(std::int64_t total_rows, const ModelSpec& spec) {
    const std::int64_t first = spec.min_history();
    const std::int64_t rows = total_rows - first;
    if (rows < 2) {
        throw LengthError("need more than " + std::to_string(first + 1) +
                          " observations for this lag structure, got " +
                          std::to_string(total_rows));
    }
    return rows;
}

}  // namespace

DesignBlock build_mean_design_matrix(const Panel& panel, const ModelSpec& spec) {
    spec.validate();
    const std::int64_t rows = usable_rows_or_throw(panel.rows(), spec);
    const std::int64_t first = spec.min_history();
    const int n_vars = panel.column_count();
    const auto lags = spec.active_mean_lags();
    const SplinePair splines = make_spline_pair(spec);
    const SeasonalSlots slots = make_mean_slots(splines, spec, first, rows);

    DesignBlock block;
    block.first_row = first;
    block.matrix.resize(rows, mean_design_column_count(spec, panel.station_count()));
    block.labels.reserve(static_cast<std::size_t>(block.matrix.cols()));

    int c = 0;
    block.labels.push_back(ColumnLabel::intercept());
    block.matrix.col(c++).setOnes();
    for (int s = 1; s < slots.count(); ++s) {
        block.labels.push_back(slots.slot_labels[static_cast<std::size_t>(s)]);
        block.matrix.col(c++) = slots.factors.col(s);
    }
    for (int lag : lags) {
        for (int v = 0; v < n_vars; ++v) {
            const auto lagged = panel.values.col(v).segment(first - lag, rows);
            const VariableRef ref = variable_at(v, panel.station_count());
            block.labels.push_back(ColumnLabel::lag(lag, ref));
            block.matrix.col(c++) = lagged;
            for (int s = 1; s < slots.count(); ++s) {
                const auto& sl = slots.slot_labels[static_cast<std::size_t>(s)];
                block.labels.push_back(ColumnLabel::lag_spline(lag, ref, sl.i1, sl.i2));
                block.matrix.col(c++) = lagged.cwiseProduct(slots.factors.col(s));
            }
        }
    }
    return block;
}

Eigen::VectorXd mean_response(const Panel& panel, const ModelSpec& spec, VariableRef target) {
    const std::int64_t rows = usable_rows_or_throw(panel.rows(), spec);
    return panel.values.col(panel.column(target)).segment(spec.min_history(), rows);
}

DesignBlock build_variance_design_matrix(const Eigen::MatrixXd& residuals,
                                         const ModelSpec& spec) {
    spec.validate();
    const std::int64_t rows = usable_rows_or_throw(residuals.rows(), spec);
    const std::int64_t first = spec.min_history();
    const int n_vars = static_cast<int>(residuals.cols());
    const int station_count = n_vars / kVarKinds;
    const SplinePair splines = make_spline_pair(spec);
    const SeasonalSlots slots = make_diurnal_slots(splines, spec, first, rows);

    DesignBlock block;
    block.first_row = first;
    block.matrix.resize(rows, variance_design_column_count(spec, station_count));
    block.labels.reserve(static_cast<std::size_t>(block.matrix.cols()));

    int c = 0;
    block.labels.push_back(ColumnLabel::intercept());
    block.matrix.col(c++).setOnes();
    for (int s = 1; s < slots.count(); ++s) {
        const auto& sl = slots.slot_labels[static_cast<std::size_t>(s)];
        block.labels.push_back(ColumnLabel::spline(sl.i1, 1));
        block.matrix.col(c++) = slots.factors.col(s);
    }

    Eigen::VectorXd shock(rows);
    const auto fill_shocks = [&](bool positive, int depth) {
        for (int lag = 1; lag <= depth; ++lag) {
            for (int v = 0; v < n_vars; ++v) {
                const auto lagged = residuals.col(v).segment(first - lag, rows);
                // One-sided shocks: the indicator is 1 exactly when the
                // lagged residual has the requested sign (> 0 vs <= 0).
                if (positive) {
                    shock = lagged.cwiseMax(0.0);
                } else {
                    shock = lagged.cwiseMin(0.0);
                }
                const VariableRef ref = variable_at(v, station_count);
                for (int s = 0; s < slots.count(); ++s) {
                    const auto& sl = slots.slot_labels[static_cast<std::size_t>(s)];
                    block.labels.push_back(positive ? ColumnLabel::shock_pos(lag, ref, sl.i1)
                                                    : ColumnLabel::shock_neg(lag, ref, sl.i1));
                    if (s == 0) {
                        block.matrix.col(c++) = shock;
                    } else {
                        block.matrix.col(c++) = shock.cwiseProduct(slots.factors.col(s));
                    }
                }
            }
        }
    };
    fill_shocks(true, spec.pos_shock_lags);
    fill_shocks(false, spec.neg_shock_lags);
    return block;
}

Eigen::VectorXd variance_response(const Eigen::MatrixXd& residuals, const ModelSpec& spec,
                                  VariableRef target, int station_count) {
    const std::int64_t rows = usable_rows_or_throw(residuals.rows(), spec);
    const Eigen::VectorXd resp =
        residuals.col(column_of(target, station_count)).segment(spec.min_history(), rows).cwiseAbs();
    if ((resp.array() == 0.0).all()) {
        throw DegenerateDataError("residuals of " + to_string(target) +
                                  " are identically zero; variance fit is degenerate");
    }
    return resp;
}

std::pair<DesignBlock, Eigen::VectorXd> build_mean_design(const Panel& panel,
                                                          const ModelSpec& spec,
                                                          VariableRef target) {
    return {build_mean_design_matrix(panel, spec), mean_response(panel, spec, target)};
}

std::pair<DesignBlock, Eigen::VectorXd> build_variance_design(const Eigen::MatrixXd& residuals,
                                                              const ModelSpec& spec,
                                                              VariableRef target,
                                                              int station_count) {
    return {build_variance_design_matrix(residuals, spec),
            variance_response(residuals, spec, target, station_count)};
}

long parameter_count(const ModelSpec& spec) {
    const long j = spec.mean_lags;
    const long p = spec.pos_shock_lags;
    const long q = spec.neg_shock_lags;
    const long k1 = spec.diurnal_count;
    const long k2 = spec.annual_count;
    return 2 * (j + 2 * ((k1 - 1) + (k2 - 1) + (k1 * k2 - 1) + 1) + (k1 - 1) + p + q + 1 +
                2 * k1);
}

long mean_design_column_count(const ModelSpec& spec, int station_count) {
    const long k1 = spec.diurnal_count;
    const long k2 = spec.annual_count;
    const long seasonal = (k1 - 1) + (k2 - 1) + (k1 - 1) * (k2 - 1);
    const long per_lag_var = 1 + seasonal;
    const long n_lags = static_cast<long>(spec.active_mean_lags().size());
    return 1 + seasonal + n_lags * kVarKinds * station_count * per_lag_var;
}

long variance_design_column_count(const ModelSpec& spec, int station_count) {
    const long k1 = spec.diurnal_count;
    const long per_lag_var = k1;  // plain shock plus (k1 - 1) diurnal products
    return 1 + (k1 - 1) +
           static_cast<long>(spec.pos_shock_lags + spec.neg_shock_lags) * kVarKinds *
               station_count * per_lag_var;
}

void write_design_csv(const DesignBlock& block, const Eigen::VectorXd* response,
                      std::ostream& out) {
    out << "t";
    for (const auto& label : block.labels) out << "," << to_string(label);
    if (response) out << ",response";
    out << "\n";
    for (std::int64_t r = 0; r < block.rows(); ++r) {
        out << block.first_row + r;
        for (int c = 0; c < block.cols(); ++c) out << "," << format_double(block.matrix(r, c));
        if (response) out << "," << format_double((*response)(r));
        out << "\n";
    }
}

}  // namespace windlasso
