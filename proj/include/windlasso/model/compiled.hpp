#pragma once

#include <algorithm>
#include <vector>

#include "windlasso/model/fitted_model.hpp"
#include "windlasso/spline/periodic_bspline.hpp"

namespace windlasso {

/**
 * Flattened execution form of a fitted (or synthetic-truth) model.
 *
 * The recursion engines — the simulator and the forecaster — need fast
 * per-time evaluation of seasonal coefficient values, so the sparse labeled
 * vectors are regrouped here by (lag, column) with their seasonal slots
 * attached.
 */
struct SeasonalCoefficient {
    int i1 = 1;  // diurnal slot, 1 = constant factor
    int i2 = 1;  // annual slot
    double value = 0.0;
};

struct LagTermGroup {
    int lag = 0;
    int column = 0;  // panel column of the lagged variable
    std::vector<SeasonalCoefficient> terms;
};

struct CompiledEquation {
    double intercept = 0.0;
    std::vector<SeasonalCoefficient> seasonal_level;  // mean: theta terms; variance: alpha terms
    std::vector<LagTermGroup> lag_groups;             // mean part
    std::vector<LagTermGroup> pos_shock_groups;       // variance, positive residual part
    std::vector<LagTermGroup> neg_shock_groups;       // variance, negative residual part
    double sigma_floor = 0.0;
};

/// Factor value of one seasonal slot given the two basis rows.
inline double seasonal_factor(const SeasonalCoefficient& c, const double* diurnal,
                              const double* annual) {
    double f = c.value;
    if (c.i1 > 1) f *= diurnal[c.i1 - 1];
    if (c.i2 > 1) f *= annual[c.i2 - 1];
    return f;
}

inline double seasonal_sum(const std::vector<SeasonalCoefficient>& terms, const double* diurnal,
                           const double* annual) {
    double s = 0.0;
    for (const auto& c : terms) s += seasonal_factor(c, diurnal, annual);
    return s;
}

namespace detail {

inline void add_to_group(std::vector<LagTermGroup>& groups, int lag, int column,
                         SeasonalCoefficient term) {
    for (auto& g : groups) {
        if (g.lag == lag && g.column == column) {
            g.terms.push_back(term);
            return;
        }
    }
    groups.push_back({lag, column, {term}});
}

inline void sort_groups(std::vector<LagTermGroup>& groups) {
    std::sort(groups.begin(), groups.end(), [](const LagTermGroup& a, const LagTermGroup& b) {
        return a.lag != b.lag ? a.lag < b.lag : a.column < b.column;
    });
}

}  // namespace detail

inline CompiledEquation compile_equation(const FittedEquation& eq, int station_count) {
    CompiledEquation out;
    out.sigma_floor = eq.sigma_floor;
    const auto& mc = eq.mean_coefficients;
    for (std::size_t i = 0; i < mc.labels.size(); ++i) {
        const ColumnLabel& label = mc.labels[i];
        const double value = mc.values[i];
        switch (label.kind) {
            case ColumnLabel::Kind::Intercept:
                out.intercept += value;
                break;
            case ColumnLabel::Kind::Spline:
                out.seasonal_level.push_back({label.i1, label.i2, value});
                break;
            case ColumnLabel::Kind::Lag:
            case ColumnLabel::Kind::LagSpline:
                detail::add_to_group(out.lag_groups, label.lag_index,
                                     column_of(label.var, station_count),
                                     {label.i1, label.i2, value});
                break;
            default:
                break;  // shock labels never appear in a mean fit
        }
    }
    detail::sort_groups(out.lag_groups);
    return out;
}

/// Variance part compiled separately; shares the struct with sigma fields.
inline CompiledEquation compile_variance_equation(const FittedEquation& eq, int station_count) {
    CompiledEquation out;
    out.sigma_floor = eq.sigma_floor;
    const auto& vc = eq.variance_coefficients;
    for (std::size_t i = 0; i < vc.labels.size(); ++i) {
        const ColumnLabel& label = vc.labels[i];
        const double value = vc.values[i];
        switch (label.kind) {
            case ColumnLabel::Kind::Intercept:
                out.intercept += value;
                break;
            case ColumnLabel::Kind::Spline:
                out.seasonal_level.push_back({label.i1, 1, value});
                break;
            case ColumnLabel::Kind::ShockPos:
                detail::add_to_group(out.pos_shock_groups, label.lag_index,
                                     column_of(label.var, station_count),
                                     {label.i1, 1, value});
                break;
            case ColumnLabel::Kind::ShockNeg:
                detail::add_to_group(out.neg_shock_groups, label.lag_index,
                                     column_of(label.var, station_count),
                                     {label.i1, 1, value});
                break;
            default:
                break;
        }
    }
    detail::sort_groups(out.pos_shock_groups);
    detail::sort_groups(out.neg_shock_groups);
    return out;
}

}  // namespace windlasso
