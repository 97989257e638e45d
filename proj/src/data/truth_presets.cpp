#include "windlasso/data/truth_presets.hpp"

#include "windlasso/core/errors.hpp"

namespace windlasso {

namespace {

double level_of(VarKind kind, const TruthPresetParams& p) {
    switch (kind) {
        case VarKind::WindSpeed:
            return p.wind_level;
        case VarKind::Pressure:
            return p.pressure_level;
        case VarKind::Temperature:
            return p.temperature_level;
        default:
            return 0.0;  // azimuth components are zero-mean
    }
}

FittedModel skeleton(const ModelSpec& spec, int station_count) {
    spec.validate();
    if (station_count < 1) throw InvalidValueError("need at least one station");
    FittedModel truth;
    truth.spec = spec;
    truth.station_count = station_count;
    truth.method = "truth";
    truth.converged = true;
    truth.iterations_used = 0;
    for (int c = 0; c < station_count * kVarKinds; ++c) {
        FittedEquation eq;
        eq.target = variable_at(c, station_count);
        truth.equations.push_back(std::move(eq));
    }
    return truth;
}

void add_variance_base(FittedEquation& eq, const TruthPresetParams& p, const ModelSpec& spec) {
    eq.variance_coefficients.add(ColumnLabel::intercept(), p.sigma_base);
    if (p.sigma_diurnal_amp != 0.0) {
        // Nonnegative diurnal bumps on alternating knots keep sigma >= base.
        for (int i1 = 2; i1 <= spec.diurnal_count; ++i1) {
            if (i1 % 2 == 0) {
                eq.variance_coefficients.add(ColumnLabel::spline(i1, 1), p.sigma_diurnal_amp);
            }
        }
    }
    if (p.shock_pos != 0.0) {
        eq.variance_coefficients.add(ColumnLabel::shock_pos(1, eq.target, 1), p.shock_pos);
    }
    if (p.shock_neg != 0.0) {
        eq.variance_coefficients.add(ColumnLabel::shock_neg(1, eq.target, 1), p.shock_neg);
    }
}

}  // namespace

FittedModel make_iid_truth(const ModelSpec& spec, int station_count,
                           const TruthPresetParams& params) {
    FittedModel truth = skeleton(spec, station_count);
    for (auto& eq : truth.equations) {
        eq.mean_coefficients.add(ColumnLabel::intercept(), level_of(eq.target.kind, params));
        eq.variance_coefficients.add(ColumnLabel::intercept(), params.sigma_base);
    }
    return truth;
}

FittedModel make_diagonal_ar_truth(const ModelSpec& spec, int station_count, double ar,
                                   TruthPresetParams params) {
    params.ar = ar;
    FittedModel truth = skeleton(spec, station_count);
    for (auto& eq : truth.equations) {
        const double level = level_of(eq.target.kind, params);
        eq.mean_coefficients.add(ColumnLabel::intercept(), level * (1.0 - ar));
        eq.mean_coefficients.add(ColumnLabel::lag(1, eq.target), ar);
        eq.variance_coefficients.add(ColumnLabel::intercept(), params.sigma_base);
    }
    return truth;
}

FittedModel make_seasonal_tarch_truth(const ModelSpec& spec, int station_count,
                                      const TruthPresetParams& params) {
    FittedModel truth = skeleton(spec, station_count);
    const int M = station_count;
    for (auto& eq : truth.equations) {
        const double level = level_of(eq.target.kind, params);
        eq.mean_coefficients.add(ColumnLabel::intercept(), level * (1.0 - params.ar));
        eq.mean_coefficients.add(ColumnLabel::lag(1, eq.target), params.ar);
        if (eq.target.kind == VarKind::WindSpeed) {
            // Alternating-sign diurnal and annual level pattern.
            for (int i1 = 2; i1 <= spec.diurnal_count; ++i1) {
                const double sign = i1 % 2 == 0 ? 1.0 : -1.0;
                if (params.seasonal_amp != 0.0) {
                    eq.mean_coefficients.add(ColumnLabel::spline(i1, 1),
                                             sign * params.seasonal_amp);
                }
            }
            for (int i2 = 2; i2 <= spec.annual_count; ++i2) {
                const double sign = i2 % 2 == 0 ? 1.0 : -1.0;
                if (params.annual_amp != 0.0) {
                    eq.mean_coefficients.add(ColumnLabel::spline(1, i2),
                                             sign * params.annual_amp);
                }
            }
            if (params.cross_wind != 0.0 && M > 1) {
                const VariableRef neighbour{VarKind::WindSpeed,
                                            (eq.target.station + 1) % M};
                eq.mean_coefficients.add(ColumnLabel::lag(1, neighbour), params.cross_wind);
            }
        }
        add_variance_base(eq, params, spec);
    }
    return truth;
}

}  // namespace windlasso
