#pragma once

#include "windlasso/model/fitted_model.hpp"

namespace windlasso {

/**
 * Hand-built coefficient sets for synthetic panels.
 *
 * Channel levels default to plausible sensor magnitudes (wind around 8 m/s,
 * pressure around 1010 hPa) so synthetic wind speeds stay positive in
 * practice. All presets keep the recursion comfortably stable.
 */
struct TruthPresetParams {
    double ar = 0.0;             // own lag-1 coefficient on every channel
    double cross_wind = 0.0;     // wind_m <- wind_{m+1} lag-1 coupling
    double seasonal_amp = 0.0;   // diurnal level amplitude on wind channels
    double annual_amp = 0.0;     // annual level amplitude on wind channels
    double sigma_base = 0.5;     // constant part of the conditional scale
    double sigma_diurnal_amp = 0.0;  // diurnal variance pattern (>= 0)
    double shock_pos = 0.0;      // reaction to own positive residuals
    double shock_neg = 0.0;      // reaction to own negative residuals (<= 0 keeps sigma positive)
    double wind_level = 8.0;
    double pressure_level = 1010.0;
    double temperature_level = 10.0;
};

/// No dynamics at all: iid Gaussian columns with the given levels and scale.
FittedModel make_iid_truth(const ModelSpec& spec, int station_count,
                           const TruthPresetParams& params = {});

/// Lag-1 diagonal autoregression with constant scale.
FittedModel make_diagonal_ar_truth(const ModelSpec& spec, int station_count, double ar,
                                   TruthPresetParams params = {});

/// Full synthetic truth: seasonal mean levels, own + cross lags, diurnal
/// variance pattern and asymmetric shock terms.
FittedModel make_seasonal_tarch_truth(const ModelSpec& spec, int station_count,
                                      const TruthPresetParams& params);

}  // namespace windlasso
