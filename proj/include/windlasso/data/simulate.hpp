#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windlasso/data/panel.hpp"
#include "windlasso/model/fitted_model.hpp"

namespace windlasso {

struct SimulationOptions {
    std::int64_t length = 10000;  // rows kept after burn-in
    std::int64_t burn_in = 1000;

    /// With the walk enabled, the sin/cos azimuth channels come from a latent
    /// angle random walk and always sit on the unit circle. Disabled, those
    /// channels follow the plain linear recursion like every other column
    /// (statistical oracle mode; the unit-circle property then does not hold).
    bool azimuth_angle_walk = true;
    double angle_step_sd_deg = 8.0;

    std::vector<std::string> stations;  // default "station_1".."station_M"
    std::int64_t start_epoch = 1230768000;  // 2009-01-01T00:00:00
    int step_seconds = 600;
};

/**
 * Draws a synthetic panel from the model recursion with standard Gaussian
 * innovations. Deterministic in (truth, seed, options). The homogeneous mean
 * recursion must be stable; an estimated spectral radius >= 1 raises
 * StabilityError.
 */
Panel simulate_panel(const FittedModel& truth, std::uint64_t seed,
                     const SimulationOptions& options);

/// Numeric growth-rate estimate of the mean recursion's companion spectral
/// radius, probing several seasonal phases.
double estimate_spectral_radius(const FittedModel& truth);

}  // namespace windlasso
