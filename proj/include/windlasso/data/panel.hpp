#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "windlasso/data/variable_ref.hpp"

namespace windlasso {

/**
 * Aligned multi-station weather panel at a fixed observation step.
 *
 * `values` is T x (5 * M) in variable-major column order (see VariableRef).
 * Timestamps are an arithmetic grid: start_epoch + t * step_seconds; the
 * panel never holds gaps. Instances are immutable by convention after
 * construction and safe to share across fitting threads.
 *
 * `azimuth_deg`, when present, carries the raw wind directions the sin/cos
 * columns were derived from; writing and re-reading a panel reproduces the
 * exact doubles because the CSV layer emits shortest round-trip decimals.
 */
struct Panel {
    std::vector<std::string> stations;
    std::int64_t start_epoch = 0;
    int step_seconds = 600;
    Eigen::MatrixXd values;                       // T x 5M
    std::optional<Eigen::MatrixXd> azimuth_deg;   // T x M

    std::int64_t rows() const { return values.rows(); }
    int station_count() const { return static_cast<int>(stations.size()); }
    int column_count() const { return static_cast<int>(values.cols()); }

    std::int64_t timestamp(std::int64_t t) const { return start_epoch + t * step_seconds; }

    int column(VariableRef v) const { return column_of(v, station_count()); }
    double value(std::int64_t t, VariableRef v) const { return values(t, column(v)); }

    bool same_contents(const Panel& other) const;
};

/// sin/cos pair of a wind direction given in degrees (east-west, north-south).
/// Throws InvalidValueError for non-finite input.
std::pair<double, double> decompose_azimuth(double azimuth_degrees);

/// Inverse mapping to degrees in [0, 360).
double azimuth_from_components(double east_west, double north_south);

}  // namespace windlasso
