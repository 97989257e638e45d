#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "windlasso/data/panel.hpp"

namespace windlasso {

/// Column mapping and validation knobs for CSV ingestion.
struct LoadOptions {
    std::string timestamp_column = "timestamp";
    std::string station_column = "station";
    std::string wind_column = "wind_speed";
    std::string azimuth_column = "azimuth_deg";
    std::string pressure_column = "pressure";
    std::string temperature_column = "temperature";

    /// Expected spacing; every consecutive timestamp pair must match it.
    int step_seconds = 600;

    /// Station ordering for the dependent vector; empty means order of first
    /// appearance in the file.
    std::vector<std::string> station_order;

    /// Real measurements cannot be negative; synthetic panels from an
    /// unclamped Gaussian recursion may disable this.
    bool require_nonnegative_wind = true;

    /// Cap on how many missing (station, timestamp) pairs a GapError lists.
    std::size_t max_gap_report = 10;
};

/**
 * Reads a station-rows CSV into an aligned Panel.
 *
 * The stream carries a header row naming the six columns; `#`-prefixed lines
 * are ignored. Rows may arrive in any order. Every station must cover the
 * full timestamp grid or a GapError names the absent pairs. The azimuth
 * column is decomposed into sin/cos on load.
 */
Panel load_panel(std::istream& source, const LoadOptions& options = {});

Panel load_panel_file(const std::string& path, const LoadOptions& options = {});

/// Mirrors the input schema; `comment` lines (config hashes etc.) are written
/// first with a `#` prefix. Values use shortest round-trip formatting.
void write_panel(const Panel& panel, std::ostream& out,
                 const std::vector<std::string>& comments = {});

void write_panel_file(const Panel& panel, const std::string& path,
                      const std::vector<std::string>& comments = {});

}  // namespace windlasso
