#include "windlasso/data/panel_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

namespace {

struct RawRow {
    std::int64_t timestamp;
    int station;
    double wind, azimuth, pressure, temperature;
};

int require_column(const std::vector<std::string_view>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    throw ParseError("missing column '" + name + "' in header", 1);
}

}  // namespace

Panel load_panel(std::istream& source, const LoadOptions& options) {
    if (options.step_seconds <= 0) throw InvalidValueError("step_seconds must be positive");

    std::string line;
    long line_number = 0;

    // Header (after any comment lines).
    std::vector<std::string> header_fields;
    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (auto f : split_fields(line)) header_fields.emplace_back(f);
        break;
    }
    if (header_fields.empty()) throw ParseError("empty input, no header row");
    std::vector<std::string_view> header(header_fields.begin(), header_fields.end());
    const int col_ts = require_column(header, options.timestamp_column);
    const int col_station = require_column(header, options.station_column);
    const int col_wind = require_column(header, options.wind_column);
    const int col_az = require_column(header, options.azimuth_column);
    const int col_ap = require_column(header, options.pressure_column);
    const int col_temp = require_column(header, options.temperature_column);
    const std::size_t min_fields = static_cast<std::size_t>(
        std::max({col_ts, col_station, col_wind, col_az, col_ap, col_temp}) + 1);

    std::vector<std::string> stations = options.station_order;
    std::map<std::string, int, std::less<>> station_index;
    for (std::size_t i = 0; i < stations.size(); ++i) {
        station_index.emplace(stations[i], static_cast<int>(i));
    }
    const bool fixed_stations = !stations.empty();

    std::vector<RawRow> rows;
    std::int64_t min_ts = 0, max_ts = 0;
    bool have_ts = false;

    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_fields(line);
        if (fields.size() < min_fields) {
            throw ParseError("expected " + std::to_string(min_fields) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_number);
        }
        RawRow row;
        row.timestamp = parse_timestamp(fields[static_cast<std::size_t>(col_ts)], line_number);
        const std::string_view station_name = fields[static_cast<std::size_t>(col_station)];
        auto it = station_index.find(station_name);
        if (it == station_index.end()) {
            if (fixed_stations) {
                throw ParseError("unexpected station '" + std::string(station_name) + "'",
                                 line_number);
            }
            it = station_index.emplace(std::string(station_name),
                                       static_cast<int>(stations.size()))
                     .first;
            stations.emplace_back(station_name);
        }
        row.station = it->second;
        row.wind = parse_double(fields[static_cast<std::size_t>(col_wind)], line_number);
        row.azimuth = parse_double(fields[static_cast<std::size_t>(col_az)], line_number);
        row.pressure = parse_double(fields[static_cast<std::size_t>(col_ap)], line_number);
        row.temperature = parse_double(fields[static_cast<std::size_t>(col_temp)], line_number);
        if (options.require_nonnegative_wind && row.wind < 0.0) {
            throw InvalidValueError("negative wind speed " + format_double(row.wind) +
                                    " at line " + std::to_string(line_number));
        }
        if (!std::isfinite(row.azimuth)) {
            throw InvalidValueError("non-finite azimuth at line " + std::to_string(line_number));
        }
        if (!have_ts) {
            min_ts = max_ts = row.timestamp;
            have_ts = true;
        } else {
            min_ts = std::min(min_ts, row.timestamp);
            max_ts = std::max(max_ts, row.timestamp);
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("no data rows");

    const std::int64_t span = max_ts - min_ts;
    if (span % options.step_seconds != 0) {
        throw GapError("timestamps are not aligned to the " +
                       std::to_string(options.step_seconds) + "s grid");
    }
    const std::int64_t T = span / options.step_seconds + 1;
    const int M = static_cast<int>(stations.size());

    Panel panel;
    panel.stations = stations;
    panel.start_epoch = min_ts;
    panel.step_seconds = options.step_seconds;
    panel.values.setZero(T, 5 * M);
    panel.azimuth_deg.emplace(Eigen::MatrixXd::Zero(T, M));

    std::vector<char> seen(static_cast<std::size_t>(T) * static_cast<std::size_t>(M), 0);
    for (const RawRow& row : rows) {
        const std::int64_t offset = row.timestamp - min_ts;
        if (offset % options.step_seconds != 0) {
            throw GapError("timestamp " + format_timestamp(row.timestamp) +
                           " is off the sampling grid");
        }
        const std::int64_t t = offset / options.step_seconds;
        auto& flag = seen[static_cast<std::size_t>(t) * static_cast<std::size_t>(M) +
                          static_cast<std::size_t>(row.station)];
        if (flag) {
            throw ParseError("duplicate observation for station '" +
                             stations[static_cast<std::size_t>(row.station)] + "' at " +
                             format_timestamp(row.timestamp));
        }
        flag = 1;
        const auto [east_west, north_south] = decompose_azimuth(row.azimuth);
        panel.values(t, column_of({VarKind::WindSpeed, row.station}, M)) = row.wind;
        panel.values(t, column_of({VarKind::SinAz, row.station}, M)) = east_west;
        panel.values(t, column_of({VarKind::CosAz, row.station}, M)) = north_south;
        panel.values(t, column_of({VarKind::Pressure, row.station}, M)) = row.pressure;
        panel.values(t, column_of({VarKind::Temperature, row.station}, M)) = row.temperature;
        (*panel.azimuth_deg)(t, row.station) = row.azimuth;
    }

    std::vector<std::string> missing;
    std::size_t missing_total = 0;
    for (std::int64_t t = 0; t < T; ++t) {
        for (int m = 0; m < M; ++m) {
            if (!seen[static_cast<std::size_t>(t) * static_cast<std::size_t>(M) +
                      static_cast<std::size_t>(m)]) {
                ++missing_total;
                if (missing.size() < options.max_gap_report) {
                    missing.push_back("(" + stations[static_cast<std::size_t>(m)] + ", " +
                                      format_timestamp(panel.timestamp(t)) + ")");
                }
            }
        }
    }
    if (missing_total > 0) {
        std::string msg = std::to_string(missing_total) + " missing observation(s):";
        for (const auto& cell : missing) msg += " " + cell;
        if (missing_total > missing.size()) msg += " ...";
        throw GapError(msg, std::move(missing));
    }
    return panel;
}

Panel load_panel_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_panel(in, options);
}

void write_panel(const Panel& panel, std::ostream& out,
                 const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "timestamp,station,wind_speed,azimuth_deg,pressure,temperature\n";
    const int M = panel.station_count();
    for (std::int64_t t = 0; t < panel.rows(); ++t) {
        const std::string ts = format_timestamp(panel.timestamp(t));
        for (int m = 0; m < M; ++m) {
            const double az =
                panel.azimuth_deg
                    ? (*panel.azimuth_deg)(t, m)
                    : azimuth_from_components(panel.value(t, {VarKind::SinAz, m}),
                                              panel.value(t, {VarKind::CosAz, m}));
            out << ts << ',' << panel.stations[static_cast<std::size_t>(m)] << ','
                << format_double(panel.value(t, {VarKind::WindSpeed, m})) << ','
                << format_double(az) << ','
                << format_double(panel.value(t, {VarKind::Pressure, m})) << ','
                << format_double(panel.value(t, {VarKind::Temperature, m})) << "\n";
        }
    }
}

void write_panel_file(const Panel& panel, const std::string& path,
                      const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_panel(panel, out, comments);
}

}  // namespace windlasso
