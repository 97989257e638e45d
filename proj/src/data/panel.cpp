#include "windlasso/data/panel.hpp"

#include <cmath>
#include <numbers>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

bool Panel::same_contents(const Panel& other) const {
    if (stations != other.stations || start_epoch != other.start_epoch ||
        step_seconds != other.step_seconds) {
        return false;
    }
    if (values.rows() != other.values.rows() || values.cols() != other.values.cols()) {
        return false;
    }
    if (values != other.values) return false;
    if (azimuth_deg.has_value() != other.azimuth_deg.has_value()) return false;
    if (azimuth_deg && *azimuth_deg != *other.azimuth_deg) return false;
    return true;
}

std::pair<double, double> decompose_azimuth(double azimuth_degrees) {
    if (!std::isfinite(azimuth_degrees)) {
        throw InvalidValueError("azimuth must be finite, got " + format_double(azimuth_degrees));
    }
    const double radians = azimuth_degrees * std::numbers::pi / 180.0;
    return {std::sin(radians), std::cos(radians)};
}

double azimuth_from_components(double east_west, double north_south) {
    double deg = std::atan2(east_west, north_south) * 180.0 / std::numbers::pi;
    if (deg < 0.0) deg += 360.0;
    return deg;
}

std::string to_string(VariableRef v) {
    return std::string(kind_name(v.kind)) + "[" + std::to_string(v.station + 1) + "]";
}

std::string_view kind_name(VarKind k) { return kVarKindNames[static_cast<std::size_t>(k)]; }

VarKind parse_var_kind(std::string_view name) {
    for (int i = 0; i < kVarKinds; ++i) {
        if (kVarKindNames[static_cast<std::size_t>(i)] == name) return static_cast<VarKind>(i);
    }
    throw ParseError("unknown variable kind '" + std::string(name) + "'");
}

VariableRef parse_variable_ref(std::string_view text) {
    const auto open = text.find('[');
    if (open == std::string_view::npos || text.back() != ']') {
        throw ParseError("bad variable reference '" + std::string(text) + "'");
    }
    const VarKind kind = parse_var_kind(text.substr(0, open));
    const long station = parse_long(text.substr(open + 1, text.size() - open - 2));
    if (station < 1) throw ParseError("station index must be >= 1 in '" + std::string(text) + "'");
    return {kind, static_cast<int>(station - 1)};
}

}  // namespace windlasso
