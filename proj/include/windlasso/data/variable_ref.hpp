#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace windlasso {

/// The five observed channels per station, in dependent-vector order.
enum class VarKind : int { WindSpeed = 0, SinAz = 1, CosAz = 2, Pressure = 3, Temperature = 4 };

inline constexpr int kVarKinds = 5;

inline constexpr std::array<std::string_view, kVarKinds> kVarKindNames = {
    "wind_speed", "sin_az", "cos_az", "pressure", "temperature"};

/**
 * One (variable kind, station) coordinate of the dependent vector.
 *
 * The column layout is variable-major: all wind speeds, then all sin
 * components of the azimuth, then cos components, pressures, temperatures.
 * `station` is 0-based in memory; text forms like "wind_speed[1]" are 1-based.
 */
struct VariableRef {
    VarKind kind = VarKind::WindSpeed;
    int station = 0;

    auto operator<=>(const VariableRef&) const = default;
};

inline int column_of(VariableRef v, int station_count) {
    return static_cast<int>(v.kind) * station_count + v.station;
}

inline VariableRef variable_at(int column, int station_count) {
    return {static_cast<VarKind>(column / station_count), column % station_count};
}

std::string to_string(VariableRef v);

/// Parses "kind[station]" with a 1-based station index; throws ParseError.
VariableRef parse_variable_ref(std::string_view text);

std::string_view kind_name(VarKind k);
VarKind parse_var_kind(std::string_view name);

}  // namespace windlasso
