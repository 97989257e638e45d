#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "windlasso/data/variable_ref.hpp"

namespace windlasso {

/**
 * Structured identity of one design-matrix column.
 *
 * Spline slots use 1-based indices where 1 means "factor absent": a plain
 * lag column is lag(j, v); its seasonal products are lag_spline(j, v, i1, i2)
 * with (i1, i2) != (1, 1). Shock columns carry only the diurnal slot.
 */
struct ColumnLabel {
    enum class Kind : int {
        Intercept = 0,
        Spline = 1,      // seasonal level term, indices (i1, i2)
        Lag = 2,         // plain autoregressive term, lag j on variable var
        LagSpline = 3,   // lag j times a seasonal factor
        ShockPos = 4,    // positive-part residual at lag h, optionally times diurnal spline
        ShockNeg = 5,    // negative-part residual at lag l
    };

    Kind kind = Kind::Intercept;
    int lag_index = 0;   // j, h, or l depending on kind
    VariableRef var{};   // lagged variable (Lag/LagSpline/Shock*)
    int i1 = 1;          // diurnal spline index, 1 = none
    int i2 = 1;          // annual spline index, 1 = none

    auto operator<=>(const ColumnLabel&) const = default;

    static ColumnLabel intercept() { return {}; }
    static ColumnLabel spline(int i1, int i2) {
        return {Kind::Spline, 0, {}, i1, i2};
    }
    static ColumnLabel lag(int j, VariableRef v) { return {Kind::Lag, j, v, 1, 1}; }
    static ColumnLabel lag_spline(int j, VariableRef v, int i1, int i2) {
        return {Kind::LagSpline, j, v, i1, i2};
    }
    static ColumnLabel shock_pos(int h, VariableRef v, int i1) {
        return {Kind::ShockPos, h, v, i1, 1};
    }
    static ColumnLabel shock_neg(int l, VariableRef v, int i1) {
        return {Kind::ShockNeg, l, v, i1, 1};
    }
};

std::string to_string(const ColumnLabel& label);
ColumnLabel parse_column_label(std::string_view text);

}  // namespace windlasso
