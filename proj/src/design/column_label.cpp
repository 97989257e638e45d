#include "windlasso/design/column_label.hpp"

#include <vector>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/text.hpp"

namespace windlasso {

std::string to_string(const ColumnLabel& label) {
    using Kind = ColumnLabel::Kind;
    switch (label.kind) {
        case Kind::Intercept:
            return "intercept";
        case Kind::Spline:
            return "spline(" + std::to_string(label.i1) + "," + std::to_string(label.i2) + ")";
        case Kind::Lag:
            return "lag(" + std::to_string(label.lag_index) + "," + to_string(label.var) + ")";
        case Kind::LagSpline:
            return "lag_spline(" + std::to_string(label.lag_index) + "," + to_string(label.var) + "," +
                   std::to_string(label.i1) + "," + std::to_string(label.i2) + ")";
        case Kind::ShockPos:
            return "shock_pos(" + std::to_string(label.lag_index) + "," + to_string(label.var) + "," +
                   std::to_string(label.i1) + ")";
        case Kind::ShockNeg:
            return "shock_neg(" + std::to_string(label.lag_index) + "," + to_string(label.var) + "," +
                   std::to_string(label.i1) + ")";
    }
    throw InvalidValueError("unreachable label kind");
}

namespace {

std::vector<std::string_view> args_of(std::string_view text, std::string_view head) {
    // head(...) -> comma-separated argument list
    if (text.substr(0, head.size()) != head || text.size() < head.size() + 2 ||
        text[head.size()] != '(' || text.back() != ')') {
        throw ParseError("bad column label '" + std::string(text) + "'");
    }
    return split_fields(text.substr(head.size() + 1, text.size() - head.size() - 2));
}

}  // namespace

ColumnLabel parse_column_label(std::string_view text) {
    if (text == "intercept") return ColumnLabel::intercept();
    const auto head_end = text.find('(');
    if (head_end == std::string_view::npos) {
        throw ParseError("bad column label '" + std::string(text) + "'");
    }
    const std::string_view head = text.substr(0, head_end);
    const auto args = args_of(text, head);
    if (head == "spline" && args.size() == 2) {
        return ColumnLabel::spline(static_cast<int>(parse_long(args[0])),
                                   static_cast<int>(parse_long(args[1])));
    }
    if (head == "lag" && args.size() == 2) {
        return ColumnLabel::lag(static_cast<int>(parse_long(args[0])),
                                parse_variable_ref(args[1]));
    }
    if (head == "lag_spline" && args.size() == 4) {
        return ColumnLabel::lag_spline(static_cast<int>(parse_long(args[0])),
                                       parse_variable_ref(args[1]),
                                       static_cast<int>(parse_long(args[2])),
                                       static_cast<int>(parse_long(args[3])));
    }
    if (head == "shock_pos" && args.size() == 3) {
        return ColumnLabel::shock_pos(static_cast<int>(parse_long(args[0])),
                                      parse_variable_ref(args[1]),
                                      static_cast<int>(parse_long(args[2])));
    }
    if (head == "shock_neg" && args.size() == 3) {
        return ColumnLabel::shock_neg(static_cast<int>(parse_long(args[0])),
                                      parse_variable_ref(args[1]),
                                      static_cast<int>(parse_long(args[2])));
    }
    throw ParseError("bad column label '" + std::string(text) + "'");
}

}  // namespace windlasso
