#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace windlasso {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Strict double parse of the whole token; throws ParseError on trailing junk.
double parse_double(std::string_view token, long line = -1);

long parse_long(std::string_view token, long line = -1);

/// Splits on a single-character delimiter; keeps empty fields.
std::vector<std::string_view> split_fields(std::string_view line, char delim = ',');

// --- naive calendar timestamps -------------------------------------------
//
// Timestamps are fixed-step sample labels, not civil time: no timezones, no
// DST. Format is ISO-8601 "YYYY-MM-DDTHH:MM:SS" (a space separator and a
// trailing 'Z' are accepted on input).

std::int64_t parse_timestamp(std::string_view text, long line = -1);
std::string format_timestamp(std::int64_t epoch_seconds);

}  // namespace windlasso
