#include "windlasso/core/text.hpp"

#include <charconv>
#include <cstdio>

#include "windlasso/core/errors.hpp"

namespace windlasso {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

double parse_double(std::string_view token, long line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a number, got '" + std::string(token) + "'", line);
    }
    return value;
}

long parse_long(std::string_view token, long line) {
    long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line, char delim) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int parse_fixed_digits(std::string_view text, std::size_t pos, int count, long line) {
    int value = 0;
    for (int i = 0; i < count; ++i) {
        const char c = pos + static_cast<std::size_t>(i) < text.size()
                           ? text[pos + static_cast<std::size_t>(i)]
                           : '\0';
        if (c < '0' || c > '9') {
            throw ParseError("bad timestamp '" + std::string(text) + "'", line);
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

std::int64_t parse_timestamp(std::string_view text, long line) {
    // YYYY-MM-DD[T ]HH:MM:SS[Z]
    if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':') {
        throw ParseError("bad timestamp '" + std::string(text) + "'", line);
    }
    const int year = parse_fixed_digits(text, 0, 4, line);
    const int month = parse_fixed_digits(text, 5, 2, line);
    const int day = parse_fixed_digits(text, 8, 2, line);
    const int hour = parse_fixed_digits(text, 11, 2, line);
    const int minute = parse_fixed_digits(text, 14, 2, line);
    const int second = parse_fixed_digits(text, 17, 2, line);
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
        second > 59) {
        throw ParseError("bad timestamp '" + std::string(text) + "'", line);
    }
    return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

std::string format_timestamp(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02lld:%02lld:%02lld", y, m, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buffer;
}

}  // namespace windlasso
