#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "gridfe/errors.hpp"

namespace gridfe {

/// Hours since 1970-01-01T00:00:00Z. All timestamps are hour-beginning UTC.
using UtcHour = std::int64_t;

/// Days since 1970-01-01 (UTC).
using Day = std::int32_t;

struct CivilDate {
    int year;
    int month; // 1..12
    int day;   // 1..31
};

// Days-from-civil / civil-from-days, valid over the proleptic Gregorian
// calendar (Hinnant's algorithm).
constexpr Day days_from_civil(int y, int m, int d) noexcept {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return static_cast<Day>(era * 146097 + static_cast<int>(doe) - 719468);
}

constexpr CivilDate civil_from_days(Day z) noexcept {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

constexpr Day day_of_hour(UtcHour h) noexcept {
    return static_cast<Day>(h >= 0 ? h / 24 : (h - 23) / 24);
}

constexpr int hour_of_day(UtcHour h) noexcept {
    return static_cast<int>(h - static_cast<std::int64_t>(day_of_hour(h)) * 24);
}

/// Parse an RFC-3339 timestamp at hour resolution ("2023-06-01T05:00:00Z").
/// Only Z / +00:00 offsets are accepted; minutes and seconds must be zero.
inline UtcHour parse_rfc3339_hour(const std::string& s) {
    int y = 0, mo = 0, d = 0, hh = 0, mi = 0, se = 0;
    char tz[8] = {0};
    int n = std::sscanf(s.c_str(), "%d-%d-%dT%d:%d:%d%7s", &y, &mo, &d, &hh, &mi, &se, tz);
    if (n < 7)
        throw ParseError("bad timestamp '" + s + "' (want YYYY-MM-DDTHH:MM:SSZ)");
    const std::string off(tz);
    if (off != "Z" && off != "z" && off != "+00:00")
        throw ParseError("timestamp '" + s + "' must be UTC (Z or +00:00)");
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || hh < 0 || hh > 23 || mi != 0 || se != 0)
        throw ParseError("timestamp '" + s + "' is not an hour-beginning UTC instant");
    return static_cast<UtcHour>(days_from_civil(y, mo, d)) * 24 + hh;
}

inline std::string format_rfc3339_hour(UtcHour h) {
    const CivilDate c = civil_from_days(day_of_hour(h));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00:00Z", c.year, c.month, c.day,
                  hour_of_day(h));
    return buf;
}

inline std::string format_date(Day d) {
    const CivilDate c = civil_from_days(d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

inline Day parse_date(const std::string& s) {
    int y = 0, mo = 0, d = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &mo, &d) != 3 || mo < 1 || mo > 12 || d < 1 ||
        d > 31)
        throw ParseError("bad date '" + s + "' (want YYYY-MM-DD)");
    return days_from_civil(y, mo, d);
}

} // namespace gridfe
