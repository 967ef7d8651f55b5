#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace innercore {

// Calendar day stored as days since 1970-01-01 in the bucketing timezone.
struct Date {
  std::int32_t days = 0;
  auto operator<=>(const Date&) const = default;
};

// Proleptic Gregorian conversions (no timezone, no leap seconds).
inline Date date_from_ymd(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return Date{static_cast<std::int32_t>(era * 146097 + static_cast<int>(doe) - 719468)};
}

inline void ymd_from_date(Date date, int& y, unsigned& m, unsigned& d) {
  std::int64_t z = static_cast<std::int64_t>(date.days) + 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yy + (m <= 2));
}

inline std::string to_string(Date date) {
  int y = 0;
  unsigned m = 0, d = 0;
  ymd_from_date(date, y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", y, m, d);
  return buf;
}

inline Date parse_date(const std::string& s) {
  int y = 0;
  unsigned m = 0, d = 0;
  if (std::sscanf(s.c_str(), "%d-%u-%u", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 || d > 31)
    throw std::invalid_argument("bad date (want YYYY-MM-DD): " + s);
  return date_from_ymd(y, m, d);
}

// Buckets an epoch timestamp into the [00:00, 24:00) day of the given UTC-offset timezone.
inline Date day_of_timestamp(std::int64_t epoch_seconds, int tz_offset_minutes) {
  const std::int64_t local = epoch_seconds + static_cast<std::int64_t>(tz_offset_minutes) * 60;
  std::int64_t day = local / 86400;
  if (local % 86400 < 0) --day;
  return Date{static_cast<std::int32_t>(day)};
}

}  // namespace innercore
