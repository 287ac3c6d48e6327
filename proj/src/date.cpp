#include "sigdim/util/date.hpp"

#include <cctype>
#include <cstdio>

#include "sigdim/error.hpp"

namespace sigdim {

namespace {

// Civil-from-days / days-from-civil, valid over the whole int range
// (Howard Hinnant's chrono algorithms).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
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

bool is_digits(const std::string& s, size_t pos, size_t n) {
    if (pos + n > s.size()) return false;
    for (size_t i = 0; i < n; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[pos + i]))) return false;
    return true;
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
    return Date(days_from_civil(year, month, day));
}

Date Date::parse(const std::string& s) {
    if (!is_digits(s, 0, 4) || s.size() < 10 || s[4] != '-' || s[7] != '-' ||
        !is_digits(s, 5, 2) || !is_digits(s, 8, 2)) {
        throw DataError("unparsable date: '" + s + "'");
    }
    if (s.size() > 10 && s[10] != 'T' && s[10] != ' ')
        throw DataError("unparsable date: '" + s + "'");
    const int y = std::stoi(s.substr(0, 4));
    const int m = std::stoi(s.substr(5, 2));
    const int d = std::stoi(s.substr(8, 2));
    if (m < 1 || m > 12 || d < 1 || d > 31)
        throw DataError("date out of range: '" + s + "'");
    return from_ymd(y, m, d);
}

std::string Date::to_string() const {
    int y, m, d;
    civil_from_days(days_, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

}  // namespace sigdim
