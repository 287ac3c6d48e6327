#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sigdim {

// Calendar day (UTC), stored as days since 1970-01-01. Timestamps are
// truncated to the day when parsed.
class Date {
public:
    Date() = default;
    explicit Date(std::int64_t days_since_epoch) : days_(days_since_epoch) {}
    static Date from_ymd(int year, int month, int day);

    // Accepts "YYYY-MM-DD" optionally followed by a time suffix
    // ("YYYY-MM-DDTHH:MM:SS", "YYYY-MM-DD HH:MM:SS", trailing zone markers),
    // which is ignored. Throws DataError on anything else.
    static Date parse(const std::string& s);

    std::int64_t days() const { return days_; }
    std::string to_string() const;  // "YYYY-MM-DD"

    Date operator+(std::int64_t d) const { return Date(days_ + d); }
    Date operator-(std::int64_t d) const { return Date(days_ - d); }
    std::int64_t operator-(Date other) const { return days_ - other.days_; }
    Date& operator++() { ++days_; return *this; }
    auto operator<=>(const Date&) const = default;

private:
    std::int64_t days_ = 0;
};

// Inclusive range of consecutive calendar days.
struct DateRange {
    Date start;
    Date end;

    bool valid() const { return start <= end; }
    std::int64_t length() const { return end - start + 1; }
    bool contains(Date d) const { return start <= d && d <= end; }
    Date day(std::int64_t i) const { return start + i; }

    static DateRange intersect(const DateRange& a, const DateRange& b) {
        return {std::max(a.start, b.start), std::min(a.end, b.end)};
    }
};

}  // namespace sigdim
