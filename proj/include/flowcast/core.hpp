#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flowcast {

// ---------------------------------------------------------------------------
// Error hierarchy. The CLI maps these onto exit codes: schema/io/data -> 3,
// numeric -> 4, usage -> 2.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable stream or file.
class io_error : public error {
public:
    using error::error;
};

/// Input does not match a documented schema (missing column, wrong artifact).
class schema_error : public error {
public:
    using error::error;
};

/// Data violates an operation precondition (empty input, insufficient data,
/// degenerate series, protocol/sequencing violations).
class data_error : public error {
public:
    using error::error;
};

/// Numerical failure (rank-deficient design, no viable order).
class numeric_error : public error {
public:
    using error::error;
};

// ---------------------------------------------------------------------------
// Calendar dates. A thin value wrapper over days-since-epoch backed by
// std::chrono's civil calendar.
// ---------------------------------------------------------------------------

class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::int32_t serial_days) : serial_(serial_days) {}

    static Date from_ymd(int year, unsigned month, unsigned day) {
        using namespace std::chrono;
        const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                 std::chrono::day{day}};
        if (!ymd.ok()) {
            throw data_error("invalid calendar date " + std::to_string(year) + "-" +
                             std::to_string(month) + "-" + std::to_string(day));
        }
        return Date{static_cast<std::int32_t>(sys_days{ymd}.time_since_epoch().count())};
    }

    /// Parses "YYYY-MM-DD". Returns nullopt on malformed input.
    static std::optional<Date> parse(std::string_view iso) {
        int y = 0;
        unsigned m = 0, d = 0;
        if (!parse_ymd(iso, y, m, d)) return std::nullopt;
        using namespace std::chrono;
        const year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                 std::chrono::day{d}};
        if (!ymd.ok()) return std::nullopt;
        return Date{static_cast<std::int32_t>(sys_days{ymd}.time_since_epoch().count())};
    }

    [[nodiscard]] constexpr std::int32_t serial() const { return serial_; }

    [[nodiscard]] std::string to_string() const {
        using namespace std::chrono;
        const year_month_day ymd{sys_days{days{serial_}}};
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
        return buf;
    }

    /// 0 = Sunday ... 6 = Saturday (std::chrono c_encoding).
    [[nodiscard]] unsigned weekday() const {
        using namespace std::chrono;
        return std::chrono::weekday{sys_days{days{serial_}}}.c_encoding();
    }

    [[nodiscard]] bool is_weekend() const {
        const unsigned wd = weekday();
        return wd == 0 || wd == 6;
    }

    friend constexpr Date operator+(Date a, int days) { return Date{a.serial_ + days}; }
    friend constexpr Date operator-(Date a, int days) { return Date{a.serial_ - days}; }
    friend constexpr int operator-(Date a, Date b) { return a.serial_ - b.serial_; }
    friend constexpr auto operator<=>(Date, Date) = default;

private:
    static bool parse_ymd(std::string_view s, int& y, unsigned& m, unsigned& d) {
        if (s.size() < 10 || s[4] != '-' || s[7] != '-') return false;
        auto digits = [](std::string_view v) {
            for (char c : v)
                if (c < '0' || c > '9') return false;
            return !v.empty();
        };
        if (!digits(s.substr(0, 4)) || !digits(s.substr(5, 2)) || !digits(s.substr(8, 2)))
            return false;
        y = std::stoi(std::string(s.substr(0, 4)));
        m = static_cast<unsigned>(std::stoi(std::string(s.substr(5, 2))));
        d = static_cast<unsigned>(std::stoi(std::string(s.substr(8, 2))));
        return true;
    }

    std::int32_t serial_ = 0;
};

/// A calendar instant with minute resolution (local time, no zone handling).
struct DateTime {
    Date date;
    int minute_of_day = 0;  // [0, 1440)

    /// Parses "YYYY-MM-DD HH:MM[:SS]" or "YYYY-MM-DDTHH:MM[:SS]".
    static std::optional<DateTime> parse(std::string_view s) {
        if (s.size() < 16) return std::nullopt;
        if (s[10] != ' ' && s[10] != 'T') return std::nullopt;
        const auto date = Date::parse(s.substr(0, 10));
        if (!date) return std::nullopt;
        const std::string_view hm = s.substr(11);
        if (hm.size() < 5 || hm[2] != ':') return std::nullopt;
        auto num2 = [](std::string_view v, int& out) {
            if (v.size() < 2 || v[0] < '0' || v[0] > '9' || v[1] < '0' || v[1] > '9')
                return false;
            out = (v[0] - '0') * 10 + (v[1] - '0');
            return true;
        };
        int hh = 0, mm = 0;
        if (!num2(hm.substr(0, 2), hh) || !num2(hm.substr(3, 2), mm)) return std::nullopt;
        if (hh > 23 || mm > 59) return std::nullopt;
        if (hm.size() >= 8) {
            int ss = 0;
            if (hm[5] != ':' || !num2(hm.substr(6, 2), ss) || ss > 59) return std::nullopt;
        } else if (hm.size() != 5) {
            return std::nullopt;
        }
        return DateTime{*date, hh * 60 + mm};
    }

    friend constexpr auto operator<=>(const DateTime&, const DateTime&) = default;
};

// ---------------------------------------------------------------------------
// The six fixed 4-hour daily windows.
// ---------------------------------------------------------------------------

enum class Segment : int {
    h03_07 = 0,
    h07_11 = 1,
    h11_15 = 2,
    h15_19 = 3,
    h19_23 = 4,
    h23_03 = 5,  // spans midnight; anchored on the day it starts at 23:00
};

inline constexpr std::array<Segment, 6> kAllSegments = {
    Segment::h03_07, Segment::h07_11, Segment::h11_15,
    Segment::h15_19, Segment::h19_23, Segment::h23_03};

[[nodiscard]] inline std::string_view segment_label(Segment s) {
    switch (s) {
        case Segment::h03_07: return "03-07";
        case Segment::h07_11: return "07-11";
        case Segment::h11_15: return "11-15";
        case Segment::h15_19: return "15-19";
        case Segment::h19_23: return "19-23";
        case Segment::h23_03: return "23-03";
    }
    throw data_error("unknown segment");
}

[[nodiscard]] inline std::optional<Segment> parse_segment(std::string_view label) {
    for (Segment s : kAllSegments)
        if (segment_label(s) == label) return s;
    return std::nullopt;
}

/// Minute of day at which a segment's window opens.
[[nodiscard]] inline int segment_start_minute(Segment s) {
    return (static_cast<int>(s) * 4 + 3) * 60;
}

/// Maps an instant to the window containing it. Instants in [00:00, 03:00)
/// belong to the previous day's 23-03 window, so the returned date may differ
/// from the instant's calendar date.
[[nodiscard]] inline std::pair<Segment, Date> segment_of(const DateTime& t) {
    if (t.minute_of_day < 3 * 60) return {Segment::h23_03, t.date - 1};
    if (t.minute_of_day >= 23 * 60) return {Segment::h23_03, t.date};
    const int idx = (t.minute_of_day - 3 * 60) / 240;
    return {static_cast<Segment>(idx), t.date};
}

// ---------------------------------------------------------------------------
// SegmentSeries: the ordered daily count sequence for one station window.
// ---------------------------------------------------------------------------

struct SegmentSeries {
    std::string station;
    Segment segment = Segment::h03_07;
    std::vector<Date> dates;    // strictly increasing
    std::vector<double> counts; // persons per 4-hour window, >= 0, finite

    [[nodiscard]] std::size_t size() const { return counts.size(); }
    [[nodiscard]] bool empty() const { return counts.empty(); }

    void validate() const {
        if (dates.size() != counts.size())
            throw data_error("segment series: dates/counts length mismatch");
        for (std::size_t i = 1; i < dates.size(); ++i)
            if (!(dates[i - 1] < dates[i]))
                throw data_error("segment series: dates not strictly increasing");
        for (double c : counts)
            if (!(c >= 0.0) || !std::isfinite(c))
                throw data_error("segment series: count negative or non-finite");
    }

    /// Rows [0, n - tail_len) of the series.
    [[nodiscard]] SegmentSeries head(std::size_t tail_len) const {
        SegmentSeries out{station, segment, {}, {}};
        const std::size_t n = size() > tail_len ? size() - tail_len : 0;
        out.dates.assign(dates.begin(), dates.begin() + static_cast<std::ptrdiff_t>(n));
        out.counts.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }

    /// The last tail_len rows of the series.
    [[nodiscard]] SegmentSeries tail(std::size_t tail_len) const {
        SegmentSeries out{station, segment, {}, {}};
        const std::size_t n = size() > tail_len ? size() - tail_len : 0;
        out.dates.assign(dates.begin() + static_cast<std::ptrdiff_t>(n), dates.end());
        out.counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(n), counts.end());
        return out;
    }

    void push_back(Date d, double count) {
        dates.push_back(d);
        counts.push_back(count);
    }
};

}  // namespace flowcast
