#include <xpow/interval.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace xpow
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

// Adding +0.0 maps -0.0 to +0.0 and leaves everything else alone.
double normalize_zero(double v) noexcept { return v + 0.0; }

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

} // namespace

Interval Interval::make(double lo, double hi)
{
    if (std::isnan(lo) || std::isnan(hi)) {
        throw std::invalid_argument("interval bound is NaN");
    }
    if (lo > hi) {
        return Interval{};
    }
    return Interval(normalize_zero(lo), normalize_zero(hi));
}

Interval Interval::entire() { return Interval(-inf, inf); }

bool Interval::subset_of(const Interval& other) const noexcept
{
    if (empty_) {
        return true;
    }
    return !other.empty_ && other.lo_ <= lo_ && hi_ <= other.hi_;
}

bool operator==(const Interval& a, const Interval& b) noexcept
{
    if (a.empty_ || b.empty_) {
        return a.empty_ == b.empty_;
    }
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

Interval hull(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty()) {
        return b;
    }
    if (b.is_empty()) {
        return a;
    }
    return Interval::make(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval negate(const Interval& a) noexcept
{
    if (a.is_empty()) {
        return a;
    }
    return Interval::make(-a.hi(), -a.lo());
}

Interval intersect(const Interval& a, const Interval& b) noexcept
{
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    return Interval::make(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval clamp_nonneg(const Interval& a) noexcept { return intersect(a, Interval::make(0.0, inf)); }

bool is_singleton(const Interval& a) noexcept { return !a.is_empty() && a.lo() == a.hi(); }

double step_up(double v, unsigned steps) noexcept
{
    for (unsigned i = 0; i < steps && v != inf; ++i) {
        v = std::nextafter(v, inf);
    }
    return v;
}

double step_down(double v, unsigned steps) noexcept
{
    for (unsigned i = 0; i < steps && v != -inf; ++i) {
        v = std::nextafter(v, -inf);
    }
    return v;
}

Interval widen_outward(const Interval& a, unsigned ulps) noexcept
{
    if (a.is_empty() || ulps == 0) {
        return a;
    }
    const double lo = std::isinf(a.lo()) ? a.lo() : step_down(a.lo(), ulps);
    const double hi = std::isinf(a.hi()) ? a.hi() : step_up(a.hi(), ulps);
    return Interval::make(lo, hi);
}

std::string format_bound(double v)
{
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, normalize_zero(v));
    return std::string(buf, res.ptr);
}

std::string to_string(const Interval& a)
{
    if (a.is_empty()) {
        return "empty";
    }
    return "[" + format_bound(a.lo()) + "," + format_bound(a.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

double parse_bound(std::string_view text)
{
    auto s = trim(text);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
        // from_chars would otherwise accept "+-1" after the strip
        if (!s.empty() && s.front() == '-') {
            throw std::invalid_argument("malformed bound '" + std::string(text) + "'");
        }
    }
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw std::invalid_argument("malformed bound '" + std::string(text) + "'");
    }
    if (std::isnan(v)) {
        throw std::invalid_argument("NaN bound '" + std::string(text) + "'");
    }
    return v;
}

Interval parse_interval(std::string_view text)
{
    const auto s = trim(text);
    if (s == "empty") {
        return Interval::empty();
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw std::invalid_argument("malformed interval '" + std::string(text) + "'");
    }
    const auto body = s.substr(1, s.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("malformed interval '" + std::string(text) + "'");
    }
    const double lo = parse_bound(body.substr(0, comma));
    const double hi = parse_bound(body.substr(comma + 1));
    if (lo > hi) {
        throw std::invalid_argument("inverted interval bounds '" + std::string(text) + "'");
    }
    return Interval::make(lo, hi);
}

} // namespace xpow
