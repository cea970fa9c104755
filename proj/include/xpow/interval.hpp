#ifndef XPOW_INTERVAL_HPP
#define XPOW_INTERVAL_HPP

#include <iosfwd>
#include <string>
#include <string_view>

namespace xpow
{

// Closed interval over the extended reals with double bounds.
//
// The empty set is a regular value. Non-empty intervals satisfy
// lo <= hi, never hold NaN, and never hold a negative zero bound.
class Interval
{
public:
    // The empty interval.
    Interval() = default;

    // [lo, hi], or empty when lo > hi. Throws std::invalid_argument on NaN.
    static Interval make(double lo, double hi);
    static Interval point(double v) { return make(v, v); }
    static Interval empty() { return Interval{}; }
    static Interval entire();

    bool is_empty() const noexcept { return empty_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

    bool contains(double v) const noexcept { return !empty_ && lo_ <= v && v <= hi_; }
    bool subset_of(const Interval& other) const noexcept;

    friend bool operator==(const Interval& a, const Interval& b) noexcept;

private:
    Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi), empty_(false) {}

    double lo_ = 0.0;
    double hi_ = 0.0;
    bool empty_ = true;
};

Interval hull(const Interval& a, const Interval& b) noexcept;
Interval negate(const Interval& a) noexcept;
Interval intersect(const Interval& a, const Interval& b) noexcept;

// a ∩ [0, +inf]
Interval clamp_nonneg(const Interval& a) noexcept;

bool is_singleton(const Interval& a) noexcept;

// Moves finite bounds outward by `ulps` representable steps. Infinite
// bounds stay put; an empty interval is returned unchanged.
Interval widen_outward(const Interval& a, unsigned ulps) noexcept;

// Moves a double `steps` representable values toward +inf (step_up) or
// -inf (step_down). Infinities are fixed points.
double step_up(double v, unsigned steps = 1) noexcept;
double step_down(double v, unsigned steps = 1) noexcept;

// Shortest round-trip decimal; "inf" / "-inf" for infinities.
std::string format_bound(double v);

// "[lo,hi]" or "empty".
std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

// Inverse of to_string. Also accepts "+inf" and surrounding blanks inside the
// brackets. Throws std::invalid_argument on malformed text, NaN bounds, or
// inverted bounds (an inverted pair is treated as a typo, not as "empty").
Interval parse_interval(std::string_view text);

// A single bound: decimal, "inf", "+inf", "-inf". Throws on anything else.
double parse_bound(std::string_view text);

} // namespace xpow

#endif
