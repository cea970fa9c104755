#include <xpow/pow_nonneg.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xpow
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double max_finite = std::numeric_limits<double>::max();

// Below this the residual a*b - fl(a*b) may not be representable.
const double exact_residual_floor = std::ldexp(1.0, -969);

constexpr double max_fast_exponent = 64.0;

// Enclosure of a*b for finite a, b > 0 using the FMA residual to learn
// on which side of the exact product fl(a*b) landed.
PointPowerBounds mul_bounds(double a, double b)
{
    const double p = a * b;
    if (p == inf) {
        return {max_finite, inf};
    }
    if (p < exact_residual_floor) {
        return {std::max(0.0, step_down(p)), step_up(p)};
    }
    const double e = std::fma(a, b, -p);
    if (e > 0) {
        return {p, step_up(p)};
    }
    if (e < 0) {
        return {step_down(p), p};
    }
    return {p, p};
}

PointPowerBounds integer_power_bounds(double a, int n)
{
    PointPowerBounds acc{1.0, 1.0};
    for (int i = 0; i < n; ++i) {
        const double lo = acc.down == 0.0 ? 0.0 : mul_bounds(acc.down, a).down;
        const double hi = acc.up == inf ? inf : mul_bounds(acc.up, a).up;
        acc = {lo, hi};
    }
    return acc;
}

// Limit of a^b as a -> 0+.
double limit_at_zero(double b) noexcept
{
    if (b > 0) {
        return 0.0;
    }
    return b == 0 ? 1.0 : inf;
}

} // namespace

PointPowerBounds pow_point_bounds(double a, double b, PowConfig cfg)
{
    if (std::isnan(a) || std::isnan(b)) {
        throw std::invalid_argument("pow_point_bounds: NaN argument");
    }
    if (a < 0) {
        throw std::domain_error("pow_point_bounds: negative base");
    }
    if (a == 0) {
        if (b < 0) {
            throw std::domain_error("pow_point_bounds: zero base with negative exponent");
        }
        return b == 0 ? PointPowerBounds{1.0, 1.0} : PointPowerBounds{0.0, 0.0};
    }
    if (std::isinf(a) || std::isinf(b)) {
        // IEEE pow returns the exact limits here.
        const double r = std::pow(a, b);
        return {r, r};
    }
    if (b == 0 || a == 1) {
        return {1.0, 1.0};
    }
    if (b == 1) {
        return {a, a};
    }
    if (b > 0 && b <= max_fast_exponent && std::trunc(b) == b) {
        return integer_power_bounds(a, static_cast<int>(b));
    }

    const double r = std::pow(a, b);
    PointPowerBounds out{std::max(0.0, step_down(r, cfg.slack_ulps)), step_up(r, cfg.slack_ulps)};

    // Between two exact integer powers a^b is sandwiched by them; clamping
    // keeps the result consistent with the exact path near integers.
    if (b > 0 && b < max_fast_exponent) {
        const auto below = integer_power_bounds(a, static_cast<int>(std::floor(b)));
        const auto above = integer_power_bounds(a, static_cast<int>(std::ceil(b)));
        const auto& small = a > 1 ? below : above;
        const auto& large = a > 1 ? above : below;
        out.down = std::max(out.down, small.down);
        out.up = std::min(out.up, large.up);
    }
    return out;
}

Interval pow_nonneg(const Interval& x, const Interval& y, PowConfig cfg)
{
    const auto base = clamp_nonneg(x);
    if (base.is_empty() || y.is_empty()) {
        return Interval::empty();
    }

    if (base.hi() == 0) {
        // Only the point 0: 0^b = 0 for b > 0, 0^0 = 1, nothing for b < 0.
        auto r = Interval::empty();
        if (y.hi() > 0) {
            r = hull(r, Interval::point(0.0));
        }
        if (y.contains(0.0)) {
            r = hull(r, Interval::point(1.0));
        }
        return r;
    }

    // a^b is monotone in a for fixed b and monotone in b for fixed a > 0,
    // so the extrema over the box sit at its corners. A zero lower base
    // bound stands for the limit a -> 0+, which also covers the point a = 0.
    double lo = inf;
    double hi = -inf;
    for (const double a : {base.lo(), base.hi()}) {
        for (const double b : {y.lo(), y.hi()}) {
            PointPowerBounds pb{};
            if (a == 0) {
                const double v = limit_at_zero(b);
                pb = {v, v};
            } else {
                pb = pow_point_bounds(a, b, cfg);
            }
            lo = std::min(lo, pb.down);
            hi = std::max(hi, pb.up);
        }
    }
    return Interval::make(lo, hi);
}

} // namespace xpow
