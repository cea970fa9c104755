#include <xpow/pow.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace xpow
{

namespace
{

constexpr std::int64_t max_exact_int = std::int64_t{1} << 53;

// a^(b + delta) for finite a > 0, a != 1, and a correction |delta| far
// below one ulp of b. Uses a^delta = 1 + delta*ln(a) to first order; the
// dropped terms are below 1e-25 relative. On top of the error of std::pow
// this adds one rounding, so the result is pushed out by `slack` steps
// and callers only use it when slack covers 1.5 ulps.
std::optional<PointPowerBounds> shifted_point_bounds(double a, double b, double delta, unsigned slack)
{
    const double v = std::pow(a, b);
    if (!std::isnormal(v) || std::isinf(v)) {
        return std::nullopt;
    }
    const double c = std::fma(v, std::log(a) * delta, v);
    if (!std::isnormal(c) || std::isinf(c)) {
        return std::nullopt;
    }
    return PointPowerBounds{step_down(c, slack), step_up(c, slack)};
}

// p0 over the enclosure of an exact exponent. When the rational is not
// a machine number the one-ulp enclosure costs about an ulp per bound;
// evaluating at the exact rational recovers it. The power is monotone in
// the base for a fixed exponent, so only the two base corners matter.
Interval pow_nonneg_exact(const Interval& x, const ExactExponent& e, PowConfig cfg)
{
    const auto approx = enclose(e);
    const auto r = pow_nonneg(x, approx, cfg);
    if (r.is_empty() || e.is_irrational() || is_singleton(approx) || cfg.slack_ulps < 2) {
        return r;
    }
    const auto& q = e.value();
    if (std::llabs(q.num) > max_exact_int || q.den > max_exact_int) {
        return r;
    }
    const double num = static_cast<double>(q.num);
    const double den = static_cast<double>(q.den);
    const double b = num / den;
    // Exact: a multiple of ulp(b) smaller than den * ulp(b).
    const double residual = std::fma(b, den, -num);
    const double delta = -residual / den;

    const auto base = clamp_nonneg(x);
    double lo = r.lo();
    double hi = r.hi();
    const auto tighten = [&](double a, bool is_min) {
        if (!(a > 0) || std::isinf(a) || a == 1) {
            return;
        }
        if (const auto pb = shifted_point_bounds(a, b, delta, cfg.slack_ulps)) {
            if (is_min) {
                lo = std::max(lo, pb->down);
            } else {
                hi = std::min(hi, pb->up);
            }
        }
    };
    const bool increasing = q.num > 0;
    tighten(base.lo(), increasing);
    tighten(base.hi(), !increasing);
    return Interval::make(lo, hi);
}

// Bases mirrored onto [0,inf). Only strictly negative bases reflect; a
// nonnegative x contributes nothing here, so 0^0 is never negated.
Interval reflect(const Interval& x)
{
    return !x.is_empty() && x.lo() < 0 ? negate(x) : Interval::empty();
}

Interval even_union(const Interval& x, const Interval& y, PowConfig cfg)
{
    return hull(pow_nonneg(x, y, cfg), pow_nonneg(reflect(x), y, cfg));
}

Interval odd_union(const Interval& x, const Interval& y, PowConfig cfg)
{
    return hull(pow_nonneg(x, y, cfg), negate(pow_nonneg(reflect(x), y, cfg)));
}

Interval full_union(const Interval& x, const Interval& y, PowConfig cfg)
{
    const auto reflected = pow_nonneg(reflect(x), y, cfg);
    return hull(hull(pow_nonneg(x, y, cfg), reflected), negate(reflected));
}

} // namespace

ExactExponent ExactExponent::rational(const Rational& q) { return rational(q.num, q.den); }

ExactExponent ExactExponent::rational(std::int64_t num, std::int64_t den)
{
    return ExactExponent(reduce(num, den));
}

ExactExponent ExactExponent::irrational(double approximation)
{
    if (!std::isfinite(approximation)) {
        throw std::invalid_argument("irrational exponent needs a finite approximation");
    }
    return ExactExponent(Irrational{approximation});
}

ExponentKind ExactExponent::kind() const
{
    return is_irrational() ? ExponentKind::Irrational : classify_rational(value());
}

Interval enclose(const ExactExponent& e)
{
    if (e.is_irrational()) {
        // An irrational is never a machine number.
        const double a = e.approximation();
        return Interval::make(step_down(a), step_up(a));
    }
    const auto& q = e.value();
    const double num = static_cast<double>(q.num);
    const double den = static_cast<double>(q.den);
    const double approx = num / den;
    if (std::llabs(q.num) > max_exact_int || q.den > max_exact_int) {
        // Three roundings (two conversions, one division): two steps cover them.
        return Interval::make(step_down(approx, 2), step_up(approx, 2));
    }
    // approx*den - num, rounded once; its sign is exact.
    const double residual = std::fma(approx, den, -num);
    if (residual > 0) {
        return Interval::make(step_down(approx), approx);
    }
    if (residual < 0) {
        return Interval::make(approx, step_up(approx));
    }
    return Interval::point(approx);
}

Interval pow_float(const Interval& x, const Interval& y, PowConfig cfg)
{
    if (x.is_empty() || y.is_empty()) {
        return Interval::empty();
    }
    // An infinite singleton is the limit of both parity classes.
    if (!is_singleton(y) || std::isinf(y.lo())) {
        return full_union(x, y, cfg);
    }
    switch (classify_machine(y.lo())) {
    case ExponentKind::EvenInteger: return even_union(x, y, cfg);
    case ExponentKind::OddInteger: return odd_union(x, y, cfg);
    default: return pow_nonneg(x, y, cfg);
    }
}

Interval pow_exact(const Interval& x, const ExactExponent& y, PowConfig cfg)
{
    const auto kind = y.kind();
    const auto direct = pow_nonneg_exact(x, y, cfg);
    if (is_even_class(kind)) {
        return hull(direct, pow_nonneg_exact(reflect(x), y, cfg));
    }
    if (is_odd_class(kind)) {
        return hull(direct, negate(pow_nonneg_exact(reflect(x), y, cfg)));
    }
    return direct;
}

Interval pow_nonsingleton_exact(const Interval& x, const Interval& y, PowConfig cfg)
{
    if (is_singleton(y)) {
        throw std::invalid_argument("singleton exponent: use pow_exact");
    }
    if (x.is_empty() || y.is_empty()) {
        return Interval::empty();
    }
    return full_union(x, y, cfg);
}

} // namespace xpow
