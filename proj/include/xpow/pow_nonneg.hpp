#ifndef XPOW_POW_NONNEG_HPP
#define XPOW_POW_NONNEG_HPP

#include <xpow/interval.hpp>

namespace xpow
{

inline constexpr unsigned default_slack_ulps = 2;

// Rounding configuration shared by every power routine. std::pow is taken
// to be faithful, not correctly rounded; each bound it produces is pushed
// outward by `slack_ulps` steps.
struct PowConfig {
    unsigned slack_ulps = default_slack_ulps;
};

// down <= a^b <= up.
struct PointPowerBounds {
    double down;
    double up;
};

// Directed enclosure of a single a^b with a >= 0. Infinite arguments use
// limit values (inf^b, a^inf). Integer exponents 0..64 are evaluated by
// exact-residual multiplication, so representable results come out as a
// zero-width pair. Overflow gives up = +inf; underflow gives down = 0.
//
// Throws std::invalid_argument on NaN and std::domain_error for a < 0 or
// for a == 0 with b < 0.
PointPowerBounds pow_point_bounds(double a, double b, PowConfig cfg = {});

// Enclosure of { a^b : a in x ∩ [0,inf], b in y } where 0^b is defined
// only for b >= 0 (0^0 = 1). Positive bases approaching zero with a
// negative exponent push the upper bound to +inf.
Interval pow_nonneg(const Interval& x, const Interval& y, PowConfig cfg = {});

} // namespace xpow

#endif
