#ifndef XPOW_ORACLE_HPP
#define XPOW_ORACLE_HPP

#include <xpow/exponent.hpp>
#include <xpow/interval.hpp>
#include <xpow/pow.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xpow
{

// Brute-force under-approximation of the image of a box under x^y. Every
// value it produces is a genuine point value, so anything it finds outside
// an evaluator's result is a soundness bug in the evaluator.

struct SamplingGrid {
    std::size_t bases = 100;
    std::size_t exponents = 100;
    // Largest odd denominator tried when pairing negative bases with
    // fractional exponents.
    std::int64_t max_den = 99;
    // Samples with magnitude above this raise the divergence flags.
    double divergence_threshold = 1e300;
    // Infinite box bounds are sampled as if they were +-clip.
    double clip = 1e6;
};

struct SamplePoint {
    double base;
    double exponent;
    // Set when the exponent was used as an exact fraction (negative bases
    // always, nonnegative bases only in the exact-exponent sampler).
    std::optional<Rational> fraction;
    // May be +-inf when the point value overflows the double range.
    double value;
};

struct ImageSample {
    std::vector<SamplePoint> points;
    bool saw_unbounded_above = false;
    bool saw_unbounded_below = false;
    double divergence_threshold = 1e300;

    bool empty() const noexcept { return points.empty(); }
    double min_value() const;
    double max_value() const;
};

// Throws std::invalid_argument for grids with fewer than two bases or
// exponents, or max_den < 1.
void validate(const SamplingGrid& grid);

// Machine-exponent semantics, as evaluated by pow_float. Bases are sampled
// uniformly over x (plus 0 and +-1 when inside). Nonnegative bases pair
// with every exponent sample; negative bases pair with the odd-denominator
// fractions of each parity class nearest to every exponent sample that
// still lie in y.
ImageSample sample_image(const Interval& x, const Interval& y, const SamplingGrid& grid = {});

// Single exact exponent, as evaluated by pow_exact. Negative bases are only
// paired when the exponent is a fraction with odd denominator.
ImageSample sample_image(const Interval& x, const ExactExponent& y, const SamplingGrid& grid = {});

// The oracle's own rounding: 4 ulps plus 1e-12 relative.
double oracle_tolerance(double v) noexcept;

struct ContainmentReport {
    bool pass = true;
    std::optional<SamplePoint> witness;

    // "PASS" or "FAIL <base> <exp> <value>".
    std::string summary() const;
    // Human-readable variant of summary().
    std::string describe() const;
};

ContainmentReport check_containment(const Interval& result, const ImageSample& sample);

struct Tightness {
    bool applicable = false;
    double upper_abs = 0.0;  // result.hi - max sample
    double lower_abs = 0.0;  // min sample - result.lo
    double upper_rel = 0.0;
    double lower_rel = 0.0;
    double sample_min = 0.0;
    double sample_max = 0.0;

    // Both overestimations within max(rel * |extremum|, ulps * ulp(extremum)).
    bool within(double rel, unsigned ulps) const noexcept;
};

// Not applicable when either side is empty or any bound or extremum is infinite.
Tightness estimate_tightness(const Interval& result, const ImageSample& sample);

double ulp(double v) noexcept;

} // namespace xpow

#endif
