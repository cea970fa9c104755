#include <xpow/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace xpow
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double max_finite = std::numeric_limits<double>::max();
const double max_numerator = std::ldexp(1.0, 62);

// Grid over the finite part of `iv` (infinite ends replaced by +-clip),
// with 0 and +-1 added when they lie in the interval.
std::vector<double> sample_axis(const Interval& iv, std::size_t n, double clip)
{
    std::vector<double> out;
    if (iv.is_empty() || (iv.lo() == iv.hi() && std::isinf(iv.lo()))) {
        return out;
    }
    const double lo = std::isinf(iv.lo()) ? std::min(-clip, iv.hi()) : iv.lo();
    const double hi = std::isinf(iv.hi()) ? std::max(clip, lo) : iv.hi();
    out.reserve(n + 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back(std::clamp(lo * (1 - f) + hi * f, lo, hi));
    }
    out.front() = lo;
    out.back() = hi;
    for (const double special : {-1.0, 0.0, 1.0}) {
        if (lo <= special && special <= hi) {
            out.push_back(special);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// y.lo <= num/den <= y.hi, decided exactly: a single-rounding FMA keeps the
// sign of y.lo*den - num.
bool fraction_in(double num, double den, const Interval& y)
{
    return std::fma(y.lo(), den, -num) <= 0 && std::fma(y.hi(), den, -num) >= 0;
}

// For each odd-denominator parity class, the fraction with denominator up
// to max_den that lies in y and is closest to t.
void nearest_fractions(double t, const Interval& y, std::int64_t max_den, std::vector<Rational>& out)
{
    std::optional<Rational> best_even;
    std::optional<Rational> best_odd;
    double dist_even = inf;
    double dist_odd = inf;
    for (std::int64_t d = 1; d <= max_den; d += 2) {
        const double den = static_cast<double>(d);
        const double c = t * den;
        if (!(std::fabs(c) < max_numerator)) {
            continue;
        }
        // Two integers on each side of t*d cover both numerator parities.
        const double f = std::floor(c);
        for (const double num : {f - 1, f, f + 1, f + 2}) {
            if (!fraction_in(num, den, y)) {
                continue;
            }
            const auto r = reduce(static_cast<std::int64_t>(num), d);
            const double dist = std::fabs(num / den - t);
            if (r.num % 2 == 0) {
                if (dist < dist_even) {
                    dist_even = dist;
                    best_even = r;
                }
            } else if (dist < dist_odd) {
                dist_odd = dist;
                best_odd = r;
            }
        }
    }
    if (best_even) {
        out.push_back(*best_even);
    }
    if (best_odd) {
        out.push_back(*best_odd);
    }
}

double fraction_value(const Rational& q)
{
    return static_cast<double>(q.num) / static_cast<double>(q.den);
}

// a^b for a >= 0 with 0^b defined only for b >= 0.
std::optional<double> nonneg_point(double a, double b)
{
    if (a == 0) {
        if (b < 0) {
            return std::nullopt;
        }
        return b == 0 ? 1.0 : 0.0;
    }
    return std::pow(a, b);
}

// Real value of a^(num/den) for a < 0 and odd den.
double negative_base_point(double a, const Rational& q)
{
    const double magnitude = std::pow(-a, fraction_value(q));
    return q.num % 2 == 0 ? magnitude : -magnitude;
}

void record(ImageSample& s, SamplePoint p)
{
    if (p.value > s.divergence_threshold) {
        s.saw_unbounded_above = true;
    }
    if (p.value < -s.divergence_threshold) {
        s.saw_unbounded_below = true;
    }
    s.points.push_back(std::move(p));
}

bool in_result(const Interval& r, double v)
{
    if (r.is_empty()) {
        return false;
    }
    if (std::isinf(v)) {
        return v > 0 ? r.hi() == inf : r.lo() == -inf;
    }
    const double tol = oracle_tolerance(v);
    return r.lo() - tol <= v && v <= r.hi() + tol;
}

std::string exponent_text(const SamplePoint& p)
{
    return p.fraction ? to_string(*p.fraction) : format_bound(p.exponent);
}

} // namespace

double ulp(double v) noexcept
{
    const double a = std::fabs(v);
    if (std::isinf(a)) {
        return inf;
    }
    if (a == max_finite) {
        return a - std::nextafter(a, 0.0);
    }
    return std::nextafter(a, inf) - a;
}

double oracle_tolerance(double v) noexcept { return 4 * ulp(v) + 1e-12 * std::fabs(v); }

double ImageSample::min_value() const
{
    if (points.empty()) {
        throw std::logic_error("min_value of an empty sample");
    }
    return std::min_element(points.begin(), points.end(),
                            [](const auto& a, const auto& b) { return a.value < b.value; })
        ->value;
}

double ImageSample::max_value() const
{
    if (points.empty()) {
        throw std::logic_error("max_value of an empty sample");
    }
    return std::max_element(points.begin(), points.end(),
                            [](const auto& a, const auto& b) { return a.value < b.value; })
        ->value;
}

void validate(const SamplingGrid& grid)
{
    if (grid.bases < 2 || grid.exponents < 2) {
        throw std::invalid_argument("sampling grid needs at least 2 bases and 2 exponents");
    }
    if (grid.max_den < 1) {
        throw std::invalid_argument("sampling grid needs max_den >= 1");
    }
    if (!(grid.clip > 0) || !(grid.divergence_threshold > 0)) {
        throw std::invalid_argument("sampling grid clip and threshold must be positive");
    }
}

ImageSample sample_image(const Interval& x, const Interval& y, const SamplingGrid& grid)
{
    validate(grid);
    ImageSample s;
    s.divergence_threshold = grid.divergence_threshold;

    const auto bases = sample_axis(x, grid.bases, grid.clip);
    const auto exps = sample_axis(y, grid.exponents, grid.clip);
    if (bases.empty() || exps.empty()) {
        return s;
    }

    std::vector<Rational> fractions;
    if (bases.front() < 0) {
        for (const double t : exps) {
            nearest_fractions(t, y, grid.max_den, fractions);
        }
        std::sort(fractions.begin(), fractions.end(),
                  [](const Rational& a, const Rational& b) { return std::tie(a.num, a.den) < std::tie(b.num, b.den); });
        fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());
    }

    // Nonnegative bases first, so witnesses favour the unreflected piece.
    for (const double a : bases) {
        if (a < 0) {
            continue;
        }
        for (const double b : exps) {
            if (const auto v = nonneg_point(a, b)) {
                record(s, {a, b, std::nullopt, *v});
            }
        }
    }
    for (const double a : bases) {
        if (a >= 0) {
            break;
        }
        for (const auto& q : fractions) {
            record(s, {a, fraction_value(q), q, negative_base_point(a, q)});
        }
    }
    return s;
}

ImageSample sample_image(const Interval& x, const ExactExponent& y, const SamplingGrid& grid)
{
    validate(grid);
    ImageSample s;
    s.divergence_threshold = grid.divergence_threshold;

    const bool rational = !y.is_irrational();
    const double b = rational ? fraction_value(y.value()) : y.approximation();
    const bool odd_den = rational && y.value().den % 2 == 1;
    std::optional<Rational> frac;
    if (rational) {
        frac = y.value();
    }

    for (const double a : sample_axis(x, grid.bases, grid.clip)) {
        if (a < 0) {
            if (odd_den) {
                record(s, {a, b, frac, negative_base_point(a, *frac)});
            }
            continue;
        }
        // 0^q is decided by the sign of the exact value, which b shares.
        if (const auto v = nonneg_point(a, b)) {
            record(s, {a, b, frac, *v});
        }
    }
    return s;
}

ContainmentReport check_containment(const Interval& result, const ImageSample& sample)
{
    ContainmentReport rep;
    for (const auto& p : sample.points) {
        if (!in_result(result, p.value)) {
            rep.pass = false;
            rep.witness = p;
            return rep;
        }
    }
    const auto by_value = [](const SamplePoint& a, const SamplePoint& b) { return a.value < b.value; };
    if (sample.saw_unbounded_above && !(result.hi() >= sample.divergence_threshold)) {
        rep.pass = false;
        rep.witness = *std::max_element(sample.points.begin(), sample.points.end(), by_value);
    } else if (sample.saw_unbounded_below && !(result.lo() <= -sample.divergence_threshold)) {
        rep.pass = false;
        rep.witness = *std::min_element(sample.points.begin(), sample.points.end(), by_value);
    }
    return rep;
}

std::string ContainmentReport::summary() const
{
    if (pass) {
        return "PASS";
    }
    return "FAIL " + format_bound(witness->base) + " " + exponent_text(*witness) + " " +
           format_bound(witness->value);
}

std::string ContainmentReport::describe() const
{
    if (pass) {
        return "all sampled values are contained in the result";
    }
    return "sampled value " + format_bound(witness->value) + " at base " + format_bound(witness->base) +
           ", exponent " + exponent_text(*witness) + " lies outside the result";
}

Tightness estimate_tightness(const Interval& result, const ImageSample& sample)
{
    Tightness t;
    if (result.is_empty() || sample.empty()) {
        return t;
    }
    t.sample_min = sample.min_value();
    t.sample_max = sample.max_value();
    if (std::isinf(result.lo()) || std::isinf(result.hi()) || std::isinf(t.sample_min) ||
        std::isinf(t.sample_max)) {
        return t;
    }
    t.applicable = true;
    t.upper_abs = result.hi() - t.sample_max;
    t.lower_abs = t.sample_min - result.lo();
    const auto rel = [](double over, double ext) {
        if (ext == 0) {
            return over == 0 ? 0.0 : inf;
        }
        return over / std::fabs(ext);
    };
    t.upper_rel = rel(t.upper_abs, t.sample_max);
    t.lower_rel = rel(t.lower_abs, t.sample_min);
    return t;
}

bool Tightness::within(double rel, unsigned ulps) const noexcept
{
    const auto ok = [&](double over, double ext) {
        return over <= std::max(rel * std::fabs(ext), ulps * ulp(ext));
    };
    return applicable && ok(upper_abs, sample_max) && ok(lower_abs, sample_min);
}

} // namespace xpow
