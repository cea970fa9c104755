#ifndef XPOW_POW_HPP
#define XPOW_POW_HPP

#include <xpow/exponent.hpp>
#include <xpow/interval.hpp>
#include <xpow/pow_nonneg.hpp>

#include <variant>

namespace xpow
{

// Exponent known exactly: either a rational, or a value the caller asserts
// is irrational together with a finite machine approximation of it.
class ExactExponent
{
public:
    static ExactExponent rational(const Rational& q);
    static ExactExponent rational(std::int64_t num, std::int64_t den);
    // Throws std::invalid_argument unless `approximation` is finite.
    static ExactExponent irrational(double approximation);

    bool is_irrational() const noexcept { return std::holds_alternative<Irrational>(value_); }
    // Precondition: !is_irrational().
    const Rational& value() const { return std::get<Rational>(value_); }
    // Precondition: is_irrational().
    double approximation() const { return std::get<Irrational>(value_).approximation; }

    ExponentKind kind() const;

private:
    struct Irrational {
        double approximation;
    };

    explicit ExactExponent(std::variant<Rational, Irrational> v) : value_(v) {}

    std::variant<Rational, Irrational> value_;
};

// Tightest machine interval holding the exact exponent: a point when the
// rational is representable, otherwise one ulp wide. Irrational assertions
// get one ulp on each side of the approximation.
Interval enclose(const ExactExponent& e);

// x^y for intervals with machine bounds and no sign or class restriction on
// either argument. A non-singleton y spans both odd-denominator parity
// classes, so the result is the hull of p0(x,y), p0(-x,y) and -p0(-x,y).
// Singleton even and odd integers keep the matching reflected piece;
// singleton non-integers are dyadic with an even denominator and only see
// the nonnegative part of x.
Interval pow_float(const Interval& x, const Interval& y, PowConfig cfg = {});

// x^q for a single exact exponent, choosing the reflected piece from the
// parity class of the irreducible fraction.
Interval pow_exact(const Interval& x, const ExactExponent& y, PowConfig cfg = {});

// Non-singleton exponent interval at the exact level. Same value as
// pow_float; throws std::invalid_argument for a singleton y.
Interval pow_nonsingleton_exact(const Interval& x, const Interval& y, PowConfig cfg = {});

} // namespace xpow

#endif
