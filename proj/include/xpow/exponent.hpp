#ifndef XPOW_EXPONENT_HPP
#define XPOW_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace xpow
{

// Exact rational num/den in lowest terms with den >= 1; the sign lives on
// the numerator. Construct through reduce() to get the invariant.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Throws std::invalid_argument when den == 0, and std::overflow_error when
// the normalized sign cannot be represented (INT64_MIN operands).
Rational reduce(std::int64_t num, std::int64_t den);

// Parity class of a real exponent. The names follow the
// numerator/denominator parity of the irreducible fraction:
//   FractionEO  even/odd      -> real for every base, even in the base
//   FractionOO  odd/odd       -> real for every base, odd in the base
//   FractionOE  any/even      -> real only for nonnegative bases
// EvenInteger and OddInteger are the den == 1 members of EO and OO.
// NonIntegerDyadic is a machine number that is not an integer (its
// denominator is a power of two, so it belongs to the OE class).
enum class ExponentKind {
    EvenInteger,
    OddInteger,
    NonIntegerDyadic,
    FractionEO,
    FractionOO,
    FractionOE,
    Irrational,
};

ExponentKind classify_rational(const Rational& q);

// Throws std::invalid_argument for NaN or infinite y.
ExponentKind classify_machine(double y);

// Even numerator over odd denominator, integer or not.
bool is_even_class(ExponentKind k) noexcept;
// Odd numerator over odd denominator, integer or not.
bool is_odd_class(ExponentKind k) noexcept;

std::string_view to_string(ExponentKind k) noexcept;

// "num/den" or a bare integer "num". The result is reduced.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

} // namespace xpow

#endif
