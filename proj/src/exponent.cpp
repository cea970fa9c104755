#include <xpow/exponent.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace xpow
{

namespace
{

constexpr auto int64_min = std::numeric_limits<std::int64_t>::min();

// 2^53: every double with magnitude at or above it is an even integer.
constexpr double two53 = 9007199254740992.0;

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    std::int64_t v = 0;
    const auto* last = s.data() + s.size();
    const auto res = std::from_chars(s.data(), last, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

Rational reduce(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (num == int64_min || den == int64_min) {
        throw std::overflow_error("rational operand out of range");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

ExponentKind classify_rational(const Rational& q)
{
    const auto r = reduce(q.num, q.den);
    if (r.den % 2 == 0) {
        return ExponentKind::FractionOE;
    }
    const bool even_num = r.num % 2 == 0;
    if (r.den == 1) {
        return even_num ? ExponentKind::EvenInteger : ExponentKind::OddInteger;
    }
    return even_num ? ExponentKind::FractionEO : ExponentKind::FractionOO;
}

ExponentKind classify_machine(double y)
{
    if (!std::isfinite(y)) {
        throw std::invalid_argument("exponent must be finite to classify");
    }
    if (std::trunc(y) != y) {
        return ExponentKind::NonIntegerDyadic;
    }
    if (std::fabs(y) >= two53) {
        return ExponentKind::EvenInteger;
    }
    const auto n = static_cast<std::int64_t>(y);
    return n % 2 == 0 ? ExponentKind::EvenInteger : ExponentKind::OddInteger;
}

bool is_even_class(ExponentKind k) noexcept
{
    return k == ExponentKind::EvenInteger || k == ExponentKind::FractionEO;
}

bool is_odd_class(ExponentKind k) noexcept
{
    return k == ExponentKind::OddInteger || k == ExponentKind::FractionOO;
}

std::string_view to_string(ExponentKind k) noexcept
{
    switch (k) {
    case ExponentKind::EvenInteger: return "EvenInteger";
    case ExponentKind::OddInteger: return "OddInteger";
    case ExponentKind::NonIntegerDyadic: return "NonIntegerDyadic";
    case ExponentKind::FractionEO: return "FractionEO";
    case ExponentKind::FractionOO: return "FractionOO";
    case ExponentKind::FractionOE: return "FractionOE";
    case ExponentKind::Irrational: return "Irrational";
    }
    return "?";
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return reduce(parse_int(text, text), 1);
    }
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return reduce(num, den);
}

std::string to_string(const Rational& q)
{
    return std::to_string(q.num) + "/" + std::to_string(q.den);
}

} // namespace xpow
