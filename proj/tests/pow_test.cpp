#include <doctest.h>

#include <xpow/oracle.hpp>
#include <xpow/pow.hpp>

#include "support/boxes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace xpow;

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

bool within_slack(const Interval& got, double lo, double hi, unsigned ulps = default_slack_ulps)
{
    return !got.is_empty() && got.lo() <= lo && got.lo() >= step_down(lo, ulps) && got.hi() >= hi &&
           got.hi() <= step_up(hi, ulps);
}

SamplingGrid dense_grid()
{
    SamplingGrid g;
    g.bases = 200;
    g.exponents = 200;
    g.max_den = 99;
    return g;
}

} // namespace

TEST_CASE("enclose exact exponents")
{
    CHECK(enclose(ExactExponent::rational(1, 2)) == Interval::point(0.5));
    CHECK(enclose(ExactExponent::rational(-6, 2)) == Interval::point(-3));

    const auto third = enclose(ExactExponent::rational(1, 3));
    CHECK(third.lo() < third.hi());
    CHECK(std::nextafter(third.lo(), inf) == third.hi());
    // 3 * lo < 1 < 3 * hi, decided with exact residuals.
    CHECK(std::fma(third.lo(), 3.0, -1.0) < 0);
    CHECK(std::fma(third.hi(), 3.0, -1.0) > 0);

    const auto neg = enclose(ExactExponent::rational(-2, 7));
    CHECK(std::fma(neg.lo(), 7.0, 2.0) < 0);
    CHECK(std::fma(neg.hi(), 7.0, 2.0) > 0);

    const auto pi = enclose(ExactExponent::irrational(3.141592653589793));
    CHECK(pi.contains(3.141592653589793));
    CHECK_FALSE(is_singleton(pi));

    CHECK_THROWS_AS(ExactExponent::irrational(inf), std::invalid_argument);
    CHECK_THROWS_AS(ExactExponent::rational(1, 0), std::invalid_argument);
    CHECK(ExactExponent::rational(4, 6).value() == Rational{2, 3});
}

TEST_CASE("pow_float examples")
{
    CHECK(within_slack(pow_float(Interval::point(-2), Interval::point(3)), -8, -8));
    CHECK(within_slack(pow_float(Interval::point(-2), Interval::point(2)), 4, 4));
    CHECK(pow_float(Interval::make(-2, -1), Interval::point(0.5)).is_empty());
    CHECK(pow_float(Interval::make(-1, 2), Interval::point(-3)) == Interval::entire());
    CHECK(pow_float(Interval::empty(), Interval::make(1, 2)).is_empty());
    CHECK(pow_float(Interval::make(1, 2), Interval::empty()).is_empty());
}

TEST_CASE("pow_float on [-2,3] x [2,3] against dense parity-class sampling")
{
    const auto x = Interval::make(-2, 3);
    const auto y = Interval::make(2, 3);
    const auto sample = sample_image(x, y, dense_grid());
    // (-2)^3 = -8 via the odd integer 3/1, 3^3 = 27 on the positive side.
    CHECK(sample.min_value() == -8);
    CHECK(sample.max_value() == 27);

    const auto r = pow_float(x, y);
    CHECK(within_slack(r, -8, 27));
    CHECK(check_containment(r, sample).pass);
    CHECK(pow_nonsingleton_exact(x, y) == r);
}

TEST_CASE("pow_float on [-1,2] x {-3} covers both rays")
{
    // Bases approaching 0 from either side give values of both signs
    // growing like eps^-3.
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const auto s = sample_image(Interval::make(-eps, eps), Interval::point(-3));
        CHECK(s.max_value() >= 0.99 / (eps * eps * eps));
        CHECK(s.min_value() <= -0.99 / (eps * eps * eps));
    }
    // The two pieces separately.
    const auto positive = pow_nonneg(Interval::make(0, 2), Interval::point(-3));
    CHECK(positive.hi() == inf);
    CHECK(within_slack(positive, 0.125, inf));
    const auto negative = negate(pow_nonneg(Interval::make(-2, 1), Interval::point(-3)));
    CHECK(negative.lo() == -inf);
    CHECK(within_slack(negative, -inf, -1));
}

TEST_CASE("pow_exact examples")
{
    SUBCASE("real cube root of -8")
    {
        static_assert(-2 * -2 * -2 == -8);
        const auto r = pow_exact(Interval::point(-8), ExactExponent::rational(1, 3));
        CHECK(within_slack(r, -2, -2));
    }
    SUBCASE("even/odd exponent over a symmetric base")
    {
        const auto x = Interval::make(-8, 8);
        const auto q = ExactExponent::rational(2, 3);
        const auto sample = sample_image(x, q, dense_grid());
        CHECK(sample.min_value() == 0);
        CHECK(sample.max_value() == doctest::Approx(4).epsilon(1e-15));
        const auto r = pow_exact(x, q);
        CHECK(within_slack(r, 0, 4));
        CHECK(check_containment(r, sample).pass);
    }
    SUBCASE("even denominator drops negative bases")
    {
        CHECK(pow_exact(Interval::point(-4), ExactExponent::rational(1, 2)).is_empty());
        CHECK(pow_exact(Interval::make(-4, 4), ExactExponent::rational(1, 2)) ==
              pow_nonneg(Interval::make(0, 4), Interval::point(0.5)));
    }
    SUBCASE("irrational exponent delegates to the nonnegative part")
    {
        const auto pi = ExactExponent::irrational(3.141592653589793);
        const auto r = pow_exact(Interval::make(-2, 3), pi);
        CHECK(r == pow_nonneg(Interval::make(0, 3), enclose(pi)));
        CHECK(r.lo() == 0);
        CHECK(r.contains(std::pow(3.0, 3.141592653589793)));
    }
    SUBCASE("integer rationals match the machine route")
    {
        for (int k = -8; k <= 8; ++k) {
            const auto x = Interval::make(-3, 1.5);
            CHECK(pow_exact(x, ExactExponent::rational(k, 1)) == pow_float(x, Interval::point(k)));
        }
    }
    SUBCASE("odd/odd with negative exponent")
    {
        const auto r = pow_exact(Interval::point(-27), ExactExponent::rational(-1, 3));
        CHECK(r.lo() <= -1.0 / 3.0);
        CHECK(r.hi() >= -1.0 / 3.0);
        CHECK(r.hi() < 0);
    }
}

TEST_CASE("pow_nonsingleton_exact examples")
{
    const auto grid = dense_grid();
    SUBCASE("[-2,3] x [2,3]")
    {
        CHECK(within_slack(pow_nonsingleton_exact(Interval::make(-2, 3), Interval::make(2, 3)), -8, 27));
    }
    SUBCASE("[1,2] x [0,1]")
    {
        const auto x = Interval::make(1, 2);
        const auto y = Interval::make(0, 1);
        const auto s = sample_image(x, y, grid);
        CHECK(s.min_value() == 1);
        CHECK(s.max_value() == 2);
        CHECK(pow_nonsingleton_exact(x, y) == Interval::make(1, 2));
    }
    SUBCASE("[-1,1] x [0,2]")
    {
        const auto x = Interval::make(-1, 1);
        const auto y = Interval::make(0, 2);
        const auto s = sample_image(x, y, grid);
        // -1 to an odd/odd power gives -1; 1 and (-1)^(even/odd) give 1.
        CHECK(s.min_value() == -1);
        CHECK(s.max_value() == 1);
        const auto r = pow_nonsingleton_exact(x, y);
        CHECK(r == Interval::make(-1, 1));
        CHECK(check_containment(r, s).pass);
    }
    CHECK_THROWS_AS(pow_nonsingleton_exact(Interval::make(1, 2), Interval::point(3)), std::invalid_argument);
}

TEST_CASE("infinite singleton exponent keeps all three pieces")
{
    const auto x = Interval::make(-2, 0.5);
    const auto r = pow_float(x, Interval::point(inf));
    CHECK(r == Interval::entire());
}

TEST_CASE("result is the hull of the prescribed pieces")
{
    testing::Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const auto x = testing::random_base(rng);
        const auto y = testing::random_exponent(rng);
        const auto direct = pow_nonneg(x, y);
        // Only strictly negative bases are mirrored.
        const auto reflected = x.lo() < 0 ? pow_nonneg(negate(x), y) : Interval::empty();
        Interval expected;
        if (!is_singleton(y)) {
            expected = hull(direct, hull(reflected, negate(reflected)));
        } else if (classify_machine(y.lo()) == ExponentKind::EvenInteger) {
            expected = hull(direct, reflected);
        } else if (classify_machine(y.lo()) == ExponentKind::OddInteger) {
            expected = hull(direct, negate(reflected));
        } else {
            expected = direct;
        }
        REQUIRE(pow_float(x, y) == expected);
    }
}

TEST_CASE("integer exponent symmetry")
{
    testing::Rng rng(19);
    std::uniform_int_distribution<int> k(-8, 8);
    for (int i = 0; i < 1000; ++i) {
        const auto x = testing::random_base(rng);
        const int n = k(rng);
        const auto even = Interval::point(2 * n);
        const auto odd = Interval::point(2 * n + 1);
        REQUIRE(pow_float(x, even) == pow_float(negate(x), even));
        REQUIRE(pow_float(negate(x), odd) == negate(pow_float(x, odd)));
    }
}

TEST_CASE("refining the exponent to a point stays inside")
{
    testing::Rng rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto x = testing::random_base(rng);
        const auto y = testing::log_uniform_box(rng);
        const double t = std::clamp(y.lo() + u(rng) * (y.hi() - y.lo()), y.lo(), y.hi());
        const auto star = Interval::point(i % 4 == 0 ? std::round(t) : t);
        if (!star.subset_of(y)) {
            continue;
        }
        REQUIRE(pow_float(x, star).subset_of(pow_float(x, y)));
    }
}

TEST_CASE("nonnegative bases agree with pow_nonneg")
{
    // 0^0 = 1 must not be mirrored to -1 when x has no negative points.
    CHECK(pow_float(Interval::make(0, 2), Interval::make(-1, 1)) == Interval::make(0, inf));
    CHECK(pow_float(Interval::make(0, 0), Interval::make(0, 1)) == Interval::make(0, 1));
    testing::Rng rng(29);
    for (int i = 0; i < 2000; ++i) {
        auto x = clamp_nonneg(testing::random_base(rng));
        if (x.is_empty()) {
            continue;
        }
        const auto y = testing::random_exponent(rng);
        REQUIRE(pow_float(x, y) == pow_nonneg(x, y));
    }
}

TEST_CASE("containment against the oracle on random boxes")
{
    testing::Rng rng(31);
    SamplingGrid grid;
    grid.bases = 30;
    grid.exponents = 30;
    for (int i = 0; i < 500; ++i) {
        const auto x = testing::random_base(rng);
        const auto y = testing::random_exponent(rng);
        const auto r = pow_float(x, y);
        const auto rep = check_containment(r, sample_image(x, y, grid));
        INFO("x=", to_string(x), " y=", to_string(y), " r=", to_string(r), " ", rep.summary());
        REQUIRE(rep.pass);

        const auto q = ExactExponent::rational(testing::random_rational(rng));
        const auto re = pow_exact(x, q);
        const auto rep_exact = check_containment(re, sample_image(x, q, grid));
        INFO("q=", to_string(q.value()), " r=", to_string(re), " ", rep_exact.summary());
        REQUIRE(rep_exact.pass);
    }
}
