#include <xpow/cli.hpp>

#include <xpow/pow.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace xpow::cli
{

namespace
{

template <typename F>
auto parse_value(const std::string& flag, const std::string& token, F&& f)
{
    try {
        return f(token);
    } catch (const std::exception& e) {
        throw UsageError("bad value '" + token + "' for " + flag + ": " + e.what());
    }
}

template <typename Int>
Int parse_integer(const std::string& flag, const std::string& token)
{
    Int v{};
    const auto* last = token.data() + token.size();
    const auto res = std::from_chars(token.data(), last, v);
    if (token.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw UsageError("bad value '" + token + "' for " + flag + ": expected an integer");
    }
    return v;
}

// "<bases>x<exps>"
void parse_grid(const std::string& token, SamplingGrid& grid)
{
    const auto x = token.find('x');
    if (x == std::string::npos) {
        throw UsageError("bad value '" + token + "' for --grid: expected <bases>x<exps>");
    }
    grid.bases = parse_integer<std::size_t>("--grid", token.substr(0, x));
    grid.exponents = parse_integer<std::size_t>("--grid", token.substr(x + 1));
    if (grid.bases < 2 || grid.exponents < 2) {
        throw UsageError("bad value '" + token + "' for --grid: both counts must be at least 2");
    }
}

Interval evaluate(const EvalRequest& req)
{
    const PowConfig cfg{req.slack_ulps};
    return std::visit(
        [&](const auto& e) -> Interval {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Interval>) {
                if (req.mode == EvalMode::Exact) {
                    return pow_nonsingleton_exact(req.base, e, cfg);
                }
                return pow_float(req.base, e, cfg);
            } else if constexpr (std::is_same_v<T, Rational>) {
                return pow_exact(req.base, ExactExponent::rational(e), cfg);
            } else {
                return pow_exact(req.base, ExactExponent::irrational(e.approximation), cfg);
            }
        },
        req.exponent);
}

ImageSample sample(const EvalRequest& req)
{
    return std::visit(
        [&](const auto& e) -> ImageSample {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Interval>) {
                return sample_image(req.base, e, req.grid);
            } else if constexpr (std::is_same_v<T, Rational>) {
                return sample_image(req.base, ExactExponent::rational(e), req.grid);
            } else {
                return sample_image(req.base, ExactExponent::irrational(e.approximation), req.grid);
            }
        },
        req.exponent);
}

} // namespace

std::string usage()
{
    return "usage: xpow --base <interval> (--exp <interval> | --exp-rational <num/den> |\n"
           "            --exp-irrational <decimal>) [--check] [--grid <bases>x<exps>]\n"
           "            [--max-den <n>] [--slack <ulps>]\n"
           "intervals are written [lo,hi] (bounds may be -inf/inf) or empty\n";
}

EvalRequest parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"interval power"};
    app.set_help_flag();
    app.allow_extras(false);

    std::string base;
    std::string exp;
    std::string exp_rational;
    std::string exp_irrational;
    std::string grid;
    std::string max_den;
    std::string slack;
    bool check = false;

    app.add_option("--base", base);
    app.add_option("--exp", exp);
    app.add_option("--exp-rational", exp_rational);
    app.add_option("--exp-irrational", exp_irrational);
    app.add_flag("--check", check);
    app.add_option("--grid", grid);
    app.add_option("--max-den", max_den);
    app.add_option("--slack", slack);

    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    EvalRequest req;
    req.check = check;

    if (app.count("--base") == 0) {
        throw UsageError("missing --base");
    }
    req.base = parse_value("--base", base, [](const std::string& s) { return parse_interval(s); });

    const auto exp_forms = app.count("--exp") + app.count("--exp-rational") + app.count("--exp-irrational");
    if (exp_forms == 0) {
        throw UsageError("missing exponent: give one of --exp, --exp-rational, --exp-irrational");
    }
    if (exp_forms > 1) {
        throw UsageError("conflicting exponent forms: give only one of --exp, --exp-rational, --exp-irrational");
    }
    if (app.count("--exp") != 0) {
        req.mode = EvalMode::Float;
        req.exponent = parse_value("--exp", exp, [](const std::string& s) { return parse_interval(s); });
    } else if (app.count("--exp-rational") != 0) {
        req.mode = EvalMode::Exact;
        req.exponent = parse_value("--exp-rational", exp_rational, [](const std::string& s) { return parse_rational(s); });
    } else {
        req.mode = EvalMode::Exact;
        const double approx = parse_value("--exp-irrational", exp_irrational, [](const std::string& s) {
            const double v = parse_bound(s);
            if (!std::isfinite(v)) {
                throw std::invalid_argument("approximation must be finite");
            }
            return v;
        });
        req.exponent = IrrationalExponent{approx};
    }

    if (app.count("--grid") != 0) {
        parse_grid(grid, req.grid);
    }
    if (app.count("--max-den") != 0) {
        req.grid.max_den = parse_integer<std::int64_t>("--max-den", max_den);
        if (req.grid.max_den < 1) {
            throw UsageError("bad value '" + max_den + "' for --max-den: must be at least 1");
        }
    }
    if (app.count("--slack") != 0) {
        req.slack_ulps = parse_integer<unsigned>("--slack", slack);
    }
    return req;
}

RunResult run(const EvalRequest& req)
{
    RunResult r;
    Interval result;
    try {
        result = evaluate(req);
    } catch (const std::exception& e) {
        r.status = exit_usage;
        r.err = std::string("error: ") + e.what() + "\n";
        return r;
    }
    return report(req, result);
}

RunResult report(const EvalRequest& req, const Interval& result)
{
    RunResult r;
    r.out = to_string(result) + "\n";
    if (req.check) {
        const auto verdict = check_containment(result, sample(req));
        r.out += verdict.summary() + "\n";
        if (!verdict.pass) {
            r.status = exit_check_failed;
        }
    }
    return r;
}

RunResult main_entry(const std::vector<std::string>& args)
{
    if (std::any_of(args.begin(), args.end(), [](const auto& a) { return a == "-h" || a == "--help"; })) {
        return {exit_ok, usage(), {}};
    }
    try {
        return run(parse_args(args));
    } catch (const UsageError& e) {
        return {exit_usage, {}, std::string("error: ") + e.what() + "\n" + usage()};
    }
}

} // namespace xpow::cli
