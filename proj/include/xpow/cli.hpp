#ifndef XPOW_CLI_HPP
#define XPOW_CLI_HPP

#include <xpow/exponent.hpp>
#include <xpow/interval.hpp>
#include <xpow/oracle.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace xpow::cli
{

enum class EvalMode { Float, Exact };

struct IrrationalExponent {
    double approximation;
};

using ExponentArg = std::variant<Interval, Rational, IrrationalExponent>;

struct EvalRequest {
    Interval base;
    ExponentArg exponent;
    EvalMode mode = EvalMode::Float;
    bool check = false;
    SamplingGrid grid;
    unsigned slack_ulps = 2;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Arguments without the program name. Throws UsageError naming the first
// offending token.
EvalRequest parse_args(const std::vector<std::string>& args);

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_check_failed = 2;

RunResult run(const EvalRequest& request);

// Output stage of run(): prints `result` and, with request.check, the
// oracle verdict for the request's box.
RunResult report(const EvalRequest& request, const Interval& result);

// parse_args + run; usage errors become exit status 1 with a message on err.
RunResult main_entry(const std::vector<std::string>& args);

std::string usage();

} // namespace xpow::cli

#endif
