#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "socineff/errors.hpp"

namespace socineff {

/// Exact rational scalar; always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::mpq_rational;

/// Per-mode numeric policy. Every templated computation in the library is
/// instantiated either with Rat (exact mode) or with double (float mode);
/// mixing modes requires an explicit convert() call.
template <class T>
struct NumericTraits;

template <>
struct NumericTraits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    // Exact mode: equality and sign tests are exact, no tolerances.
    static bool is_zero(const Rat& v) { return v == 0; }
    static bool nearly_equal(const Rat& a, const Rat& b) { return a == b; }
    static Rat lottery_sum_slack() { return Rat(0); }
};

template <>
struct NumericTraits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static constexpr double eq_tol = 1e-9;
    static bool is_zero(double v) { return std::fabs(v) <= eq_tol; }
    static bool nearly_equal(double a, double b) { return std::fabs(a - b) <= eq_tol; }
    static double lottery_sum_slack() { return 1e-12; }
};

inline double convert_to_double(const Rat& v) { return static_cast<double>(v); }
inline double convert_to_double(double v) { return v; }

/// Parses "p/q" or "p" with integer parts. Throws ParseError on malformed input.
inline Rat parse_rational(const std::string& text) {
    using Int = boost::multiprecision::mpz_int;
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    if (slash == 0 || slash == text.size() - 1) throw ParseError("not a rational number: " + text);
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int den{text.substr(slash + 1)};
        if (den <= 0) throw ParseError("denominator must be positive: " + text);
        return Rat(Int(text.substr(0, slash))) / Rat(den);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + text);
    }
}

inline std::string format_scalar(const Rat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string format_scalar(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace socineff
