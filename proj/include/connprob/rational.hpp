#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace connprob {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy shared by all modules. Every throw site uses one of these so
// the CLI can map failures to exit codes and name them on stderr.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematically ill-posed request (log of a series with nonzero constant
// term, probability at a size with zero objects, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed input data (custom model files, bad parameter values).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A request needs more sequence terms than are available.
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

// An exhaustive enumeration would exceed its hard state budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Bad command-line usage; the CLI maps this to exit code 2.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Product of the odd numbers <= k; by convention (-1)!! = 1 (empty product).
inline Integer odd_double_factorial(long k) {
    if (k < -1) throw DomainError("double factorial of argument below -1");
    if (k % 2 == 0) throw DomainError("odd_double_factorial needs an odd argument");
    Integer r = 1;
    for (long v = 1; v <= k; v += 2) r *= v;
    return r;
}

inline Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw DomainError("negative power of zero");
        return 1 / rat_pow(base, -e);
    }
    Rational r = 1, b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "a/b", or just "a" for integers.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Fixed-point decimal rendering with `digits` places after the point, rounding
// half away from zero. Display-only: never used in computations.
std::string to_decimal(const Rational& r, int digits);

// Parse "123", "-4/5" style strings (used by custom model files and tests).
Integer parse_integer(const std::string& s);

}  // namespace connprob
