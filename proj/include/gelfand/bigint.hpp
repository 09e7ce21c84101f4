#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gelfand {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Int from a 64-bit signed value (gmpxx has no long long constructor).
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

/// n (n-1) ... (n-k+1)
inline Int falling_factorial(long long n, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= to_int(n - static_cast<long long>(i));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

/// Canonicalized fraction (mpq_class two-argument constructors do not reduce).
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Collapses a rational that must be an integer by construction; throws if it is not.
inline Int require_integer(const Rat& q, const char* context) {
    if (!is_integer(q)) {
        throw std::logic_error(std::string(context) + ": expected an integer, got " + q.get_str());
    }
    return q.get_num();
}

/// Natural log of a (possibly huge) positive integer via mantissa/exponent split.
inline double log_int(const Int& v) {
    if (v <= 0) throw std::invalid_argument("log_int: argument must be positive");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace gelfand
