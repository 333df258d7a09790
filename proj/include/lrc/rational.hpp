#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lrc {

// Exact arbitrary-precision rational. GMP keeps values canonical (reduced,
// positive denominator) through arithmetic; construct via make_rational to
// canonicalize raw numerator/denominator pairs.
using Rational = mpq_class;
using BigInt = mpz_class;

/// mpz_class has no long long constructor; every integer in this project fits
/// comfortably in long.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

inline Rational make_rational(long long num, long long den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "8/15" for proper fractions, "3" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    return make_rational(big_pow(base.get_num(), exp), big_pow(base.get_den(), exp));
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace lrc
