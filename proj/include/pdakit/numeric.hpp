#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pdakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// C(n, k) as a 64-bit value, computed in 128-bit arithmetic.
/// Throws OverflowError when an intermediate or the result does not fit.
std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k);

BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Converts to a 64-bit unsigned value or throws OverflowError.
std::uint64_t to_u64(const BigInt& value, const char* what);

std::string to_string(const BigInt& value);

/// Reduced "a/b" form; integers render without a denominator.
std::string to_string(const Rational& value);

/// Reduced "a/b" form, always with a denominator ("2/1" for two).
std::string to_fraction_string(const Rational& value);

/// Decimal rendering with `places` digits after the point, rounded half to even.
std::string format_decimal(const Rational& value, unsigned places);

/// Decimal rendering truncated toward zero.
std::string format_decimal_truncated(const Rational& value, unsigned places);

double to_double(const Rational& value);

}  // namespace pdakit
