#include "pdakit/numeric.hpp"

#include "pdakit/error.hpp"

#include <limits>

namespace pdakit {

namespace bmp = boost::multiprecision;

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    constexpr auto kLimit = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) is exact before the division; result <= 2^64 keeps it in 128 bits.
        result = result * (n - k + i) / i;
        if (result > kLimit) {
            throw OverflowError("binomial C(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

std::uint64_t to_u64(const BigInt& value, const char* what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError(std::string(what) + " = " + value.str() + " does not fit in 64 bits");
    }
    return value.convert_to<std::uint64_t>();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

std::string render_scaled(BigInt scaled, bool negative, unsigned places) {
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = negative && scaled != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

}  // namespace

std::string format_decimal(const Rational& value, unsigned places) {
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;
    const BigInt scale = ipow(10, places);
    const BigInt num = numerator(mag) * scale;
    const BigInt den = denominator(mag);
    BigInt q = num / den;
    const BigInt twice_rem = 2 * (num % den);
    if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;
    return render_scaled(q, negative, places);
}

std::string format_decimal_truncated(const Rational& value, unsigned places) {
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;
    const BigInt scaled = numerator(mag) * ipow(10, places) / denominator(mag);
    return render_scaled(scaled, negative, places);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace pdakit
