#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wl2 {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown for malformed input or violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed the configured element budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Truncated decimal expansion with the given number of fractional digits.
std::string decimal(const Rational& r, int digits);

// 64-bit FNV-1a of the text as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace wl2
