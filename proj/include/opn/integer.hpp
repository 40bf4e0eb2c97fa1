#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opn {

/// Arbitrary precision integer used for every value in the library.
using Integer = mpz_class;
using Exponent = std::uint64_t;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

Integer pow(const Integer& base, Exponent exponent);
Integer gcd(const Integer& a, const Integer& b);

/// Largest e with p^e | m. Requires p >= 2 and m != 0.
Exponent valuation(const Integer& p, const Integer& m);

bool fits_u64(const Integer& value);
std::uint64_t to_u64(const Integer& value);

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string_view ordering_name(std::strong_ordering order);

}  // namespace opn
