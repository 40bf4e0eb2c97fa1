#include "opn/integer.hpp"

#include <cctype>

#include "opn/error.hpp"

namespace opn {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty integer");
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) throw Error(ErrorKind::ParseError, "bare sign");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
        }
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer pow(const Integer& base, Exponent exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer result;
    mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

Exponent valuation(const Integer& p, const Integer& m) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "valuation base must be >= 2");
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero is unbounded");
    Integer rest = abs(m);
    Exponent e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

bool fits_u64(const Integer& value) {
    return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& value) {
    if (!fits_u64(value)) throw Error(ErrorKind::InvalidArgument, "value exceeds 64 bits: " + to_string(value));
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

std::string_view ordering_name(std::strong_ordering order) {
    if (order < 0) return "less";
    if (order > 0) return "greater";
    return "equal";
}

}  // namespace opn
