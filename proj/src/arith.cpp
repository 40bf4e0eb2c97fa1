#include "opn/arith.hpp"

#include "opn/error.hpp"

namespace opn {

Integer geometric_sum(const Integer& base, Exponent b) {
    if (base < 2) throw Error(ErrorKind::InvalidArgument, "geometric_sum base must be >= 2");
    Integer top = pow(base, b + 1) - 1;
    Integer denom = base - 1;
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), denom.get_mpz_t());
    return top;
}

Integer sigma_prime_power(const Integer& p, Exponent b) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
    return geometric_sum(p, b);
}

Integer sigma(const Factorization& f) {
    Integer s(1);
    for (const auto& e : f.entries()) s *= geometric_sum(e.prime, e.exponent);
    return s;
}

bool is_perfect(const Integer& n, const FactorBudget& budget) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "is_perfect requires n >= 1");
    return sigma(factor(n, budget)) == 2 * n;
}

ExactRatio abundancy(const Factorization& f) { return ExactRatio(sigma(f), f.value()); }

Exponent prime_valuation(const Integer& p, const Integer& m) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "valuation requires m >= 1");
    return valuation(p, m);
}

TwoThirdsCheck two_thirds_bound_check(const Integer& p, Exponent b) {
    if (p == 2) throw Error(ErrorKind::InvalidArgument, "two-thirds bound is stated for odd primes");
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "exponent b must be >= 1");
    const ExactRatio s(sigma_prime_power(p, 2 * b));
    const ExactRatio power(pow(p, 2 * b));
    return {
        .holds_general = ExactRatio(p - 1, p) * s < power,
        .holds_two_thirds = ExactRatio(2, 3) * s < power,
    };
}

ReciprocalSum reciprocal_prime_sum(const Factorization& f, const Ln2Bracket& bracket) {
    ExactRatio sum;
    for (const auto& e : f.entries()) sum = sum + ExactRatio(Integer(1), e.prime);
    return {sum, locate_against_ln2(sum, bracket)};
}

}  // namespace opn
