#pragma once

#include <utility>

#include "opn/factorization.hpp"
#include "opn/ratio.hpp"

namespace opn {

/// 1 + p + ... + p^b. Throws NotPrime for composite p.
Integer sigma_prime_power(const Integer& p, Exponent b);

/// Same sum without the primality check; used for Descartes pretend units.
Integer geometric_sum(const Integer& base, Exponent b);

/// Multiplicative divisor sum over the entries of f. Pretend units contribute
/// geometric_sum(d, e), so a spoof d^1 contributes d + 1.
Integer sigma(const Factorization& f);

bool is_perfect(const Integer& n, const FactorBudget& budget = {});

/// sigma(n)/n in lowest terms.
ExactRatio abundancy(const Factorization& f);

/// Valuation with a primality check on p.
Exponent prime_valuation(const Integer& p, const Integer& m);

struct TwoThirdsCheck {
    bool holds_general = false;     // ((p-1)/p) sigma(p^{2b}) < p^{2b}
    bool holds_two_thirds = false;  // (2/3) sigma(p^{2b}) < p^{2b}
};

/// Throws InvalidArgument for p = 2 or b = 0, NotPrime for composite p.
TwoThirdsCheck two_thirds_bound_check(const Integer& p, Exponent b);

struct ReciprocalSum {
    ExactRatio sum;
    BracketPosition versus_ln2 = BracketPosition::Inconclusive;
};

/// Exact sum of 1/p over the distinct primes of f, placed against the bracket.
ReciprocalSum reciprocal_prime_sum(const Factorization& f, const Ln2Bracket& bracket = Ln2Bracket::standard());

}  // namespace opn
