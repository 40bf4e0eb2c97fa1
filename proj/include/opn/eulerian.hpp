#pragma once

#include <optional>
#include <set>

#include "opn/factorization.hpp"

namespace opn {

/// N = q^k n^2 with q the special prime, q = k = 1 (mod 4), gcd(q, n) = 1.
struct EulerianForm {
    Integer q;
    Exponent k = 1;
    Factorization n_factorization;
    Factorization N_factorization;

    Integer N() const { return N_factorization.value(); }
};

/// Structural parse only; sigma(N) = 2N is not required. Throws EvenInput,
/// NoSpecialPrime, MultipleOddExponents, SpecialPrimeResidue or
/// SpecialExponentResidue.
EulerianForm to_eulerian(const Factorization& f);

Integer n_of(const EulerianForm& e);

struct AdmissibilityReport {
    std::size_t distinct_primes = 0;
    std::size_t min_distinct = 9;
    bool meets_distinct_bound = false;
    /// q^3 < 3N, only evaluated when k = 1.
    std::optional<bool> cube_bound_holds;
    Integer q_cubed;
    Integer three_N;
};

AdmissibilityReport admissibility_report(const EulerianForm& e, std::size_t min_distinct = 9);

}  // namespace opn
