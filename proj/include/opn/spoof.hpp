#pragma once

#include <compare>
#include <vector>

#include "opn/factorization.hpp"

namespace opn {

/// base * d where d is declared prime with sigma(d) = d + 1.
struct SpoofCandidate {
    Factorization base;
    Integer pretend;

    Integer value() const { return base.value() * pretend; }
};

/// Throws InvalidSpoof unless d is odd and >= 3, coprime to the base, and the
/// base has only odd primes with even exponents.
void validate(const SpoofCandidate& c);

struct SpoofVerdict {
    Integer spoof_sigma_value;
    Integer two_N;
    bool is_spoof_perfect = false;
    bool d_is_composite = false;
    /// Set when d turns out to be prime: the candidate would be a genuine
    /// odd perfect number.
    bool genuine_perfect = false;
    Factorization d_factorization;
    unsigned d_mod4 = 0;
    Integer q;
    Integer n;
    std::strong_ordering q_vs_n = std::strong_ordering::equal;
};

/// sigma(base) * (d + 1).
Integer spoof_sigma(const SpoofCandidate& c);

SpoofVerdict verify_spoof(const SpoofCandidate& c, const FactorBudget& budget = {});

struct SpoofSearchOptions {
    Exponent max_exponent = 2;
    Integer d_limit{1'000'000'000};
    bool require_d_1mod4 = true;
    unsigned parallelism = 1;
};

struct SpoofHit {
    SpoofCandidate candidate;
    SpoofVerdict verdict;
};

/// Enumerates every base = prod p^{e_p} over the given odd primes with even
/// e_p <= max_exponent (lexicographic over exponent vectors) and solves
/// sigma(base)(d+1) = 2 base d for d. Every hit is re-verified.
std::vector<SpoofHit> search_descartes(const std::vector<Integer>& base_primes, const SpoofSearchOptions& options,
                                       const FactorBudget& budget = {});

}  // namespace opn
