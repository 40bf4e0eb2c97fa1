#include "opn/spoof.hpp"

#include <optional>
#include <set>

#include "opn/arith.hpp"
#include "opn/error.hpp"
#include "opn/parallel.hpp"

namespace opn {

void validate(const SpoofCandidate& c) {
    if (c.pretend < 3 || c.pretend % 2 == 0)
        throw Error(ErrorKind::InvalidSpoof, "pretend prime must be odd and >= 3, got " + to_string(c.pretend));
    for (const auto& e : c.base.entries()) {
        if (e.prime == 2) throw Error(ErrorKind::InvalidSpoof, "base must be odd");
        if (e.exponent % 2 != 0)
            throw Error(ErrorKind::InvalidSpoof, "base exponent of " + to_string(e.prime) + " is odd");
    }
    if (gcd(c.base.value(), c.pretend) != 1)
        throw Error(ErrorKind::InvalidSpoof, "pretend prime shares a factor with the base");
}

Integer spoof_sigma(const SpoofCandidate& c) {
    validate(c);
    return sigma(c.base) * (c.pretend + 1);
}

SpoofVerdict verify_spoof(const SpoofCandidate& c, const FactorBudget& budget) {
    SpoofVerdict v;
    v.spoof_sigma_value = spoof_sigma(c);
    v.two_N = 2 * c.value();
    v.is_spoof_perfect = v.spoof_sigma_value == v.two_N;
    v.d_factorization = factor(c.pretend, budget);
    v.d_is_composite = !(v.d_factorization.size() == 1 && v.d_factorization.entries()[0].exponent == 1);
    v.genuine_perfect = v.is_spoof_perfect && !v.d_is_composite;
    v.d_mod4 = static_cast<unsigned>(mpz_fdiv_ui(c.pretend.get_mpz_t(), 4));
    v.q = c.pretend;
    v.n = c.base.value();
    mpz_sqrt(v.n.get_mpz_t(), v.n.get_mpz_t());
    v.q_vs_n = compare(v.q, v.n);
    return v;
}

std::vector<SpoofHit> search_descartes(const std::vector<Integer>& base_primes, const SpoofSearchOptions& options,
                                       const FactorBudget& budget) {
    std::set<Integer> distinct;
    for (const auto& p : base_primes) {
        if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, to_string(p) + " is not an odd prime");
        if (!distinct.insert(p).second) throw Error(ErrorKind::InvalidArgument, "duplicate prime " + to_string(p));
    }
    if (options.max_exponent % 2 != 0) throw Error(ErrorKind::InvalidArgument, "max_exponent must be even");

    // Sorted primes make the enumeration independent of input order.
    const std::vector<Integer> primes(distinct.begin(), distinct.end());
    const std::size_t radix = options.max_exponent / 2 + 1;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (cells > (std::size_t{1} << 40) / radix) throw Error(ErrorKind::InvalidArgument, "search space too large");
        cells *= radix;
    }

    std::vector<std::optional<SpoofHit>> slots(cells);
    parallel_for(cells, options.parallelism, [&](std::size_t index) {
        // Mixed-radix decode, first prime most significant.
        std::vector<PrimePower> powers(primes.size());
        std::size_t rest = index;
        for (std::size_t j = primes.size(); j-- > 0;) {
            powers[j] = {primes[j], 2 * static_cast<Exponent>(rest % radix)};
            rest /= radix;
        }
        const auto base = Factorization::from_powers(std::move(powers));
        const Integer square = base.value();
        const Integer s = sigma(base);
        const Integer denom = 2 * square - s;
        if (sgn(denom) <= 0 || !mpz_divisible_p(s.get_mpz_t(), denom.get_mpz_t())) return;
        const Integer d = s / denom;
        if (d <= 1 || d % 2 == 0 || d > options.d_limit) return;
        if (gcd(d, square) != 1) return;
        if (options.require_d_1mod4 && d % 4 != 1) return;
        SpoofCandidate candidate{base, d};
        auto verdict = verify_spoof(candidate, budget);
        if (!verdict.is_spoof_perfect) {
            throw Error(ErrorKind::InvalidSpoof, "search produced a candidate that fails re-verification");
        }
        slots[index] = SpoofHit{std::move(candidate), std::move(verdict)};
    });

    std::vector<SpoofHit> hits;
    for (auto& slot : slots)
        if (slot) hits.push_back(std::move(*slot));
    return hits;
}

}  // namespace opn
