#include "opn/eulerian.hpp"

#include "opn/error.hpp"

namespace opn {

EulerianForm to_eulerian(const Factorization& f) {
    if (f.contains(Integer(2))) throw Error(ErrorKind::EvenInput, f.str() + " is even");
    const PrimePower* special = nullptr;
    std::vector<PrimePower> halves;
    for (const auto& e : f.entries()) {
        if (e.exponent % 2 == 1) {
            if (special) {
                throw Error(ErrorKind::MultipleOddExponents,
                            to_string(special->prime) + " and " + to_string(e.prime) + " both have odd exponent");
            }
            special = &e;
        } else {
            halves.push_back({e.prime, e.exponent / 2});
        }
    }
    if (!special) throw Error(ErrorKind::NoSpecialPrime, f.str() + " has no odd exponent");
    if (special->prime % 4 != 1)
        throw Error(ErrorKind::SpecialPrimeResidue, to_string(special->prime) + " is not 1 mod 4");
    if (special->exponent % 4 != 1)
        throw Error(ErrorKind::SpecialExponentResidue, "exponent " + std::to_string(special->exponent) + " is not 1 mod 4");

    // Entries of f are already validated, so halving keeps them valid.
    std::set<Integer> carried;
    for (const auto& h : halves) carried.insert(h.prime);
    return EulerianForm{
        .q = special->prime,
        .k = special->exponent,
        .n_factorization = Factorization::from_powers(std::move(halves), carried),
        .N_factorization = f,
    };
}

Integer n_of(const EulerianForm& e) { return e.n_factorization.value(); }

AdmissibilityReport admissibility_report(const EulerianForm& e, std::size_t min_distinct) {
    AdmissibilityReport r;
    r.distinct_primes = e.N_factorization.size();
    r.min_distinct = min_distinct;
    r.meets_distinct_bound = r.distinct_primes >= min_distinct;
    r.q_cubed = pow(e.q, 3);
    r.three_N = 3 * e.N();
    if (e.k == 1) r.cube_bound_holds = r.q_cubed < r.three_N;
    return r;
}

}  // namespace opn
