#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "opn/eulerian.hpp"
#include "opn/ratio.hpp"

namespace opn {

// ---------------------------------------------------------------------------
// Special decomposition and the q^k < n condition checker (k >= 5 analysis).
// ---------------------------------------------------------------------------

/// A prime p of n with q | sigma(p^{2b}).
struct SpecialPrime {
    Integer p;
    Exponent b = 0;    // p^{2b} || N
    Exponent t = 0;    // q^t || sigma(p^{2b}), t >= 1
    Exponent c = 0;    // p^c || prod_j sigma(p_j^{2b_j}) over all special primes
    Exponent c_q = 0;  // p^{c_q} || sigma(q^k)
};

struct SpecialDecomposition {
    EulerianForm form;
    std::vector<SpecialPrime> specials;
    /// The primes of n that are not special, with their exponents in n.
    Factorization residual;

    std::size_t s() const { return specials.size(); }
};

SpecialDecomposition special_decomposition(const EulerianForm& form);

enum class CaseTag { Case1, Case2, Case3, KEquals1, NotApplicable };
std::string_view case_name(CaseTag tag);

/// KEquals1 if k = 1, NotApplicable if s = 0, Case1 if every c_q is 0,
/// Case2 if s = 1, otherwise Case3.
CaseTag classify_case(const SpecialDecomposition& sd);

/// Comparison of prod p_i^{c_i - c_iq} against 2/(1 - ln 2).
enum class ExactThreshold { Exceeds, Below, Inconclusive };
std::string_view threshold_name(ExactThreshold t);

struct DrisReport {
    CaseTag case_tag = CaseTag::NotApplicable;
    std::optional<bool> cond1;
    std::optional<bool> cond2;
    std::optional<bool> cond3;
    /// prod p_i^{c_i} / prod p_i^{c_iq}; present when s >= 1.
    std::optional<ExactRatio> valuation_ratio;
    std::optional<ExactThreshold> threshold_exact;
    std::optional<std::strong_ordering> threshold_seven;
    bool guaranteed_qk_lt_n = false;
    /// k = 1: the q < n argument for the k = 1 case applies instead.
    bool k1_argument_applies = false;
    std::strong_ordering direct_q_lt_n = std::strong_ordering::equal;
    std::strong_ordering direct_qk_lt_n = std::strong_ordering::equal;
    /// Case 1 only: a prime r with r || sigma(q^k) that is not special.
    std::optional<Integer> case1_witness_r;
};

struct DrisOptions {
    std::size_t ln2_max_terms = 4096;
    FactorBudget budget;
};

DrisReport check_theorem_main(const SpecialDecomposition& sd, const DrisOptions& options = {});

struct GcdDiagnostic {
    Integer lhs;  // prod_{i<j} gcd(sigma(p_i^{2b_i} p_j^{2b_j}), p_i^{2b_i} p_j^{2b_j})
    Integer rhs;  // prod_i gcd(sigma(q^k), p_i^{2b_i})
    std::strong_ordering order = std::strong_ordering::equal;
};

/// Throws NotApplicable when s = 0.
GcdDiagnostic gcd_product_diagnostic(const SpecialDecomposition& sd);

// ---------------------------------------------------------------------------
// k = 1 inequality chains, evaluated numerically.
// ---------------------------------------------------------------------------

/// N = q p^{2b} r_1^{2 beta_1} ... r_j^{2 beta_j}, with r_list[0] = r_1 and
/// r_list[1] = r_2 where p^{c_1} r_2 | sigma(r_1^{2 beta_1}).
struct Section2Shape {
    Integer q;
    Integer p;
    Exponent b = 0;
    std::vector<PrimePower> r_list;  // exponents are beta_i (halved)
    Integer w_value;                 // prod_{i >= 2} r_i^{beta_i}
    Exponent c_q = 0;                // p^{c_q} || q + 1
    Exponent c_1 = 0;                // p^{c_1} || sigma(r_1^{2 beta_1})

    Integer N() const;
};

/// Casts a k = 1 form. p defaults to the prime of n whose sigma(p^{2b}) is
/// divisible by q; when none is, the one sharing the largest factor with q
/// (the divisibility then shows up as a failed premise in the trace).
/// Throws PremiseFailure when k != 1, n is empty, or no r_1, r_2 pair exists.
Section2Shape section2_shape(const EulerianForm& form, const std::optional<Integer>& p = std::nullopt);

enum class Relation { Equal, Greater, GreaterEqual };
std::string_view relation_symbol(Relation r);

struct TraceLine {
    std::string id;
    std::string statement;
    ExactRatio lhs;
    ExactRatio rhs;
    Relation relation = Relation::Greater;
    bool holds = false;
    /// Every chain line after the first: whether rhs/lhs did not grow, so the
    /// previous line (if true) implies this one up to strictness.
    std::optional<bool> implied_by_previous;
};

struct K1Trace {
    int case_number = 1;  // 1: p does not divide q + 1, 2: it does
    std::vector<TraceLine> premises;
    std::vector<TraceLine> chain;
    bool final_holds = false;  // N > q^3 (case 1) or N > 2 q^3 (case 2)
    Integer n;
    std::strong_ordering q_vs_n = std::strong_ordering::equal;
};

K1Trace inequality_trace_k1(const Section2Shape& shape);

// ---------------------------------------------------------------------------
// Empirical scanners.
// ---------------------------------------------------------------------------

/// Phi_d(x) for x >= 2.
Integer cyclotomic_value(unsigned long d, const Integer& x);

/// 1 + q^2 + q^4 + ... + q^{k-1} for odd k.
Integer even_power_sum(const Integer& q, Exponent k);

/// Factors even_power_sum(q, k) through its split into Phi_d(q), d | k+1, d > 2.
Factorization factor_even_power_sum(const Integer& q, Exponent k, const FactorBudget& budget = {});

struct CyclotomicScanOptions {
    Integer q_min{2};
    Integer q_max{100};
    std::vector<Exponent> k_set{5};
    /// Scan every integer q >= 2 instead of primes q = 1 (mod 4).
    bool probe_mode = false;
    unsigned parallelism = 1;
    FactorBudget budget;
};

struct SquarefreeCell {
    Integer q;
    Exponent k = 0;
    Integer E;
    Factorization factorization;
    std::vector<PrimePower> violations;  // primes with exponent >= 2

    bool squarefree() const { return violations.empty(); }
};

/// One cell per (q, k) in ascending q then k-set order.
std::vector<SquarefreeCell> cyclotomic_squarefree_scan(const CyclotomicScanOptions& options);

struct ResidueEntry {
    Integer r;
    Integer residue;  // r mod (k+1)/2
    bool holds = false;
};

struct ResidueCell {
    Integer q;
    Exponent k = 0;
    Integer E;
    Integer modulus;
    std::vector<ResidueEntry> primes;

    std::vector<ResidueEntry> exceptions() const;
};

std::vector<ResidueCell> cyclotomic_residue_scan(const CyclotomicScanOptions& options);

struct LemmaUTriple {
    Integer p;
    Exponent b = 0;
    Integer q;
    Integer sigma;            // sigma(p^{2b})
    Exponent q_valuation = 0; // q^v || sigma
    Integer u;                // sigma / q
    Integer u_cofactor;       // sigma / q^v
    bool u_congruent = false; // u = -1 (mod p)
    bool u_bound = false;     // u = 1 or u >= 2p - 1
    bool p_coprime_sigma = false;

    bool flagged() const { return !(u_congruent && u_bound && p_coprime_sigma); }
};

/// All (p, b, q) with p an odd prime <= p_max, 1 <= b <= b_max, q a prime
/// dividing sigma(p^{2b}) and p | q + 1.
std::vector<LemmaUTriple> lemma_u_scan(const Integer& p_max, Exponent b_max, unsigned parallelism = 1,
                                       const FactorBudget& budget = {});

}  // namespace opn
