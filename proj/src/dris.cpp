#include "opn/dris.hpp"

#include <algorithm>
#include <set>

#include "opn/arith.hpp"
#include "opn/error.hpp"
#include "opn/parallel.hpp"

namespace opn {

namespace {

ExactRatio ratio_pow(const Integer& p, long long e) {
    const Integer magnitude = pow(p, static_cast<Exponent>(e < 0 ? -e : e));
    return e < 0 ? ExactRatio(Integer(1), magnitude) : ExactRatio(magnitude);
}

Factorization trusted(std::vector<PrimePower> powers) {
    std::set<Integer> bases;
    for (const auto& pp : powers) bases.insert(pp.prime);
    return Factorization::from_powers(std::move(powers), bases);
}

bool relation_holds(const ExactRatio& lhs, const ExactRatio& rhs, Relation rel) {
    switch (rel) {
    case Relation::Equal: return lhs == rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    }
    return false;
}

TraceLine make_line(std::string id, std::string statement, ExactRatio lhs, ExactRatio rhs, Relation rel) {
    TraceLine line{std::move(id), std::move(statement), std::move(lhs), std::move(rhs), rel, false, std::nullopt};
    line.holds = relation_holds(line.lhs, line.rhs, rel);
    return line;
}

void push_chain(std::vector<TraceLine>& chain, TraceLine line) {
    if (!chain.empty()) {
        const auto& prev = chain.back();
        const ExactRatio prev_ratio = prev.rhs / prev.lhs;
        const ExactRatio ratio = line.rhs / line.lhs;
        line.implied_by_previous = ratio <= prev_ratio;
    }
    chain.push_back(std::move(line));
}

int mobius(unsigned long n) {
    int result = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

void validate_k_set(const std::vector<Exponent>& ks) {
    if (ks.empty()) throw Error(ErrorKind::InvalidArgument, "k set is empty");
    for (Exponent k : ks) {
        if (k <= 1 || k % 4 != 1) throw Error(ErrorKind::InvalidArgument, "k must be 1 mod 4 and > 1, got " + std::to_string(k));
    }
}

std::vector<Integer> scan_qs(const CyclotomicScanOptions& options) {
    std::vector<Integer> qs;
    for (Integer q = std::max(options.q_min, Integer(2)); q <= options.q_max; ++q) {
        if (options.probe_mode || (q % 4 == 1 && is_prime(q))) qs.push_back(q);
    }
    return qs;
}

}  // namespace

SpecialDecomposition special_decomposition(const EulerianForm& form) {
    SpecialDecomposition sd{form, {}, {}};
    const Integer sigma_qk = geometric_sum(form.q, form.k);
    std::vector<PrimePower> residual;
    Integer product(1);
    for (const auto& e : form.n_factorization.entries()) {
        const Integer s = geometric_sum(e.prime, 2 * e.exponent);
        const Exponent t = valuation(form.q, s);
        if (t == 0) {
            residual.push_back(e);
            continue;
        }
        sd.specials.push_back({e.prime, e.exponent, t, 0, valuation(e.prime, sigma_qk)});
        product *= s;
    }
    for (auto& sp : sd.specials) sp.c = valuation(sp.p, product);
    sd.residual = trusted(std::move(residual));
    return sd;
}

std::string_view case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::KEquals1: return "KEquals1";
    case CaseTag::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

CaseTag classify_case(const SpecialDecomposition& sd) {
    if (sd.form.k == 1) return CaseTag::KEquals1;
    if (sd.specials.empty()) return CaseTag::NotApplicable;
    const bool any_divides = std::any_of(sd.specials.begin(), sd.specials.end(), [](const auto& sp) { return sp.c_q > 0; });
    if (!any_divides) return CaseTag::Case1;
    return sd.s() == 1 ? CaseTag::Case2 : CaseTag::Case3;
}

std::string_view threshold_name(ExactThreshold t) {
    switch (t) {
    case ExactThreshold::Exceeds: return "Exceeds";
    case ExactThreshold::Below: return "Below";
    case ExactThreshold::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

DrisReport check_theorem_main(const SpecialDecomposition& sd, const DrisOptions& options) {
    DrisReport r;
    const auto& form = sd.form;
    r.case_tag = classify_case(sd);
    const Integer n = n_of(form);
    r.direct_q_lt_n = compare(form.q, n);
    r.direct_qk_lt_n = compare(pow(form.q, form.k), n);
    r.k1_argument_applies = form.k == 1;

    if (sd.specials.empty()) return r;

    Integer with_c(1), with_cq(1);
    bool any_divides = false;
    for (const auto& sp : sd.specials) {
        with_c *= pow(sp.p, sp.c);
        with_cq *= pow(sp.p, sp.c_q);
        any_divides = any_divides || sp.c_q > 0;
    }
    const ExactRatio ratio(with_c, with_cq);
    r.valuation_ratio = ratio;
    r.threshold_seven = ratio <=> ExactRatio(7);
    // ratio > 2/(1 - ln 2)  <=>  ln 2 < 1 - 2/ratio
    if (ratio <= ExactRatio(2)) {
        r.threshold_exact = ExactThreshold::Below;
    } else {
        switch (locate_against_ln2(ExactRatio(1) - ExactRatio(2) / ratio, options.ln2_max_terms)) {
        case BracketPosition::Above: r.threshold_exact = ExactThreshold::Exceeds; break;
        case BracketPosition::Below: r.threshold_exact = ExactThreshold::Below; break;
        case BracketPosition::Inconclusive: r.threshold_exact = ExactThreshold::Inconclusive; break;
        }
    }

    if (form.k == 1) return r;

    r.cond1 = !any_divides;
    r.cond2 = sd.s() == 1 && sd.specials[0].c_q > 0 && sd.specials[0].c_q <= 2;
    r.cond3 = sd.s() > 1 && any_divides && with_c >= 7 * with_cq;
    r.guaranteed_qk_lt_n = *r.cond1 || *r.cond2 || *r.cond3;

    if (r.case_tag == CaseTag::Case1) {
        try {
            const auto f = factor(geometric_sum(form.q, form.k), options.budget);
            for (auto it = f.entries().rbegin(); it != f.entries().rend(); ++it) {
                const bool special = std::any_of(sd.specials.begin(), sd.specials.end(),
                                                 [&](const auto& sp) { return sp.p == it->prime; });
                if (it->exponent == 1 && !special) {
                    r.case1_witness_r = it->prime;
                    break;
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FactoringLimit) throw;
        }
    }
    return r;
}

GcdDiagnostic gcd_product_diagnostic(const SpecialDecomposition& sd) {
    if (sd.specials.empty()) throw Error(ErrorKind::NotApplicable, "no special primes (s = 0)");
    GcdDiagnostic d{Integer(1), Integer(1)};
    const Integer sigma_qk = geometric_sum(sd.form.q, sd.form.k);
    std::vector<Integer> powers, sigmas;
    for (const auto& sp : sd.specials) {
        powers.push_back(pow(sp.p, 2 * sp.b));
        sigmas.push_back(geometric_sum(sp.p, 2 * sp.b));
        d.rhs *= gcd(sigma_qk, powers.back());
    }
    for (std::size_t i = 0; i < powers.size(); ++i) {
        for (std::size_t j = i + 1; j < powers.size(); ++j) {
            d.lhs *= gcd(sigmas[i] * sigmas[j], powers[i] * powers[j]);
        }
    }
    d.order = compare(d.lhs, d.rhs);
    return d;
}

Integer Section2Shape::N() const {
    Integer v = q * pow(p, 2 * b);
    for (const auto& r : r_list) v *= pow(r.prime, 2 * r.exponent);
    return v;
}

Section2Shape section2_shape(const EulerianForm& form, const std::optional<Integer>& p) {
    if (form.k != 1) throw Error(ErrorKind::PremiseFailure, "the k = 1 chain needs k = 1, got k = " + std::to_string(form.k));
    const auto& entries = form.n_factorization.entries();
    if (entries.empty()) throw Error(ErrorKind::PremiseFailure, "n = 1 has no prime p");

    const PrimePower* chosen = nullptr;
    if (p) {
        auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.prime == *p; });
        if (it == entries.end()) throw Error(ErrorKind::InvalidArgument, to_string(*p) + " does not divide n");
        chosen = &*it;
    } else {
        std::vector<const PrimePower*> dividing;
        Integer best_gcd(0);
        for (const auto& e : entries) {
            const Integer s = geometric_sum(e.prime, 2 * e.exponent);
            if (mpz_divisible_p(s.get_mpz_t(), form.q.get_mpz_t())) dividing.push_back(&e);
            const Integer g = gcd(s, form.q);
            if (g > best_gcd) {
                best_gcd = g;
                chosen = &e;
            }
        }
        if (dividing.size() > 1)
            throw Error(ErrorKind::PremiseFailure, "q divides sigma(p^{2b}) for several p; pass p explicitly");
        if (dividing.size() == 1) chosen = dividing.front();
    }

    std::vector<PrimePower> others;
    for (const auto& e : entries)
        if (&e != chosen) others.push_back(e);
    if (others.empty()) throw Error(ErrorKind::PremiseFailure, "no primes r_i besides p; r_2 >= 3 is required");

    for (std::size_t i = 0; i < others.size(); ++i) {
        const Integer s1 = geometric_sum(others[i].prime, 2 * others[i].exponent);
        for (std::size_t j = 0; j < others.size(); ++j) {
            if (j == i || !mpz_divisible_p(s1.get_mpz_t(), others[j].prime.get_mpz_t())) continue;
            Section2Shape shape;
            shape.q = form.q;
            shape.p = chosen->prime;
            shape.b = chosen->exponent;
            shape.r_list = {others[i], others[j]};
            for (std::size_t m = 0; m < others.size(); ++m)
                if (m != i && m != j) shape.r_list.push_back(others[m]);
            shape.w_value = 1;
            for (std::size_t m = 1; m < shape.r_list.size(); ++m)
                shape.w_value *= pow(shape.r_list[m].prime, shape.r_list[m].exponent);
            shape.c_q = valuation(shape.p, form.q + 1);
            shape.c_1 = valuation(shape.p, s1);
            return shape;
        }
    }
    throw Error(ErrorKind::PremiseFailure, "no r_1, r_2 with r_2 | sigma(r_1^{2 beta_1})");
}

std::string_view relation_symbol(Relation r) {
    switch (r) {
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    }
    return "?";
}

K1Trace inequality_trace_k1(const Section2Shape& shape) {
    if (shape.r_list.size() < 2) throw Error(ErrorKind::PremiseFailure, "r_2 does not exist");
    const Integer& q = shape.q;
    const Integer& p = shape.p;
    const Integer& r1 = shape.r_list[0].prime;
    const Integer& r2 = shape.r_list[1].prime;
    const Integer sigma_q = q + 1;
    const Integer sigma_p = geometric_sum(p, 2 * shape.b);
    const Integer sigma_r1 = geometric_sum(r1, 2 * shape.r_list[0].exponent);
    Integer sigma_w2(1), w(1);
    for (std::size_t i = 1; i < shape.r_list.size(); ++i) {
        sigma_w2 *= geometric_sum(shape.r_list[i].prime, 2 * shape.r_list[i].exponent);
        w *= pow(shape.r_list[i].prime, shape.r_list[i].exponent);
    }
    if (w != shape.w_value || shape.c_q != valuation(p, sigma_q) || shape.c_1 != valuation(p, sigma_r1))
        throw Error(ErrorKind::PremiseFailure, "shape fields are inconsistent with its primes");
    if (!mpz_divisible_p(sigma_r1.get_mpz_t(), r2.get_mpz_t()))
        throw Error(ErrorKind::PremiseFailure, "r_2 does not divide sigma(r_1^{2 beta_1})");

    K1Trace t;
    const Integer N = shape.N();
    const ExactRatio twoN(2 * N);
    const long long two_b = static_cast<long long>(2 * shape.b);
    const long long c1 = static_cast<long long>(shape.c_1);
    const long long cq = static_cast<long long>(shape.c_q);
    const ExactRatio two_thirds(2, 3);
    const Integer p_c1 = pow(p, shape.c_1);
    const Integer sigma_w_val = Integer(static_cast<unsigned long>(valuation(p, sigma_w2)));

    auto& pre = t.premises;
    pre.push_back(make_line("q_divides_sigma_p", "sigma(p^{2b}) mod q = 0", ExactRatio(Integer(sigma_p % q)), 0,
                            Relation::Equal));
    pre.push_back(make_line("r2_divides_sigma_r1", "sigma(r_1^{2beta_1}) mod p^{c_1} r_2 = 0",
                            ExactRatio(Integer(sigma_r1 % (p_c1 * r2))), 0, Relation::Equal));
    pre.push_back(make_line("p_power_two_thirds", "p^{2b} > (2/3) sigma(p^{2b})", ExactRatio(pow(p, 2 * shape.b)),
                            two_thirds * sigma_p, Relation::Greater));
    pre.push_back(make_line("r2_at_least_3", "r_2 >= 3", ExactRatio(r2), 3, Relation::GreaterEqual));

    auto& chain = t.chain;
    push_chain(chain, make_line("sigma_product", "2N = sigma(q) sigma(p^{2b}) sigma(r_1^{2beta_1}) sigma(w^2)", twoN,
                                ExactRatio(sigma_q * sigma_p * sigma_r1 * sigma_w2), Relation::Equal));

    if (shape.c_q == 0) {
        t.case_number = 1;
        pre.push_back(make_line("p_not_divides_sigma_q", "v_p(q + 1) = 0", cq, 0, Relation::Equal));
        pre.push_back(make_line("w_valuation", "v_p(sigma(w^2)) = 2b - c_1", ExactRatio(sigma_w_val), two_b - c1,
                                Relation::Equal));
        push_chain(chain, make_line("bound_factors", "2N > (q+1) q (p^{c_1} r_2) p^{2b-c_1}", twoN,
                                    ExactRatio(sigma_q * q * p_c1 * r2) * ratio_pow(p, two_b - c1), Relation::Greater));
        push_chain(chain, make_line("two_thirds", "2N > q^2 3 (2/3) sigma(p^{2b})", twoN,
                                    ExactRatio(q * q * 3) * two_thirds * sigma_p, Relation::Greater));
        push_chain(chain, make_line("sigma_ge_q", "2N > q^2 3 (2/3) q", twoN, ExactRatio(q * q * 3) * two_thirds * q,
                                    Relation::Greater));
        push_chain(chain, make_line("final", "N > q^3", ExactRatio(N), ExactRatio(pow(q, 3)), Relation::Greater));
    } else {
        t.case_number = 2;
        const ExactRatio u(sigma_p, q);
        const Integer p_cq = pow(p, shape.c_q);
        pre.push_back(make_line("p_divides_sigma_q", "v_p(q + 1) >= 1", cq, 1, Relation::GreaterEqual));
        if (u.is_integer()) {
            const Integer ui = u.numerator();
            Integer u_mod_p, pu_mod, one_mod;
            mpz_fdiv_r(u_mod_p.get_mpz_t(), ui.get_mpz_t(), p.get_mpz_t());
            const Integer pu = (p - 1) * ui;
            mpz_fdiv_r(pu_mod.get_mpz_t(), pu.get_mpz_t(), p_cq.get_mpz_t());
            one_mod = Integer(1) % p_cq;
            pre.push_back(make_line("u_congruence", "u mod p = p - 1", ExactRatio(u_mod_p), ExactRatio(p - 1),
                                    Relation::Equal));
            pre.push_back(make_line("pu_congruence", "(p-1)u mod p^{c_q} = 1 mod p^{c_q}", ExactRatio(pu_mod),
                                    ExactRatio(one_mod), Relation::Equal));
        } else {
            // u is not an integer, so neither congruence can hold.
            auto line = make_line("u_congruence", "u mod p = p - 1", u, ExactRatio(p - 1), Relation::Equal);
            line.holds = false;
            pre.push_back(std::move(line));
            line = make_line("pu_congruence", "(p-1)u mod p^{c_q} = 1 mod p^{c_q}", ExactRatio(p - 1) * u, 1,
                             Relation::Equal);
            line.holds = false;
            pre.push_back(std::move(line));
        }
        pre.push_back(make_line("u_lower", "u >= 2p - 1", u, ExactRatio(2 * p - 1), Relation::GreaterEqual));
        pre.push_back(make_line("w_valuation", "v_p(sigma(w^2)) = 2b - c_q - c_1", ExactRatio(sigma_w_val),
                                two_b - cq - c1, Relation::Equal));
        pre.push_back(make_line("sigma_w_lower", "sigma(w^2) >= p^{2b - c_q - c_1}", ExactRatio(sigma_w2),
                                ratio_pow(p, two_b - cq - c1), Relation::GreaterEqual));
        pre.push_back(make_line("pu_lower", "(p-1)u > p^{c_q}", ExactRatio(p - 1) * u, ExactRatio(p_cq), Relation::Greater));
        pre.push_back(make_line("combined", "sigma(w^2)(p-1)u > p^{2b-c_1}", ExactRatio(sigma_w2 * (p - 1)) * u,
                                ratio_pow(p, two_b - c1), Relation::Greater));
        pre.push_back(make_line("combined_div", "sigma(w^2) u > p^{2b-c_1}/(p-1)", ExactRatio(sigma_w2) * u,
                                ratio_pow(p, two_b - c1) / ExactRatio(p - 1), Relation::Greater));

        const ExactRatio q2(q * q);
        push_chain(chain, make_line("bound_factors", "2N > (q+1) uq (p^{c_1} r_2) sigma(w^2)", twoN,
                                    ExactRatio(sigma_q * q * p_c1 * r2 * sigma_w2) * u, Relation::Greater));
        push_chain(chain, make_line("substitute_combined", "2N > q^2 (p^{2b-c_1}/(p-1)) p^{c_1} r_2", twoN,
                                    q2 * ratio_pow(p, two_b - c1) / ExactRatio(p - 1) * ExactRatio(p_c1 * r2),
                                    Relation::Greater));
        push_chain(chain, make_line("collect", "2N > q^2 r_2 p^{2b}/(p-1)", twoN,
                                    q2 * ExactRatio(r2 * pow(p, 2 * shape.b)) / ExactRatio(p - 1), Relation::Greater));
        push_chain(chain, make_line("two_thirds", "2N > q^2 r_2 2 sigma(p^{2b}) / (3(p-1))", twoN,
                                    q2 * ExactRatio(r2 * 2 * sigma_p, 3 * (p - 1)), Relation::Greater));
        push_chain(chain, make_line("sigma_as_uq", "2N > q^2 r_2 2uq / (3(p-1))", twoN,
                                    q2 * ExactRatio(r2 * 2 * q, 3 * (p - 1)) * u, Relation::Greater));
        push_chain(chain, make_line("u_and_r2_lower", "2N > q^3 3 (2/3) (2p-1)/(p-1)", twoN,
                                    ExactRatio(pow(q, 3) * 2 * (2 * p - 1), p - 1), Relation::Greater));
        push_chain(chain, make_line("final", "N > 2q^3", ExactRatio(N), ExactRatio(2 * pow(q, 3)), Relation::Greater));
    }
    t.final_holds = chain.back().holds;
    t.n = pow(p, shape.b);
    for (const auto& r : shape.r_list) t.n *= pow(r.prime, r.exponent);
    t.q_vs_n = compare(q, t.n);
    return t;
}

Integer cyclotomic_value(unsigned long d, const Integer& x) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
    if (x < 2) throw Error(ErrorKind::InvalidArgument, "cyclotomic_value needs x >= 2");
    Integer num(1), den(1);
    for (unsigned long e = 1; e <= d; ++e) {
        if (d % e) continue;
        const int mu = mobius(d / e);
        if (mu == 1) num *= pow(x, e) - 1;
        if (mu == -1) den *= pow(x, e) - 1;
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

Integer even_power_sum(const Integer& q, Exponent k) {
    if (k % 2 == 0) throw Error(ErrorKind::InvalidArgument, "even_power_sum needs odd k");
    Integer sum(0), term(1);
    const Integer q2 = q * q;
    for (Exponent i = 0; i <= (k - 1) / 2; ++i) {
        sum += term;
        term *= q2;
    }
    return sum;
}

Factorization factor_even_power_sum(const Integer& q, Exponent k, const FactorBudget& budget) {
    const Integer E = even_power_sum(q, k);
    if (q < 2) return factor(E, budget);
    // (q^{k+1} - 1)/(q^2 - 1) = prod of Phi_d(q) over d | k+1 with d > 2.
    Factorization f;
    for (Exponent d = 3; d <= k + 1; ++d) {
        if ((k + 1) % d) continue;
        f = f.times(factor(cyclotomic_value(d, q), budget));
    }
    if (f.value() != E) throw Error(ErrorKind::InvalidArgument, "cyclotomic split does not reproduce E");
    return f;
}

std::vector<SquarefreeCell> cyclotomic_squarefree_scan(const CyclotomicScanOptions& options) {
    validate_k_set(options.k_set);
    const auto qs = scan_qs(options);
    const std::size_t nk = options.k_set.size();
    std::vector<SquarefreeCell> cells(qs.size() * nk);
    parallel_for(cells.size(), options.parallelism, [&](std::size_t i) {
        SquarefreeCell& cell = cells[i];
        cell.q = qs[i / nk];
        cell.k = options.k_set[i % nk];
        cell.E = even_power_sum(cell.q, cell.k);
        cell.factorization = factor_even_power_sum(cell.q, cell.k, options.budget);
        for (const auto& e : cell.factorization.entries())
            if (e.exponent >= 2) cell.violations.push_back(e);
    });
    return cells;
}

std::vector<ResidueEntry> ResidueCell::exceptions() const {
    std::vector<ResidueEntry> out;
    for (const auto& e : primes)
        if (!e.holds) out.push_back(e);
    return out;
}

std::vector<ResidueCell> cyclotomic_residue_scan(const CyclotomicScanOptions& options) {
    validate_k_set(options.k_set);
    const auto qs = scan_qs(options);
    const std::size_t nk = options.k_set.size();
    std::vector<ResidueCell> cells(qs.size() * nk);
    parallel_for(cells.size(), options.parallelism, [&](std::size_t i) {
        ResidueCell& cell = cells[i];
        cell.q = qs[i / nk];
        cell.k = options.k_set[i % nk];
        cell.E = even_power_sum(cell.q, cell.k);
        cell.modulus = Integer(static_cast<unsigned long>((cell.k + 1) / 2));
        const Factorization split = factor_even_power_sum(cell.q, cell.k, options.budget);
        for (const auto& e : split.entries()) {
            Integer residue = e.prime % cell.modulus;
            const bool holds = residue == Integer(1) % cell.modulus;
            cell.primes.push_back({e.prime, std::move(residue), holds});
        }
    });
    return cells;
}

std::vector<LemmaUTriple> lemma_u_scan(const Integer& p_max, Exponent b_max, unsigned parallelism,
                                       const FactorBudget& budget) {
    std::vector<Integer> ps;
    for (Integer p = 3; p <= p_max; p += 2)
        if (is_prime(p)) ps.push_back(p);
    const std::size_t cells = b_max == 0 ? 0 : ps.size() * b_max;
    std::vector<std::vector<LemmaUTriple>> slots(cells);
    parallel_for(cells, parallelism, [&](std::size_t i) {
        const Integer& p = ps[i / b_max];
        const Exponent b = 1 + i % b_max;
        const Integer s = sigma_prime_power(p, 2 * b);
        const Factorization sf = factor(s, budget);
        for (const auto& e : sf.entries()) {
            const Integer& q = e.prime;
            if (!mpz_divisible_p(Integer(q + 1).get_mpz_t(), p.get_mpz_t())) continue;
            LemmaUTriple t;
            t.p = p;
            t.b = b;
            t.q = q;
            t.sigma = s;
            t.q_valuation = e.exponent;
            t.u = s / q;
            t.u_cofactor = s / pow(q, e.exponent);
            t.u_congruent = Integer(t.u % p) == p - 1;
            t.u_bound = t.u == 1 || t.u >= 2 * p - 1;
            t.p_coprime_sigma = valuation(p, s) == 0;
            slots[i].push_back(std::move(t));
        }
    });
    std::vector<LemmaUTriple> out;
    for (auto& slot : slots)
        for (auto& t : slot) out.push_back(std::move(t));
    return out;
}

}  // namespace opn
