#include <doctest.h>

#include "opn/arith.hpp"
#include "opn/dris.hpp"
#include "opn/error.hpp"
#include "oracles.hpp"

using namespace opn;

namespace {

EulerianForm form(const char* text, std::set<Integer> pretend = {}) {
    return to_eulerian(Factorization::from_powers(parse_powers(text), pretend));
}

const TraceLine& line(const std::vector<TraceLine>& lines, std::string_view id) {
    for (const auto& l : lines)
        if (l.id == id) return l;
    FAIL("missing trace line " << id);
    return lines.front();
}

}  // namespace

TEST_CASE("special_decomposition examples") {
    auto sd = special_decomposition(form("13*3^2"));
    REQUIRE(sd.s() == 1);
    CHECK(sd.specials[0].p == 3);
    CHECK(sd.specials[0].b == 1);
    CHECK(sd.specials[0].t == 1);
    CHECK(sd.specials[0].c == 0);
    CHECK(sd.specials[0].c_q == 0);
    CHECK(sd.residual.empty());
    CHECK(classify_case(sd) == CaseTag::KEquals1);

    sd = special_decomposition(form("61*13^2"));
    REQUIRE(sd.s() == 1);
    CHECK(sd.specials[0].p == 13);
    CHECK(sd.specials[0].t == 1);
    CHECK(sd.specials[0].c_q == 0);

    sd = special_decomposition(form("5*3^2"));
    CHECK(sd.s() == 0);
    CHECK(sd.residual.str() == "3^1");
}

TEST_CASE("natural k = 5 decompositions") {
    // Valuations below were computed independently with sympy.
    auto sd = special_decomposition(form("5^5*11^4*41^4*3^2"));
    REQUIRE(sd.s() == 2);
    CHECK(sd.specials[0].p == 11);
    CHECK(sd.specials[1].p == 41);
    for (const auto& sp : sd.specials) {
        CHECK(sp.b == 2);
        CHECK(sp.t == 1);
        CHECK(sp.c == 0);
        CHECK(sp.c_q == 0);
    }
    CHECK(sd.residual.str() == "3^1");
    CHECK(classify_case(sd) == CaseTag::Case1);
    auto r = check_theorem_main(sd);
    CHECK(r.cond1 == true);
    CHECK(r.cond2 == false);
    CHECK(r.cond3 == false);
    CHECK(r.guaranteed_qk_lt_n);
    CHECK(r.direct_qk_lt_n == std::strong_ordering::less);  // 3125 < 610203
    REQUIRE(r.case1_witness_r.has_value());
    CHECK(*r.case1_witness_r == 31);  // sigma(5^5) = 2 * 3^2 * 7 * 31

    sd = special_decomposition(form("5^5*31^4"));
    REQUIRE(sd.s() == 1);
    CHECK(sd.specials[0].c_q == 1);
    CHECK(classify_case(sd) == CaseTag::Case2);
    r = check_theorem_main(sd);
    CHECK(r.cond1 == false);
    CHECK(r.cond2 == true);
    CHECK(r.guaranteed_qk_lt_n);
    CHECK_FALSE(r.case1_witness_r.has_value());

    sd = special_decomposition(form("13^5*3^2*61^2"));
    REQUIRE(sd.s() == 2);
    CHECK(sd.specials[0].c == 1);
    CHECK(sd.specials[0].c_q == 1);
    CHECK(sd.specials[1].c == 0);
    CHECK(sd.specials[1].c_q == 1);
    CHECK(classify_case(sd) == CaseTag::Case3);
    r = check_theorem_main(sd);
    CHECK(r.cond3 == false);
    CHECK_FALSE(r.guaranteed_qk_lt_n);
    CHECK(r.valuation_ratio->str() == "1/61");
    CHECK(r.threshold_seven == std::strong_ordering::less);
    CHECK(r.threshold_exact == ExactThreshold::Below);
    CHECK(r.direct_qk_lt_n == std::strong_ordering::greater);

    const auto g = gcd_product_diagnostic(sd);
    CHECK(g.lhs == 3);
    CHECK(g.rhs == 183);
    CHECK(g.order == std::strong_ordering::less);
}

TEST_CASE("synthetic decompositions") {
    SpecialDecomposition sd{form("5^5*31^4"), {}, {}};
    SUBCASE("s = 2, all c_q = 0 is Case 1") {
        sd.specials = {{Integer(11), 2, 1, 0, 0}, {Integer(41), 2, 1, 0, 0}};
        CHECK(classify_case(sd) == CaseTag::Case1);
    }
    SUBCASE("s = 1, c_1q = 3 is Case 2 and not guaranteed") {
        sd.specials = {{Integer(31), 2, 1, 0, 3}};
        CHECK(classify_case(sd) == CaseTag::Case2);
        const auto r = check_theorem_main(sd);
        CHECK(r.cond2 == false);
        CHECK_FALSE(r.guaranteed_qk_lt_n);
        CHECK(r.threshold_seven == std::strong_ordering::less);
        CHECK(r.threshold_exact == ExactThreshold::Below);
    }
    SUBCASE("s = 1, c_1 = 0, c_1q = 0 satisfies condition 1") {
        sd.specials = {{Integer(31), 2, 1, 0, 0}};
        const auto r = check_theorem_main(sd);
        CHECK(r.cond1 == true);
        CHECK(r.guaranteed_qk_lt_n);
    }
    SUBCASE("condition 3 thresholds around 7 and 2/(1 - ln 2)") {
        // ratio 7: meets the official bound and exceeds 6.518...
        sd.specials = {{Integer(7), 1, 1, 1, 0}, {Integer(3), 1, 1, 0, 1}};
        auto r = check_theorem_main(sd);
        CHECK(classify_case(sd) == CaseTag::Case3);
        CHECK(r.valuation_ratio->str() == "7/3");
        CHECK(r.cond3 == false);
        sd.specials = {{Integer(7), 1, 1, 2, 0}, {Integer(3), 1, 1, 0, 1}, {Integer(5), 1, 1, 0, 0}};
        r = check_theorem_main(sd);
        CHECK(r.valuation_ratio->str() == "49/3");
        CHECK(r.cond3 == true);
        CHECK(r.threshold_seven == std::strong_ordering::greater);
        CHECK(r.threshold_exact == ExactThreshold::Exceeds);
        // 13/2 = 6.5 sits just below 2/(1 - ln 2) = 6.5177...
        sd.specials = {{Integer(13), 1, 1, 1, 0}, {Integer(2), 1, 1, 0, 1}};
        r = check_theorem_main(sd);
        CHECK(r.threshold_exact == ExactThreshold::Below);
        // 111/17 = 6.5294... is above it but below 7.
        sd.specials = {{Integer(3), 1, 1, 1, 0}, {Integer(37), 1, 1, 1, 0}, {Integer(17), 1, 1, 0, 1}};
        r = check_theorem_main(sd);
        CHECK(r.threshold_exact == ExactThreshold::Exceeds);
        CHECK(r.threshold_seven == std::strong_ordering::less);
        CHECK(r.cond3 == false);
    }
}

TEST_CASE("k = 1 never yields the k > 1 guarantee") {
    const auto sd = special_decomposition(form("13*3^2"));
    const auto r = check_theorem_main(sd);
    CHECK(r.case_tag == CaseTag::KEquals1);
    CHECK_FALSE(r.guaranteed_qk_lt_n);
    CHECK(r.k1_argument_applies);
    CHECK_FALSE(r.cond1.has_value());
    CHECK(r.direct_q_lt_n == std::strong_ordering::greater);  // 13 > 3
}

TEST_CASE("s = 0") {
    const auto sd = special_decomposition(form("5^5*3^2"));
    CHECK(classify_case(sd) == CaseTag::NotApplicable);
    const auto r = check_theorem_main(sd);
    CHECK_FALSE(r.guaranteed_qk_lt_n);
    CHECK_FALSE(r.threshold_seven.has_value());
    CHECK_THROWS_WITH_AS(gcd_product_diagnostic(sd), doctest::Contains("NotApplicable"), Error);
}

TEST_CASE("gcd diagnostic with one special prime") {
    const auto sd = special_decomposition(form("5^5*31^4"));
    const auto g = gcd_product_diagnostic(sd);
    CHECK(g.lhs == 1);
    CHECK(g.rhs == 31);  // gcd(3906, 31^4)
}

TEST_CASE("valuation consistency over random forms") {
    const auto primes = oracle::primes_up_to(120);
    int with_specials = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint64_t q = std::vector<std::uint64_t>{5, 13, 17, 29, 37, 41, 61}[oracle::uniform(0, 6)];
        const Exponent k = oracle::uniform(0, 1) ? 1 : 5;
        std::vector<PrimePower> powers{{Integer(q), k}};
        for (auto p : primes) {
            if (p == 2 || p == q || oracle::uniform(0, 3) != 0) continue;
            powers.push_back({Integer(p), 2 * oracle::uniform(1, 2)});
        }
        const auto sd = special_decomposition(to_eulerian(Factorization::from_powers(powers)));
        with_specials += sd.s() > 0;
        Integer product(1);
        for (const auto& sp : sd.specials) product *= sigma_prime_power(sp.p, 2 * sp.b);
        const Integer sigma_qk = sigma_prime_power(Integer(q), k);
        for (const auto& sp : sd.specials) {
            CHECK(mpz_divisible_p(Integer(sigma_prime_power(sp.p, 2 * sp.b)).get_mpz_t(), Integer(q).get_mpz_t()));
            // Repeated exact division as the independent valuation route.
            Integer rest = product;
            Exponent c = 0;
            while (rest % sp.p == 0) {
                rest /= sp.p;
                ++c;
            }
            CHECK(c == sp.c);
            rest = sigma_qk;
            c = 0;
            while (rest % sp.p == 0) {
                rest /= sp.p;
                ++c;
            }
            CHECK(c == sp.c_q);
            CHECK(valuation(sp.p, sigma_prime_power(sp.p, 2 * sp.b)) == 0);
        }
        // specials and residual partition the primes of n.
        CHECK(sd.s() + sd.residual.size() == sd.form.n_factorization.size());
        for (const auto& sp : sd.specials) CHECK_FALSE(sd.residual.contains(sp.p));
    }
    CHECK(with_specials > 0);
}

TEST_CASE("k = 1 shape of the Descartes spoof") {
    const auto e = form("3^2*7^2*11^2*13^2*22021", {Integer(22021)});
    const auto shape = section2_shape(e);
    CHECK(shape.p == 13);  // shares 61 with 22021, the largest common factor
    CHECK(shape.b == 1);
    REQUIRE(shape.r_list.size() == 3);
    CHECK(shape.r_list[0].prime == 7);  // sigma(7^2) = 57 = 3 * 19
    CHECK(shape.r_list[1].prime == 3);
    CHECK(shape.w_value == 33);
    CHECK(shape.c_q == 1);  // 22022 = 2 * 7 * 11^2 * 13
    CHECK(shape.c_1 == 0);
    CHECK(shape.N() == Integer("198585576189"));

    const auto t = inequality_trace_k1(shape);
    CHECK(t.case_number == 2);
    CHECK(line(t.chain, "sigma_product").holds);  // the spoof identity
    CHECK(line(t.chain, "sigma_product").rhs == ExactRatio(Integer("397171152378")));
    CHECK_FALSE(line(t.premises, "q_divides_sigma_p").holds);
    CHECK_FALSE(line(t.premises, "u_congruence").holds);
    CHECK_FALSE(t.final_holds);
    CHECK(line(t.chain, "final").rhs == ExactRatio(2 * pow(Integer(22021), 3)));
    CHECK(t.n == 3003);
    CHECK(t.q_vs_n == std::strong_ordering::greater);
}

TEST_CASE("k = 1 shape premise failures") {
    CHECK_THROWS_WITH_AS(section2_shape(form("13^5*3^2")), doctest::Contains("PremiseFailure"), Error);
    CHECK_THROWS_WITH_AS(section2_shape(form("13*3^2")), doctest::Contains("PremiseFailure"), Error);
    // Only p and one other prime: r_1 exists but no r_2 divides sigma(r_1^2).
    CHECK_THROWS_WITH_AS(section2_shape(form("13*3^2*5^2")), doctest::Contains("PremiseFailure"), Error);

    Section2Shape bare{Integer(13), Integer(3), 1, {}, Integer(1), 0, 0};
    CHECK_THROWS_WITH_AS(inequality_trace_k1(bare), doctest::Contains("PremiseFailure"), Error);
    CHECK_THROWS_AS(section2_shape(form("13*3^2*11^2*7^2"), Integer(5)), Error);
}

TEST_CASE("tiny synthetic shape, case 1") {
    // q = 13 | sigma(3^2); 7 | sigma(11^2) = 133; 3 does not divide 14.
    const auto shape = section2_shape(form("13*3^2*11^2*7^2"));
    CHECK(shape.p == 3);
    CHECK(shape.r_list[0].prime == 11);
    CHECK(shape.r_list[1].prime == 7);
    const auto t = inequality_trace_k1(shape);
    CHECK(t.case_number == 1);
    CHECK(t.chain.size() == 5);
    CHECK(line(t.premises, "q_divides_sigma_p").holds);
    CHECK(line(t.premises, "r2_divides_sigma_r1").holds);
    CHECK(line(t.premises, "p_power_two_thirds").holds);
    // sigma(7^2) = 57 carries 3^1 while 2b - c_1 = 2.
    CHECK_FALSE(line(t.premises, "w_valuation").holds);
    CHECK_FALSE(line(t.chain, "sigma_product").holds);
    CHECK(line(t.chain, "final").holds);  // N = 13 * 9 * 121 * 49 > 13^3
    CHECK(t.q_vs_n == std::strong_ordering::less);
    CHECK(line(t.chain, "two_thirds").implied_by_previous == true);
    CHECK(line(t.chain, "sigma_ge_q").implied_by_previous == true);
}

TEST_CASE("trace chain steps follow whenever their premises hold") {
    const auto primes = oracle::primes_up_to(60);
    int case1 = 0, case2 = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Integer p(static_cast<unsigned long>(primes[oracle::uniform(1, primes.size() - 1)]));
        const Exponent b = oracle::uniform(1, 2);
        const auto sf = factor(sigma_prime_power(p, 2 * b));
        const Integer q = sf.entries().back().prime;
        const Integer r1(static_cast<unsigned long>(primes[oracle::uniform(1, primes.size() - 1)]));
        const Exponent beta1 = oracle::uniform(1, 2);
        const Integer s1 = sigma_prime_power(r1, 2 * beta1);
        Integer r2(0);
        const Factorization s1f = factor(s1);
        for (const auto& e : s1f.entries())
            if (e.prime != 2 && e.prime != p && e.prime != q && e.prime != r1) r2 = e.prime;
        if (r2 == 0 || r1 == p || r1 == q) continue;

        Section2Shape shape{q, p, b, {{r1, beta1}, {r2, oracle::uniform(1, 2)}}, Integer(0), 0, 0};
        const Integer extra(static_cast<unsigned long>(primes[oracle::uniform(1, primes.size() - 1)]));
        if (extra != p && extra != q && extra != r1 && extra != r2) shape.r_list.push_back({extra, 1});
        shape.w_value = 1;
        for (std::size_t i = 1; i < shape.r_list.size(); ++i)
            shape.w_value *= pow(shape.r_list[i].prime, shape.r_list[i].exponent);
        shape.c_q = valuation(p, q + 1);
        shape.c_1 = valuation(p, s1);

        const auto t = inequality_trace_k1(shape);
        auto holds = [&](const char* id) { return line(t.premises, id).holds; };
        auto implied = [&](const char* id) { return line(t.chain, id).implied_by_previous.value(); };
        CHECK(holds("q_divides_sigma_p"));
        CHECK(holds("r2_divides_sigma_r1"));
        if (t.case_number == 1) {
            ++case1;
            if (holds("w_valuation")) CHECK(implied("bound_factors"));
            if (holds("p_power_two_thirds") && holds("r2_at_least_3")) CHECK(implied("two_thirds"));
            CHECK(implied("sigma_ge_q"));
            CHECK(implied("final"));
        } else {
            ++case2;
            CHECK(implied("bound_factors"));
            if (holds("combined_div")) CHECK(implied("substitute_combined"));
            CHECK(implied("collect"));
            if (holds("p_power_two_thirds")) CHECK(implied("two_thirds"));
            CHECK(implied("sigma_as_uq"));
            if (holds("u_lower") && holds("r2_at_least_3")) CHECK(implied("u_and_r2_lower"));
            CHECK(implied("final"));
            CHECK(holds("u_congruence"));
        }
    }
    CHECK(case1 > 0);
    CHECK(case2 > 0);
}
