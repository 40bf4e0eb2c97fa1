#include "opn/records.hpp"

namespace opn::records {

namespace {

std::string s(const Integer& v) { return to_string(v); }

Record powers(const std::vector<PrimePower>& entries) {
    Record arr = Record::array();
    for (const auto& e : entries) arr.push_back(Record{{"p", s(e.prime)}, {"e", e.exponent}});
    return arr;
}

Record optional_bool(const std::optional<bool>& v) { return v ? Record(*v) : Record("not-evaluated"); }

}  // namespace

Record factorization(const Integer& n, const Factorization& f) {
    return {{"record", "factor"}, {"n", s(n)}, {"factorization", f.str()}, {"entries", powers(f.entries())}};
}

Record sigma(const Integer& n, const Factorization& f, const Integer& value) {
    return {{"record", "sigma"}, {"n", s(n)}, {"factorization", f.str()}, {"sigma", s(value)}};
}

Record perfect(const Integer& n, bool is_perfect) {
    return {{"record", "perfect"}, {"n", s(n)}, {"is_perfect", is_perfect}};
}

Record abundancy(const Integer& n, const ExactRatio& value) {
    return {{"record", "abundancy"}, {"n", s(n)}, {"abundancy", value.str()}};
}

Record valuation(const Integer& p, const Integer& m, Exponent e) {
    return {{"record", "valuation"}, {"p", s(p)}, {"m", s(m)}, {"valuation", e}};
}

Record two_thirds(const Integer& p, Exponent b, const TwoThirdsCheck& check) {
    return {{"record", "two_thirds"},
            {"p", s(p)},
            {"b", b},
            {"holds_general", check.holds_general},
            {"holds_two_thirds", check.holds_two_thirds}};
}

Record reciprocal_sum(const Factorization& f, const ReciprocalSum& sum) {
    return {{"record", "reciprocal_sum"},
            {"factorization", f.str()},
            {"sum", sum.sum.str()},
            {"versus_ln2", position_name(sum.versus_ln2)}};
}

Record eulerian(const EulerianForm& e, const AdmissibilityReport& a) {
    return {{"record", "eulerian"},
            {"N", s(e.N())},
            {"q", s(e.q)},
            {"k", e.k},
            {"n", s(n_of(e))},
            {"n_factorization", e.n_factorization.str()},
            {"distinct_primes", a.distinct_primes},
            {"min_distinct", a.min_distinct},
            {"meets_distinct_bound", a.meets_distinct_bound},
            {"q_cubed", s(a.q_cubed)},
            {"three_N", s(a.three_N)},
            {"cube_bound", a.cube_bound_holds ? Record(*a.cube_bound_holds ? "holds" : "violated")
                                              : Record("not-evaluated")}};
}

Record spoof(const SpoofCandidate& c, const SpoofVerdict& v) {
    return {{"record", "spoof"},
            {"base", c.base.str()},
            {"d", s(c.pretend)},
            {"d_factorization", v.d_factorization.str()},
            {"spoof_sigma", s(v.spoof_sigma_value)},
            {"two_N", s(v.two_N)},
            {"is_spoof_perfect", v.is_spoof_perfect},
            {"d_is_composite", v.d_is_composite},
            {"genuine_perfect", v.genuine_perfect},
            {"d_mod4", v.d_mod4},
            {"q", s(v.q)},
            {"n", s(v.n)},
            {"q_vs_n", ordering_name(v.q_vs_n)}};
}

Record dris(const SpecialDecomposition& sd, const DrisReport& r) {
    Record specials = Record::array();
    for (const auto& sp : sd.specials) {
        specials.push_back({{"p", s(sp.p)}, {"b", sp.b}, {"t", sp.t}, {"c", sp.c}, {"c_q", sp.c_q}});
    }
    return {{"record", "dris"},
            {"q", s(sd.form.q)},
            {"k", sd.form.k},
            {"n", s(n_of(sd.form))},
            {"s", sd.s()},
            {"specials", specials},
            {"residual", sd.residual.str()},
            {"case", case_name(r.case_tag)},
            {"cond1", optional_bool(r.cond1)},
            {"cond2", optional_bool(r.cond2)},
            {"cond3", optional_bool(r.cond3)},
            {"valuation_ratio", r.valuation_ratio ? Record(r.valuation_ratio->str()) : Record(nullptr)},
            {"threshold_exact", r.threshold_exact ? Record(threshold_name(*r.threshold_exact)) : Record("not-evaluated")},
            {"threshold_seven", r.threshold_seven ? Record(ordering_name(*r.threshold_seven)) : Record("not-evaluated")},
            {"guaranteed_qk_lt_n", r.guaranteed_qk_lt_n},
            {"k1_argument_applies", r.k1_argument_applies},
            {"direct_q_vs_n", ordering_name(r.direct_q_lt_n)},
            {"direct_qk_vs_n", ordering_name(r.direct_qk_lt_n)},
            {"case1_witness_r", r.case1_witness_r ? Record(s(*r.case1_witness_r)) : Record(nullptr)}};
}

Record trace(const Section2Shape& shape, const K1Trace& t) {
    auto lines = [](const std::vector<TraceLine>& src) {
        Record arr = Record::array();
        for (const auto& l : src) {
            Record rec{{"id", l.id},
                       {"statement", l.statement},
                       {"lhs", l.lhs.str()},
                       {"relation", relation_symbol(l.relation)},
                       {"rhs", l.rhs.str()},
                       {"holds", l.holds}};
            if (l.implied_by_previous) rec["implied_by_previous"] = *l.implied_by_previous;
            arr.push_back(std::move(rec));
        }
        return arr;
    };
    return {{"record", "trace_k1"},
            {"q", s(shape.q)},
            {"p", s(shape.p)},
            {"b", shape.b},
            {"r_list", powers(shape.r_list)},
            {"w", s(shape.w_value)},
            {"c_q", shape.c_q},
            {"c_1", shape.c_1},
            {"case", t.case_number},
            {"premises", lines(t.premises)},
            {"chain", lines(t.chain)},
            {"final_holds", t.final_holds},
            {"n", s(t.n)},
            {"q_vs_n", ordering_name(t.q_vs_n)}};
}

Record gcd_diagnostic(const SpecialDecomposition& sd, const GcdDiagnostic& d) {
    return {{"record", "gcd_diagnostic"},
            {"q", s(sd.form.q)},
            {"k", sd.form.k},
            {"s", sd.s()},
            {"lhs", s(d.lhs)},
            {"rhs", s(d.rhs)},
            {"lhs_vs_rhs", ordering_name(d.order)}};
}

Record squarefree_cell(const SquarefreeCell& cell) {
    return {{"record", "squarefree"},
            {"q", s(cell.q)},
            {"k", cell.k},
            {"E", s(cell.E)},
            {"factorization", cell.factorization.str()},
            {"squarefree", cell.squarefree()},
            {"violations", powers(cell.violations)}};
}

Record residue_cell(const ResidueCell& cell) {
    Record primes = Record::array();
    Record exceptions = Record::array();
    for (const auto& e : cell.primes) {
        primes.push_back({{"r", s(e.r)}, {"residue", s(e.residue)}, {"holds", e.holds}});
        if (!e.holds) exceptions.push_back(s(e.r));
    }
    return {{"record", "residue"},
            {"q", s(cell.q)},
            {"k", cell.k},
            {"E", s(cell.E)},
            {"modulus", s(cell.modulus)},
            {"primes", primes},
            {"exceptions", exceptions}};
}

Record lemma_u(const LemmaUTriple& t) {
    return {{"record", "lemma_u"},
            {"p", s(t.p)},
            {"b", t.b},
            {"q", s(t.q)},
            {"sigma", s(t.sigma)},
            {"q_valuation", t.q_valuation},
            {"u", s(t.u)},
            {"u_cofactor", s(t.u_cofactor)},
            {"u_congruent", t.u_congruent},
            {"u_bound", t.u_bound},
            {"p_coprime_sigma", t.p_coprime_sigma},
            {"flagged", t.flagged()}};
}

std::string line(const Record& r) { return r.dump(); }

}  // namespace opn::records
