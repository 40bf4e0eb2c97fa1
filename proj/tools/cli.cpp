#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "opn/arith.hpp"
#include "opn/dris.hpp"
#include "opn/error.hpp"
#include "opn/eulerian.hpp"
#include "opn/records.hpp"
#include "opn/spoof.hpp"

namespace opn::cli {

namespace {

using records::Record;

Integer positive(const std::string& text, const char* what) {
    Integer v = parse_integer(text);
    if (v < 1) throw Error(ErrorKind::ParseError, std::string(what) + " must be a positive integer");
    return v;
}

Factorization parse_factorization(const std::string& text, const std::vector<std::string>& pretend) {
    std::set<Integer> units;
    for (const auto& d : pretend) units.insert(positive(d, "pretend prime"));
    return Factorization::from_powers(parse_powers(text), units);
}

std::string scalar(const Record& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

class Printer {
public:
    Printer(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    /// Single result: one key=value per line in text mode.
    void single(const Record& r) {
        if (format_ == OutputFormat::Records) {
            out_ << records::line(r) << '\n';
            return;
        }
        for (const auto& [key, value] : r.items()) {
            if (key != "record") out_ << key << '=' << scalar(value) << '\n';
        }
    }

    /// One of many results: one line per record.
    void row(const Record& r) {
        if (format_ == OutputFormat::Records) {
            out_ << records::line(r) << '\n';
            return;
        }
        bool first = true;
        for (const auto& [key, value] : r.items()) {
            if (key == "record") continue;
            out_ << (first ? "" : " ") << key << '=' << scalar(value);
            first = false;
        }
        out_ << '\n';
    }

    /// Bare value in text mode, full record otherwise.
    void bare(const std::string& text, const Record& r) {
        if (format_ == OutputFormat::Records) {
            out_ << records::line(r) << '\n';
        } else {
            out_ << text << '\n';
        }
    }

private:
    std::ostream& out_;
    OutputFormat format_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const char* env = std::getenv(kCacheEnv); env && *env) config.cache_path = env;

    CLI::App app{"Odd perfect number toolkit: divisor sums, Eulerian forms, Descartes spoofs, q^k < n checks", "opn"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--cache", config.cache_path, "Factor cache file (default: $" + std::string(kCacheEnv) + ")");
    app.add_option("--trial-bound", config.trial_bound, "Trial division bound")->check(CLI::PositiveNumber);
    app.add_option("--rho-iterations", config.rho_iterations, "Pollard rho iterations per attempt")
        ->check(CLI::PositiveNumber);
    app.add_option("--ln2-cap", config.ln2_precision_cap, "Max series terms when refining the ln 2 bracket")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", config.parallelism, "Worker threads for scans")->check(CLI::PositiveNumber);

    // Set by the chosen subcommand; executed after parsing.
    std::function<void(Printer&, const FactorBudget&, FactorCache*)> action;
    std::vector<std::string> pretend;
    auto add_pretend = [&](CLI::App* sub) {
        sub->add_option("--pretend", pretend, "Composite base to treat as an opaque prime (repeatable)");
    };

    std::string n_text, fact_text, d_text, p_text, m_text;
    std::uint64_t b_value = 1;

    auto* sigma_cmd = app.add_subcommand("sigma", "Sum of divisors of N");
    sigma_cmd->add_option("N", n_text)->required();
    sigma_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache* cache) {
            const Integer n = positive(n_text, "N");
            const auto f = factor(n, budget, cache);
            const Integer v = opn::sigma(f);
            pr.bare(to_string(v), records::sigma(n, f, v));
        };
    });

    auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of N");
    factor_cmd->add_option("N", n_text)->required();
    factor_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache* cache) {
            const Integer n = positive(n_text, "N");
            const auto f = factor(n, budget, cache);
            pr.bare(f.str(), records::factorization(n, f));
        };
    });

    auto* perfect_cmd = app.add_subcommand("perfect", "Whether sigma(N) = 2N");
    perfect_cmd->add_option("N", n_text)->required();
    perfect_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache* cache) {
            const Integer n = positive(n_text, "N");
            const bool yes = opn::sigma(factor(n, budget, cache)) == 2 * n;
            pr.bare(yes ? "true" : "false", records::perfect(n, yes));
        };
    });

    auto* abundancy_cmd = app.add_subcommand("abundancy", "sigma(N)/N as an exact ratio");
    abundancy_cmd->add_option("N", n_text)->required();
    abundancy_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache* cache) {
            const Integer n = positive(n_text, "N");
            const auto a = opn::abundancy(factor(n, budget, cache));
            pr.bare(a.str(), records::abundancy(n, a));
        };
    });

    auto* valuation_cmd = app.add_subcommand("valuation", "Exponent of prime P in M");
    valuation_cmd->add_option("P", p_text)->required();
    valuation_cmd->add_option("M", m_text)->required();
    valuation_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const Integer p = positive(p_text, "P");
            const Integer m = positive(m_text, "M");
            const Exponent e = prime_valuation(p, m);
            pr.bare(std::to_string(e), records::valuation(p, m, e));
        };
    });

    auto* two_thirds_cmd = app.add_subcommand("two-thirds", "Check ((p-1)/p) and (2/3) bounds on sigma(p^{2b})");
    two_thirds_cmd->add_option("P", p_text)->required();
    two_thirds_cmd->add_option("B", b_value)->required()->check(CLI::PositiveNumber);
    two_thirds_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const Integer p = positive(p_text, "P");
            pr.single(records::two_thirds(p, b_value, two_thirds_bound_check(p, b_value)));
        };
    });

    auto* recip_cmd = app.add_subcommand("reciprocal-sum", "Sum of 1/p over the primes of a factorization vs ln 2");
    recip_cmd->add_option("FACTORIZATION", fact_text)->required();
    add_pretend(recip_cmd);
    recip_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const auto f = parse_factorization(fact_text, pretend);
            pr.single(records::reciprocal_sum(f, reciprocal_prime_sum(f)));
        };
    });

    auto* eulerian_cmd = app.add_subcommand("eulerian", "Parse N = q^k n^2 and report admissibility");
    eulerian_cmd->add_option("FACTORIZATION", fact_text)->required();
    std::size_t min_distinct = 9;
    eulerian_cmd->add_option("--min-distinct", min_distinct, "Required number of distinct primes");
    add_pretend(eulerian_cmd);
    eulerian_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const auto e = to_eulerian(parse_factorization(fact_text, pretend));
            pr.single(records::eulerian(e, admissibility_report(e, min_distinct)));
        };
    });

    auto* spoof_verify_cmd = app.add_subcommand("spoof-verify", "Verify base * d with d pretended prime");
    spoof_verify_cmd->add_option("BASE", fact_text)->required();
    spoof_verify_cmd->add_option("d", d_text)->required();
    spoof_verify_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            SpoofCandidate c{Factorization::from_powers(parse_powers(fact_text)), positive(d_text, "d")};
            pr.single(records::spoof(c, verify_spoof(c, budget)));
        };
    });

    auto* spoof_search_cmd = app.add_subcommand("spoof-search", "Search Descartes spoofs over a prime set");
    std::vector<std::string> prime_list;
    SpoofSearchOptions search;
    std::string d_limit = "1000000000";
    bool any_residue = false;
    spoof_search_cmd->add_option("--primes", prime_list, "Comma separated odd primes")->required()->delimiter(',');
    spoof_search_cmd->add_option("--max-exp", search.max_exponent, "Largest even exponent")->capture_default_str();
    spoof_search_cmd->add_option("--d-limit", d_limit, "Largest pretend prime d")->capture_default_str();
    spoof_search_cmd->add_flag("--any-residue", any_residue, "Do not require d = 1 (mod 4)");
    spoof_search_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            std::vector<Integer> primes;
            for (const auto& p : prime_list) primes.push_back(positive(p, "prime"));
            search.d_limit = positive(d_limit, "d-limit");
            search.require_d_1mod4 = !any_residue;
            search.parallelism = config.parallelism;
            for (const auto& hit : search_descartes(primes, search, budget))
                pr.row(records::spoof(hit.candidate, hit.verdict));
        };
    });

    auto* dris_cmd = app.add_subcommand("dris-check", "Special decomposition, case and q^k < n conditions");
    dris_cmd->add_option("FACTORIZATION", fact_text)->required();
    add_pretend(dris_cmd);
    dris_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            const auto sd = special_decomposition(to_eulerian(parse_factorization(fact_text, pretend)));
            pr.single(records::dris(sd, check_theorem_main(sd, {config.ln2_precision_cap, budget})));
        };
    });

    auto* trace_cmd = app.add_subcommand("trace-k1", "Evaluate the k = 1 inequality chain on a factorization");
    trace_cmd->add_option("FACTORIZATION", fact_text)->required();
    std::string chosen_p;
    trace_cmd->add_option("--p", chosen_p, "Prime p with q | sigma(p^{2b})");
    add_pretend(trace_cmd);
    trace_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const auto form = to_eulerian(parse_factorization(fact_text, pretend));
            std::optional<Integer> p;
            if (!chosen_p.empty()) p = positive(chosen_p, "p");
            const auto shape = section2_shape(form, p);
            pr.single(records::trace(shape, inequality_trace_k1(shape)));
        };
    });

    CyclotomicScanOptions scan;
    std::string q_min = "2", q_max;
    auto add_scan_options = [&](CLI::App* sub) {
        sub->add_option("--qmax", q_max, "Largest q")->required();
        sub->add_option("--qmin", q_min, "Smallest q")->capture_default_str();
        sub->add_option("--k", scan.k_set, "Comma separated exponents, each 1 mod 4 and > 1")
            ->required()
            ->delimiter(',');
        sub->add_flag("--probe", scan.probe_mode, "Scan every integer q, not only primes q = 1 (mod 4)");
    };
    auto prepare_scan = [&](const FactorBudget& budget) {
        scan.q_min = positive(q_min, "qmin");
        scan.q_max = positive(q_max, "qmax");
        scan.parallelism = config.parallelism;
        scan.budget = budget;
    };

    auto* squarefree_cmd = app.add_subcommand("scan-squarefree", "Repeated prime factors of 1 + q^2 + ... + q^{k-1}");
    add_scan_options(squarefree_cmd);
    squarefree_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            prepare_scan(budget);
            for (const auto& cell : cyclotomic_squarefree_scan(scan)) pr.row(records::squarefree_cell(cell));
        };
    });

    auto* residue_cmd = app.add_subcommand("scan-residue", "Residues mod (k+1)/2 of primes dividing 1 + q^2 + ... + q^{k-1}");
    add_scan_options(residue_cmd);
    residue_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            prepare_scan(budget);
            for (const auto& cell : cyclotomic_residue_scan(scan)) pr.row(records::residue_cell(cell));
        };
    });

    auto* lemma_cmd = app.add_subcommand("scan-lemma-u", "Check u = -1 (mod p) and u >= 2p-1 over a (p, b) grid");
    std::string p_max;
    std::uint64_t b_max = 1;
    lemma_cmd->add_option("--pmax", p_max, "Largest odd prime p")->required();
    lemma_cmd->add_option("--bmax", b_max, "Largest b")->required();
    lemma_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget& budget, FactorCache*) {
            for (const auto& t : lemma_u_scan(positive(p_max, "pmax"), b_max, config.parallelism, budget))
                pr.row(records::lemma_u(t));
        };
    });

    auto* gcd_cmd = app.add_subcommand("gcd-diagnostic", "Compare the pairwise gcd product with the sigma(q^k) gcd product");
    gcd_cmd->add_option("FACTORIZATION", fact_text)->required();
    add_pretend(gcd_cmd);
    gcd_cmd->callback([&] {
        action = [&](Printer& pr, const FactorBudget&, FactorCache*) {
            const auto sd = special_decomposition(to_eulerian(parse_factorization(fact_text, pretend)));
            pr.single(records::gcd_diagnostic(sd, gcd_product_diagnostic(sd)));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 2;
    }
    config.output_format = format == "records" ? OutputFormat::Records : OutputFormat::Text;

    try {
        std::unique_ptr<FactorCache> cache;
        if (config.cache_path) cache = std::make_unique<FactorCache>(*config.cache_path);
        const FactorBudget budget{config.trial_bound, config.rho_iterations};
        Printer printer(out, config.output_format);
        action(printer, budget, cache.get());
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    }
    return 0;
}

}  // namespace opn::cli
