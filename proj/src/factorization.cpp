#include "opn/factorization.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "opn/error.hpp"

namespace opn {

namespace {

constexpr std::array<unsigned long, 24> kWitnesses = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1, const Integer& odd, Exponent twos,
                        unsigned long witness) {
    Integer x;
    const Integer a(witness);
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (Exponent r = 1; r < twos; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Primes below `bound`, cached for the most recent bound.
const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
    static std::mutex mutex;
    static std::uint64_t cached_bound = 0;
    static std::vector<std::uint32_t> primes;
    std::lock_guard lock(mutex);
    bound = std::min<std::uint64_t>(bound, 100'000'000);
    if (bound != cached_bound) {
        std::vector<bool> composite(bound + 1, false);
        primes.clear();
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (composite[i]) continue;
            primes.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
        }
        cached_bound = bound;
    }
    return primes;
}

// Brent's cycle finding with batched gcds. Returns a proper divisor or 0.
Integer brent_rho(const Integer& n, unsigned long c, std::uint64_t max_iterations) {
    constexpr std::uint64_t kBatch = 128;
    Integer y(2), x, ys, q(1), g(1), diff;
    std::uint64_t r = 1, spent = 0;
    auto step = [&](Integer& v) {
        v *= v;
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t m = std::min(kBatch, r - k);
            for (std::uint64_t i = 0; i < m; ++i) {
                step(y);
                diff = x - y;
                q *= diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            k += m;
            spent += m;
        }
        if (spent > max_iterations) return 0;
        r *= 2;
    }
    if (g == n) {
        // Batch overshot; replay one step at a time.
        do {
            step(ys);
            diff = x - ys;
            g = gcd(diff, n);
        } while (g == 1);
    }
    return (g == n) ? Integer(0) : g;
}

void split_composite(const Integer& n, const FactorBudget& budget, std::map<Integer, Exponent>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_composite(root, budget, out);
        split_composite(root, budget, out);
        return;
    }
    for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
        const Integer d = brent_rho(n, 1 + attempt, budget.rho_iterations);
        if (d != 0) {
            const Integer other = n / d;
            split_composite(d, budget, out);
            split_composite(other, budget, out);
            return;
        }
    }
    throw Error(ErrorKind::FactoringLimit, "could not split " + to_string(n) + " within budget");
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    const Integer n_minus_1 = n - 1;
    Integer odd = n_minus_1;
    const Exponent twos = mpz_scan1(odd.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), twos);
    const std::size_t rounds = fits_u64(n) ? 12 : kWitnesses.size();
    for (std::size_t i = 0; i < rounds; ++i) {
        if (!miller_rabin_round(n, n_minus_1, odd, twos, kWitnesses[i])) return false;
    }
    return true;
}

Factorization Factorization::from_powers(std::vector<PrimePower> powers, const std::set<Integer>& pretend) {
    std::map<Integer, Exponent> merged;
    for (auto& pp : powers) {
        if (pp.exponent == 0) continue;
        if (pp.prime < 2) throw Error(ErrorKind::NotPrime, to_string(pp.prime) + " is not a prime base");
        merged[pp.prime] += pp.exponent;
    }
    std::vector<PrimePower> entries;
    entries.reserve(merged.size());
    for (auto& [base, e] : merged) entries.push_back({base, e});
    for (const auto& entry : entries) {
        if (pretend.contains(entry.prime)) {
            for (const auto& other : entries) {
                if (other.prime != entry.prime && gcd(other.prime, entry.prime) != 1) {
                    throw Error(ErrorKind::NotCoprime, "pretend unit " + to_string(entry.prime) + " shares a factor with " +
                                                           to_string(other.prime));
                }
            }
        } else if (!is_prime(entry.prime)) {
            throw Error(ErrorKind::NotPrime, to_string(entry.prime) + " is composite");
        }
    }
    return Factorization(std::move(entries));
}

Integer Factorization::value() const {
    Integer v(1);
    for (const auto& e : entries_) v *= pow(e.prime, e.exponent);
    return v;
}

Exponent Factorization::exponent_of(const Integer& prime) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                               [](const PrimePower& pp, const Integer& p) { return pp.prime < p; });
    return (it != entries_.end() && it->prime == prime) ? it->exponent : 0;
}

Factorization Factorization::scaled(Exponent factor) const {
    if (factor == 0) return {};
    auto copy = entries_;
    for (auto& e : copy) e.exponent *= factor;
    return Factorization(std::move(copy));
}

Factorization Factorization::without(const Integer& prime) const {
    std::vector<PrimePower> kept;
    for (const auto& e : entries_)
        if (e.prime != prime) kept.push_back(e);
    return Factorization(std::move(kept));
}

Factorization Factorization::times(const Factorization& other) const {
    std::map<Integer, Exponent> merged;
    for (const auto& e : entries_) merged[e.prime] += e.exponent;
    for (const auto& e : other.entries_) merged[e.prime] += e.exponent;
    std::vector<PrimePower> out;
    for (auto& [p, e] : merged) out.push_back({p, e});
    return Factorization(std::move(out));
}

std::string Factorization::str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& e : entries_) {
        if (!s.empty()) s += '*';
        s += to_string(e.prime) + "^" + std::to_string(e.exponent);
    }
    return s;
}

std::string Factorization::spaced() const {
    std::string s;
    for (const auto& e : entries_) {
        if (!s.empty()) s += ' ';
        s += to_string(e.prime) + "^" + std::to_string(e.exponent);
    }
    return s;
}

std::vector<PrimePower> parse_powers(std::string_view text) {
    std::vector<PrimePower> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); };
    bool saw_token = false;
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        if (i == text.size()) break;
        std::size_t end = i;
        while (end < text.size() && !is_sep(text[end])) ++end;
        const std::string_view token = text.substr(i, end - i);
        i = end;
        saw_token = true;
        const auto caret = token.find('^');
        const Integer base = parse_integer(token.substr(0, caret));
        Integer exponent(1);
        if (caret != std::string_view::npos) exponent = parse_integer(token.substr(caret + 1));
        if (base < 1) throw Error(ErrorKind::ParseError, "base must be positive: '" + std::string(token) + "'");
        if (exponent < 0 || !fits_u64(exponent))
            throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(token) + "'");
        if (base == 1) continue;
        out.push_back({base, to_u64(exponent)});
    }
    if (!saw_token) throw Error(ErrorKind::ParseError, "empty factorization");
    return out;
}

Factorization factor(const Integer& n, const FactorBudget& budget, FactorCache* cache) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "factor requires n >= 1");
    if (cache) {
        if (auto hit = cache->lookup(n)) return *hit;
    }
    std::map<Integer, Exponent> found;
    Integer rest = n;
    if (fits_u64(rest)) {
        std::uint64_t r = to_u64(rest);
        for (std::uint32_t p : small_primes(budget.trial_bound)) {
            if (static_cast<std::uint64_t>(p) * p > r) break;
            if (r % p) continue;
            Exponent e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            found[Integer(static_cast<unsigned long>(p))] = e;
        }
        rest = Integer(static_cast<unsigned long>(r));
    } else {
        for (std::uint32_t p : small_primes(budget.trial_bound)) {
            if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                if (fits_u64(rest) && static_cast<std::uint64_t>(p) * p > to_u64(rest)) break;
                continue;
            }
            Exponent e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            found[Integer(static_cast<unsigned long>(p))] = e;
        }
    }
    if (rest > 1) {
        const Integer bound(static_cast<unsigned long>(budget.trial_bound));
        if (rest <= bound * bound) {
            found[rest] += 1;  // no factor at or below the trial bound
        } else {
            split_composite(rest, budget, found);
        }
    }
    std::vector<PrimePower> powers;
    for (auto& [p, e] : found) powers.push_back({p, e});
    auto result = Factorization::from_powers(std::move(powers));
    if (cache) cache->store(n, result);
    return result;
}

Factorization factor(std::uint64_t n) { return factor(Integer(static_cast<unsigned long>(n))); }

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(*path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto [n, f] = parse_line(line);
        entries_.emplace(std::move(n), std::move(f));
    }
}

std::optional<Factorization> FactorCache::lookup(const Integer& n) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(n);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void FactorCache::store(const Integer& n, const Factorization& f) {
    std::lock_guard lock(mutex_);
    if (!entries_.emplace(n, f).second) return;
    if (path_) {
        std::ofstream out(*path_, std::ios::app);
        out << format_line(n, f) << '\n';
    }
}

std::size_t FactorCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::string FactorCache::format_line(const Integer& n, const Factorization& f) {
    std::string line = to_string(n);
    if (!f.empty()) line += " " + f.spaced();
    return line;
}

std::pair<Integer, Factorization> FactorCache::parse_line(std::string_view line) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) throw Error(ErrorKind::ParseError, "empty cache line");
    line.remove_prefix(start);
    const auto space = line.find_first_of(" \t");
    Integer n = parse_integer(line.substr(0, space));
    std::vector<PrimePower> powers;
    if (space != std::string_view::npos && line.find_first_not_of(" \t\r", space) != std::string_view::npos) {
        powers = parse_powers(line.substr(space));
    }
    auto f = Factorization::from_powers(std::move(powers));
    if (f.value() != n) throw Error(ErrorKind::ParseError, "cache line does not multiply out: " + std::string(line));
    return {std::move(n), std::move(f)};
}

}  // namespace opn
