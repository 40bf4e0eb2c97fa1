#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opn/integer.hpp"

namespace opn {

/// Miller-Rabin. Deterministic below 2^64 (first twelve prime bases); above
/// that the first twenty-four prime bases are used, so the answer is
/// reproducible but probabilistic.
bool is_prime(const Integer& n);

struct PrimePower {
    Integer prime;
    Exponent exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer as a sorted list of prime powers. The empty list is 1.
///
/// Entries normally hold genuine primes. A caller analysing Descartes-style
/// spoofs may declare composite "pretend primes"; those are carried as opaque
/// units and must be coprime to every other entry.
class Factorization {
public:
    Factorization() = default;

    /// Validates, sorts and merges equal bases. Zero exponents are dropped.
    /// Throws NotPrime for a composite base not listed in `pretend`, and
    /// NotCoprime when a pretend unit shares a factor with another base.
    static Factorization from_powers(std::vector<PrimePower> powers, const std::set<Integer>& pretend = {});

    const std::vector<PrimePower>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Integer value() const;
    Exponent exponent_of(const Integer& prime) const;
    bool contains(const Integer& prime) const { return exponent_of(prime) > 0; }

    /// Product with exponents scaled, e.g. squared() gives n^2 from n.
    Factorization scaled(Exponent factor) const;
    Factorization without(const Integer& prime) const;
    Factorization times(const Factorization& other) const;

    /// "p^a*q^b", or "1" for the empty factorization.
    std::string str() const;
    /// "p^a q^b" as used by the factor-cache file.
    std::string spaced() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    explicit Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {}
    std::vector<PrimePower> entries_;
};

/// Parses "p^e*p^e*..." (whitespace also separates; a bare base has exponent
/// 1; "1" is the empty product) into raw powers without primality checks.
std::vector<PrimePower> parse_powers(std::string_view text);

struct FactorBudget {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 1ULL << 22;
    unsigned rho_attempts = 16;
};

class FactorCache;

/// Trial division up to the budget bound, then Miller-Rabin and Brent's
/// variant of Pollard rho on the cofactor. Deterministic for fixed input.
/// Throws FactoringLimit if a composite cofactor resists the budget.
Factorization factor(const Integer& n, const FactorBudget& budget = {}, FactorCache* cache = nullptr);
Factorization factor(std::uint64_t n);

/// Line-oriented cache "n p1^a1 p2^a2 ...". Loaded once; misses appended.
class FactorCache {
public:
    FactorCache() = default;
    explicit FactorCache(std::filesystem::path path);

    std::optional<Factorization> lookup(const Integer& n) const;
    void store(const Integer& n, const Factorization& f);
    std::size_t size() const;

    static std::string format_line(const Integer& n, const Factorization& f);
    static std::pair<Integer, Factorization> parse_line(std::string_view line);

private:
    std::optional<std::filesystem::path> path_;
    std::map<Integer, Factorization> entries_;
    mutable std::mutex mutex_;
};

}  // namespace opn
