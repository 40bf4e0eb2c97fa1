#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "opn/integer.hpp"

namespace opn {

/// Exact rational number kept in lowest terms with a positive denominator.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(const Integer& value);  // NOLINT: integers embed implicitly
    ExactRatio(long value) : ExactRatio(Integer(value)) {}  // NOLINT
    ExactRatio(const Integer& numerator, const Integer& denominator);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    ExactRatio reciprocal() const;

    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);
    ExactRatio operator-() const;

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

    /// "a/b", or "a" for integers.
    std::string str() const;

private:
    static ExactRatio from_mpq(mpq_class value);
    mpq_class value_{0};
};

/// Certified rational bracket lower < ln 2 < upper.
struct Ln2Bracket {
    ExactRatio lower;
    ExactRatio upper;

    /// 693147/1000000 < ln 2 < 693148/1000000.
    static Ln2Bracket standard();

    /// Bracket from the series ln 2 = sum_{k>=1} 1/(k 2^k) truncated after
    /// `terms` terms; the tail is below 1/((terms+1) 2^terms).
    static Ln2Bracket from_series(std::size_t terms);

    ExactRatio width() const { return upper - lower; }
};

enum class BracketPosition { Below, Above, Inconclusive };

std::string_view position_name(BracketPosition pos);

/// Where x sits relative to ln 2 given the bracket.
BracketPosition locate_against_ln2(const ExactRatio& x, const Ln2Bracket& bracket);

/// Starts from the standard bracket and refines with the series (doubling the
/// term count from 32) until conclusive or `max_terms` is exceeded.
BracketPosition locate_against_ln2(const ExactRatio& x, std::size_t max_terms);

}  // namespace opn
