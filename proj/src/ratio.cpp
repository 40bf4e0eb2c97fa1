#include "opn/ratio.hpp"

#include <utility>

#include "opn/error.hpp"

namespace opn {

ExactRatio::ExactRatio(const Integer& value) : value_(value) {}

ExactRatio::ExactRatio(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw Error(ErrorKind::ZeroDenominator, "ratio with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRatio ExactRatio::from_mpq(mpq_class value) {
    ExactRatio r;
    r.value_ = std::move(value);
    r.value_.canonicalize();
    return r;
}

ExactRatio ExactRatio::reciprocal() const {
    if (sgn(value_) == 0) throw Error(ErrorKind::ZeroDenominator, "reciprocal of zero");
    return from_mpq(mpq_class(1) / value_);
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return ExactRatio::from_mpq(mpq_class(a.value_ + b.value_)); }
ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) { return ExactRatio::from_mpq(mpq_class(a.value_ - b.value_)); }
ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return ExactRatio::from_mpq(mpq_class(a.value_ * b.value_)); }

ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (sgn(b.value_) == 0) throw Error(ErrorKind::ZeroDenominator, "division by zero ratio");
    return ExactRatio::from_mpq(mpq_class(a.value_ / b.value_));
}

ExactRatio ExactRatio::operator-() const { return from_mpq(mpq_class(-value_)); }

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExactRatio::str() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Ln2Bracket Ln2Bracket::standard() {
    return {ExactRatio(693147, 1000000), ExactRatio(693148, 1000000)};
}

Ln2Bracket Ln2Bracket::from_series(std::size_t terms) {
    if (terms == 0) throw Error(ErrorKind::InvalidArgument, "series needs at least one term");
    mpq_class sum(0);
    Integer power(1);
    for (std::size_t k = 1; k <= terms; ++k) {
        power *= 2;
        sum += mpq_class(Integer(1), Integer(static_cast<unsigned long>(k)) * power);
    }
    sum.canonicalize();
    const ExactRatio lower(sum.get_num(), sum.get_den());
    const ExactRatio tail(Integer(1), Integer(static_cast<unsigned long>(terms + 1)) * power);
    return {lower, lower + tail};
}

std::string_view position_name(BracketPosition pos) {
    switch (pos) {
    case BracketPosition::Below: return "Below";
    case BracketPosition::Above: return "Above";
    case BracketPosition::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

BracketPosition locate_against_ln2(const ExactRatio& x, const Ln2Bracket& bracket) {
    if (x < bracket.lower) return BracketPosition::Below;
    if (x > bracket.upper) return BracketPosition::Above;
    return BracketPosition::Inconclusive;
}

BracketPosition locate_against_ln2(const ExactRatio& x, std::size_t max_terms) {
    BracketPosition pos = locate_against_ln2(x, Ln2Bracket::standard());
    for (std::size_t terms = 32; pos == BracketPosition::Inconclusive && terms <= max_terms; terms *= 2) {
        pos = locate_against_ln2(x, Ln2Bracket::from_series(terms));
    }
    return pos;
}

}  // namespace opn
