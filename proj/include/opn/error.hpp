#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opn {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    NotPrime,
    NotCoprime,
    ZeroDenominator,
    FactoringLimit,
    EvenInput,
    NoSpecialPrime,
    MultipleOddExponents,
    SpecialPrimeResidue,
    SpecialExponentResidue,
    InvalidSpoof,
    PremiseFailure,
    NotApplicable,
};

constexpr std::string_view error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::FactoringLimit: return "FactoringLimit";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::NoSpecialPrime: return "NoSpecialPrime";
    case ErrorKind::MultipleOddExponents: return "MultipleOddExponents";
    case ErrorKind::SpecialPrimeResidue: return "SpecialPrimeResidue";
    case ErrorKind::SpecialExponentResidue: return "SpecialExponentResidue";
    case ErrorKind::InvalidSpoof: return "InvalidSpoof";
    case ErrorKind::PremiseFailure: return "PremiseFailure";
    case ErrorKind::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported as an Error carrying a
/// stable kind; the CLI prints error_name(kind()) verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace opn
