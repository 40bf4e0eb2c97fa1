#pragma once

#include <string>

#include <json.hpp>

#include "opn/arith.hpp"
#include "opn/dris.hpp"
#include "opn/eulerian.hpp"
#include "opn/spoof.hpp"

namespace opn::records {

// Line-delimited structured records. Field order is fixed; integers and
// ratios are decimal strings so values of any size survive round trips.
using Record = nlohmann::ordered_json;

Record factorization(const Integer& n, const Factorization& f);
Record sigma(const Integer& n, const Factorization& f, const Integer& value);
Record perfect(const Integer& n, bool is_perfect);
Record abundancy(const Integer& n, const ExactRatio& value);
Record valuation(const Integer& p, const Integer& m, Exponent e);
Record two_thirds(const Integer& p, Exponent b, const TwoThirdsCheck& check);
Record reciprocal_sum(const Factorization& f, const ReciprocalSum& sum);
Record eulerian(const EulerianForm& e, const AdmissibilityReport& admissibility);
Record spoof(const SpoofCandidate& c, const SpoofVerdict& v);
Record dris(const SpecialDecomposition& sd, const DrisReport& r);
Record trace(const Section2Shape& shape, const K1Trace& t);
Record gcd_diagnostic(const SpecialDecomposition& sd, const GcdDiagnostic& d);
Record squarefree_cell(const SquarefreeCell& cell);
Record residue_cell(const ResidueCell& cell);
Record lemma_u(const LemmaUTriple& t);

/// Single-line compact dump.
std::string line(const Record& r);

}  // namespace opn::records
