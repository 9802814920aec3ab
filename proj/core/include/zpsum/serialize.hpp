#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "zpsum/classify.hpp"
#include "zpsum/counting.hpp"
#include "zpsum/egz.hpp"
#include "zpsum/extremal.hpp"
#include "zpsum/lemmas.hpp"
#include "zpsum/residue.hpp"
#include "zpsum/sumset.hpp"
#include "zpsum/witness.hpp"

namespace zpsum {

// Structured output uses ordered JSON so identical inputs serialize to
// byte-identical documents.
using Json = nlohmann::ordered_json;

/// Canonical text form "p=11; A=1^2,7" (elements ascending, ^1 omitted,
/// empty A allowed). parse_sequence_text accepts the same grammar with
/// tolerant whitespace and negative elements; the two functions are exact
/// inverses on canonical strings.
std::string sequence_to_text(const ResidueSequence& a);
ResidueSequence parse_sequence_text(std::string_view text);

/// Structured form {"p": 11, "elements": [[1, 2], [7, 1]]}.
Json sequence_to_json(const ResidueSequence& a);
ResidueSequence sequence_from_json(const Json& j);

/// Masks serialize as sorted residue lists.
Json mask_to_json(const SumsetMask& m);
SumsetMask mask_from_json(const Json& j);

Json to_json(const APWitness& w);
Json to_json(const IntRange& r);
Json to_json(const ClassificationReport& r);
Json to_json(const OlsonThresholdReport& r);
Json to_json(const Thm1Witness& w, const ResidueSequence& a);
Json to_json(const Thm2Witness& w, const ResidueSequence& a);
Json to_json(const Thm3Witness& w, const ResidueSequence& a);
Json to_json(const ZeroFree2Report& r);
Json to_json(const ExtremalSpec& s);
Json to_json(const ZeroFree3Extremal& r);
Json to_json(const ZeroFree3ScanReport& r);
Json to_json(const PartitionTable& t);
Json to_json(const CensusReport& r);
Json to_json(const EGZReport& r);
Json to_json(const EGZExtremalReport& r);
Json to_json(const Thm62Report& r);
Json to_json(const CRTRepresentation& r);
Json to_json(const OlsonProbeReport& r);
Json to_json(const APProbeReport& r);

/// Round-trip helpers for witnesses (the inequality must survive
/// re-serialization).
Thm1Witness thm1_from_json(const Json& j, const PrimeModulus& p);
Thm2Witness thm2_from_json(const Json& j, const PrimeModulus& p);
Thm3Witness thm3_from_json(const Json& j, const PrimeModulus& p);

/// Human-readable one-line instantiation of a witness inequality.
std::string proofline(const Thm1Witness& w, const ResidueSequence& a);
std::string proofline(const Thm2Witness& w, const ResidueSequence& a);
std::string proofline(const Thm3Witness& w, const ResidueSequence& a);

}  // namespace zpsum
