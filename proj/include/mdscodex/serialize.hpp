#pragma once

/// JSON schemas for fields, matrices, codes, pairs and reports. Key order is
/// fixed at insertion, so identical inputs serialize byte-identically.

#include <json.hpp>

#include "mdscodex/decode.hpp"

namespace mdscodex {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& field);
const FieldSpec& field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldSpec& field, const Json& j);

Json matrix_to_json(const MatrixF& m);
MatrixF matrix_from_json(const FieldSpec& field, const Json& j);

/// Code file schema: field, n, k, provenance, omega, generator, check,
/// optional distance. Loading rebuilds the code from its provenance and
/// requires the stored matrices to match entrywise.
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

/// Pair file schema embeds the code plus t, start, step, row index sets and
/// both basis matrices; loading rebuilds and re-verifies the pair.
Json pair_to_json(const ErrorCorrectingPair& pair);
ErrorCorrectingPair pair_from_json(const Json& j);

Json chebotarev_report_to_json(const ChebotarevReport& report);
Json isaacs_report_to_json(const IsaacsReport& report);
Json prime_pairs_to_json(const std::vector<PrimePair>& pairs);
Json decode_result_to_json(const DecodeResult& result);
Json ecp_conditions_to_json(const EcpConditions& conditions);
Json trial_report_to_json(const TrialReport& report);
Json channel_stats_to_json(const ChannelStats& stats);

}  // namespace mdscodex
