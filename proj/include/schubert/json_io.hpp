#ifndef SCHUBERT_JSON_IO_HPP
#define SCHUBERT_JSON_IO_HPP

#include <json.hpp>

#include "schubert/betti.hpp"
#include "schubert/groebner.hpp"
#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/verify.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

/// Current report schema version, emitted as the top-level "schema" field.
inline constexpr const char* kSchemaVersion = "1";

/// [{"coeff":"p/q","exps":[[i,j,e],...]}, ...], terms in the polynomial's
/// stored (descending) order. Round-trips bit-exactly through polyFromJson.
Json polyToJson(const Polynomial& poly);

Polynomial polyFromJson(const Json& json, const TermOrder& order);

/// [{"i":i,"j":j,"beta":b}, ...] sorted by (i, j).
Json bettiToJson(const BettiTable& table);

/// Full per-permutation ideal report: diagram, essential set, Fulton and
/// elusive generators, classification flags.
Json idealReport(const Permutation& w, const TermOrder& order);

/// Basis listing with per-member degree/term counts; reduced selects G'_w
/// over the monic elusive basis G_w.
Json groebnerReport(const Permutation& w, const TermOrder& order,
                    bool reduced);

Json classifyReport(const Permutation& w);

Json regularityReportForPermutation(const Permutation& w, int edgeCap);

Json regularityReportForPartition(const Partition& lambda, int edgeCap);

Json enumerateReport(int n, const std::vector<Permutation>& patterns,
                     bool listWitnesses);

Json verificationReportToJson(const VerificationReport& report);

}  // namespace schubert

#endif
