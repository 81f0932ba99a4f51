#pragma once

#include <nlohmann/json.hpp>

#include "apll/apll_core.hpp"
#include "apll/group_ring.hpp"
#include "apll/lee_geometry.hpp"
#include "apll/search.hpp"
#include "apll/sieve.hpp"

// JSON forms of the public types. Keys are emitted in a fixed order so that
// serialized output is byte-stable.
namespace apll::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const CodeCandidate& c);
Json to_json(const SplitCandidate& s);
Json to_json(const RingElement& a);
Json to_json(const LeeLattice& l);
Json to_json(const CodeMetrics& m);
Json to_json(const GroupSpec& g, const Verdict& v);
Json to_json(const GroupSpec& h, const SplitVerdict& v);
Json to_json(const BatteryReport& b);
Json to_json(const GroupSpec& h, const AnalysisReport& r);
Json to_json(const SieveVerdict& v);
/// {"statuses": {...}, "reasons": {...}}
Json histogram_json(const SieveTable& t);
/// {n, group, raw_count, orbit_count, examined, complete, ...}
Json summary_json(int n, const SearchResult& r);

/// Throw std::invalid_argument (via malformed_candidate for structural
/// problems) on bad input.
CodeCandidate code_candidate_from_json(const Json& j);
SplitCandidate split_candidate_from_json(const Json& j);
RingElement ring_element_from_json(const Json& j);

}  // namespace apll::json_io
