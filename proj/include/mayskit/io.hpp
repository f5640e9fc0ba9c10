#pragma once

// File formats and structured report records.
//
// Rule file:     {"n": 2, "table": [0, 1, 2, ...]}   (0=Tie, 1=ForWins, 2=AgainstWins,
//                                                     index = profile code)
//                {"n": 5, "majority": true}
// Certificates mirror TraceStep field by field with profiles as '+', '-', '0'
// literals. Keys are emitted in a fixed order so output is diffable.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mayskit/mays.hpp"
#include "mayskit/properties.hpp"
#include "mayskit/refute.hpp"
#include "mayskit/rules.hpp"

namespace mayskit::io {

using Json = nlohmann::ordered_json;

Json rule_to_json(const Rule& r);
/// Throws FormatError on malformed input.
Rule rule_from_json(const Json& j, const Limits& limits = {});

Rule load_rule(const std::filesystem::path& path, const Limits& limits = {});
void save_json(const std::filesystem::path& path, const Json& j);

Json witness_to_json(const AxiomWitness& w);
Json report_to_json(const AxiomReport& r);
Json report_to_json(const BiconditionalReport& r, bool include_runtime);
Json verdict_to_json(const Verdict& v);

Json certificate_to_json(const Certificate& c);
/// Parses a certificate without validating the chain; throws FormatError.
Certificate certificate_from_json(const Json& j);
Certificate load_certificate(const std::filesystem::path& path);

}  // namespace mayskit::io
