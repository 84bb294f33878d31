#pragma once

#include <json.hpp>

#include "ringlab/classify.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// Schema:
/// {
///   "ring": "<name>",
///   "size": <int> | null,
///   "probe_bound": <int> | null,
///   "classes": {
///     "<class>": { "verdict": "yes"|"no"|"unknown",
///                  "witness"?: str, "counterexample"?: str,
///                  "reason"?: str, "bound"?: int },
///     ...all thirteen classes, in hierarchy order...
///   }
/// }
/// Optional keys appear only when non-empty, so serialization round-trips
/// byte-for-byte.
Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& j);

std::string classification_text(const Classification& c);

}  // namespace ringlab
