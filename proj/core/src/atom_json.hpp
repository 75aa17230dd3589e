#pragma once

#include <nlohmann/json.hpp>

#include <zerosum/sequence.hpp>

namespace zerosum::detail {

// {"pos":[[value,mult],..],"neg":[[value,mult],..],"zero":0|1} with values
// ascending on both sides; negative values are stored as-is.
nlohmann::ordered_json atom_to_json(const ZSeq& s);

// Throws std::runtime_error on any schema violation.
ZSeq atom_from_json(const nlohmann::json& j);

}  // namespace zerosum::detail
