#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "irrt/transform.hpp"
#include "irrt/verify.hpp"

namespace irrt {

using Json = nlohmann::ordered_json;

/// Integer arrays, non-increasing.
Json to_json(const DegreeSequence& d);
Json to_json(const VerificationReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const ConjectureResult& r);
/// Trace of reduce_to_minimum applied to `input`.
Json to_json(const Graph& input, const Reduction& r);

/// Pretty-printed JSON array followed by a newline.
std::string format_json(const std::vector<VerificationReport>& reports);
std::string format_text(const std::vector<VerificationReport>& reports);

std::string format_json(const std::vector<BoundsReport>& reports);
std::string format_text(const std::vector<BoundsReport>& reports);

std::string format_json(const ConjectureResult& r);
std::string format_text(const ConjectureResult& r);

std::string format_text(const Graph& input, const Reduction& r);

}  // namespace irrt
