#pragma once

#include <string>

#include <json.hpp>

namespace nw {

using json = nlohmann::json;

struct RunOutput {
    std::string report; // one JSON object, or JSON lines for census
    int verdict = 0;    // 0 pass, 1 mismatch or violation
};

// Fills defaults and validates; the result is what reports embed.
json normalize_config(const json& cfg);
RunOutput run_config(const json& cfg);

} // namespace nw
