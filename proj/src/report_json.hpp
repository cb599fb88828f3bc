#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "identities.hpp"
#include "scan.hpp"

namespace etaq {

// Canonical JSON payloads: key order is fixed and every field is derived
// from exact integer tallies, so identical inputs serialize to identical
// bytes regardless of the worker count.
using Json = nlohmann::ordered_json;

Json to_json(const VerifyReport& r);
Json chain_json(const std::string& name, std::uint64_t trunc,
                const std::vector<VerifyReport>& links);
Json to_json(const TheoremScan& r);
Json to_json(const DensityReport& r);
Json to_json(const APReport& r);
Json to_json(const EquiReport& r);
Json to_json(const LinkReport& r);

const char* ap_status_name(APStatus s);

} // namespace etaq
