#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "focalis/classify.hpp"

namespace focalis {

using Json = nlohmann::ordered_json;

Json to_json(const SecondOrderLocus& l);
Json to_json(const RealizationVerdict& v);
Json to_json(const ProbeReport& p);
Json to_json(const AnalysisReport& r);

/// Report for a run that failed before any sample was analyzed.
Json error_report(const std::string& input, Mode mode, std::uint64_t seed, const std::string& kind,
                  const std::string& message);

/// Human-readable summary with a per-sample table.
std::string to_text(const AnalysisReport& r);

/// How the subclass labels are derived from the probes.
Json subclass_rules();

}  // namespace focalis
