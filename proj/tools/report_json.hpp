#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "bicyclic/verify.hpp"

namespace bicyclic::cli {

/// Machine-readable report document; see docs/report.schema.json.
nlohmann::json report_to_json(const VerifyReport& r);
nlohmann::json reports_to_json(std::span<const VerifyReport> reports);

std::string report_to_text(const VerifyReport& r);
std::string reports_to_text(std::span<const VerifyReport> reports);

}  // namespace bicyclic::cli
