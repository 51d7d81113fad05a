#pragma once

#include <string>

#include "verify.hpp"

namespace mhd {

std::string report_json(const RunConfig& cfg, const SuiteResult& res);
std::string report_text(const RunConfig& cfg, const SuiteResult& res);

}  // namespace mhd
