#pragma once

#include <string>

#include "minkhelix/validation.hpp"

namespace minkhelix::io {

/// {"verdict": "pass"|"fail", "summary": {...}, "checks": [{name, value, tolerance, passed, skipped, note}]}
std::string report_to_json(const ValidationReport& report);

}  // namespace minkhelix::io
