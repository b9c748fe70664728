#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "indsub/claims.hpp"

namespace indsub {

// One report as a single-line JSON object with keys claim_id, params,
// expected, computed, status, witness, elapsed_ms (plus detail and instance
// on FAIL/TIMEOUT).
std::string report_json(const ClaimReport& r, bool stable_timing = false);
std::string report_text(const ClaimReport& r, bool stable_timing = false);

// Exit codes: 0 all pass, 1 any FAIL, 2 usage or parse error, 3 TIMEOUT
// without FAIL.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indsub
