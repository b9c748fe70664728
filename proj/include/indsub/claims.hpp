#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

enum class Tier { fast, standard, long_run };
enum class Status { pass, fail, timeout, skipped };

std::string to_string(Tier t);
std::string to_string(Status s);
// Throws BadParams.
Tier parse_tier(const std::string& s);

// Ordered key/value integers, e.g. {{"k", 2}}.
using ClaimParams = std::vector<std::pair<std::string, std::int64_t>>;

struct Expected {
  std::string text;                  // "17", ">= ceil(4n/5)", "<= 46"
  std::optional<std::int64_t> value; // set when the expectation is one integer
};

struct ClaimReport {
  std::string claim_id;
  ClaimParams params;
  Expected expected;
  std::vector<std::int64_t> computed;
  Status status = Status::pass;
  std::optional<VertexSet> witness;
  std::string detail;    // human-readable summary or failure reason
  std::string instance;  // GraphText of the violating instance; set on FAIL
  std::int64_t elapsed_ms = 0;
};

struct ClaimInfo {
  std::string id;
  std::string statement;  // the statement being checked, in words
  Tier tier;
  ClaimParams defaults;
};

// Every suite entry in id order. An id may appear once per tier with
// different defaults (C5, C11 have long-tier variants).
const std::vector<ClaimInfo>& claim_registry();

// Params override the defaults of the id's lowest-tier entry; pass
// {"tier", 2} to select the long variant. Throws UnknownClaim, BadParams.
ClaimReport run_claim(const std::string& id, const ClaimParams& params = {});

// Entries with tier <= t, run on up to `threads` workers; reports come back
// in registry order.
std::vector<ClaimReport> run_suite(Tier t, int threads = 1);

// 0 all pass/skipped, 1 any FAIL, 3 TIMEOUT without FAIL.
int exit_code(const std::vector<ClaimReport>& reports);

}  // namespace indsub
