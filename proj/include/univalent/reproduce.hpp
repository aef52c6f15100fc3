#pragma once

// Reproduction suites: every acceptance property of the library as a named,
// seeded, self-checking case.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "univalent/sampling.hpp"

namespace univalent {

struct CaseResult {
  int criterion = 0;  // acceptance criterion number, 0 for supplementary cases
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct ReproduceOptions {
  std::uint64_t seed = 42;
  SamplingOptions sampling;
};

/// positivity, duality, equivalence, cesaro, examples.
[[nodiscard]] const std::vector<std::string>& reproduce_suites();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// unknown names.
[[nodiscard]] std::vector<CaseResult> run_suite(std::string_view suite, const ReproduceOptions& opts);

/// Cases belonging to acceptance criterion `id` (1..10).
[[nodiscard]] std::vector<CaseResult> run_criterion(int id, const ReproduceOptions& opts);

void to_json(nlohmann::json& j, const CaseResult& r);

}  // namespace univalent
