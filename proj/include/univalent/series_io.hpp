#pragma once

// Coefficient sequences on disk: JSON arrays `[a1, a2, ...]` or CSV with one
// coefficient per line (optionally `k,a_k` rows under a `k,a_k` header).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "univalent/series.hpp"

namespace univalent {

/// Shortest decimal text that parses back to exactly `x`.
[[nodiscard]] std::string format_double(double x);

[[nodiscard]] CoefficientSequence parse_coefficients_json(std::string_view text);
[[nodiscard]] CoefficientSequence parse_coefficients_csv(std::string_view text);

/// Picks the parser by content: a leading '[' means JSON, anything else CSV.
[[nodiscard]] CoefficientSequence parse_coefficients(std::string_view text);

/// Comma- or whitespace-separated inline list, e.g. "1, 0.5, 0.25", optionally in brackets.
[[nodiscard]] CoefficientSequence parse_inline_coefficients(std::string_view text);

[[nodiscard]] CoefficientSequence read_coefficients(const std::filesystem::path& path);

[[nodiscard]] std::string coefficients_to_json(const CoefficientSequence& f);
[[nodiscard]] std::string coefficients_to_csv(const CoefficientSequence& f);

}  // namespace univalent
