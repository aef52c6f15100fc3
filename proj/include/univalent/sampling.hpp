#pragma once

// Seeded generators of inputs that satisfy a coefficient criterion. Each
// coefficient is drawn as (largest value the stated conditions allow) times a
// slack factor in (0, 1], with slack exactly 1 some of the time so that
// boundary-equality inputs are well represented.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "univalent/theorems.hpp"

namespace univalent {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  std::size_t integer(std::size_t lo, std::size_t hi);
  bool coin(double probability);
  /// 1 with probability `tight`, otherwise uniform on (0, 1].
  double slack(double tight = 0.3);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct SamplingOptions {
  std::size_t max_degree = 50;
  /// Fixes n instead of drawing it from [2, max_degree].
  std::optional<std::size_t> degree;
  double tight_probability = 0.3;
  /// A link that no stated condition constrains (the k = n-2 instance of the
  /// Cesaro (ii) family) is drawn as the value that would make that instance
  /// tight, times a log-uniform factor in [1/spread, spread].
  double free_link_spread = 100.0;
};

/// alpha, beta in [0, 2], lambda in [0, 2], mu in [max(0, 1-lambda), 2].
[[nodiscard]] ParameterSet sample_weight_params(Sampler& s);

/// lambda + mu in [1, max_sum), alpha <= 6/(lambda+4), beta <= 6/(mu+4).
[[nodiscard]] ParameterSet sample_cesaro_params(Sampler& s, double max_sum = 2.0);

/// a_1 = 1, a_2 = u/w(2), a_{k+1} = a_k (w(k)/w(k+1)) u: a sequence meeting the
/// weighted monotone chain with a_0 = 2.
[[nodiscard]] std::vector<double> sample_chain_sequence(Sampler& s, const ParameterSet& p,
                                                        std::size_t n, double tight = 0.3);

/// A random input on which `c` is satisfied, or nullopt when the drawn
/// parameters admit no positive sequence (callers redraw).
[[nodiscard]] std::optional<CriterionInput> sample_admissible(Criterion c, Sampler& s,
                                                              const SamplingOptions& opts = {});

}  // namespace univalent
