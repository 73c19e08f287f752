#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qpfaff/identity.hpp"

namespace qpfaff {

struct SamplerConfig {
  std::uint64_t seed = 42;
  long bound = 8;          // numerators in [-bound, bound]\{0}, denominators in [1, bound]
  int retry_budget = 5000; // consecutive inadmissible candidates tolerated
};

// Deterministic 64-bit generator (splitmix64). Bounded draws use rejection,
// so streams are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, k), k >= 1.
  std::uint64_t below(std::uint64_t k);

 private:
  std::uint64_t state_;
};

// Rejection sampler over free-symbol assignments. Candidates are drawn from
// a stream determined by (seed, stream_tag); the admissible ones form the
// indexed sequence. The admissibility predicate is supplied by the caller,
// which keeps the sampler identity-agnostic; the base symbol additionally
// excludes values with |numerator| == |denominator| so no power of the base
// can equal 1.
class PointSampler {
 public:
  PointSampler(std::vector<std::string> free_symbols, std::string base_symbol,
               SamplerConfig cfg, const std::string& stream_tag,
               std::function<bool(const Assignment&)> admissible);

  // index-th admissible assignment; deterministic in (seed, cfg, tag, index).
  // Throws SamplingExhausted when retry_budget consecutive candidates fail.
  const Assignment& at(int index);

 private:
  Assignment draw_candidate();

  std::vector<std::string> free_symbols_;
  std::string base_symbol_;
  SamplerConfig cfg_;
  std::function<bool(const Assignment&)> admissible_;
  SplitMix64 rng_;
  std::vector<Assignment> accepted_;
  int rejected_streak_ = 0;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace qpfaff
