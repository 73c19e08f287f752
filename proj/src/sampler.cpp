#include "qpfaff/sampler.hpp"

#include "qpfaff/errors.hpp"

namespace qpfaff {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t k) {
  // rejection keeps the draw unbiased and platform-independent
  const std::uint64_t limit = k * (UINT64_MAX / k);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % k;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

PointSampler::PointSampler(std::vector<std::string> free_symbols,
                           std::string base_symbol, SamplerConfig cfg,
                           const std::string& stream_tag,
                           std::function<bool(const Assignment&)> admissible)
    : free_symbols_(std::move(free_symbols)),
      base_symbol_(std::move(base_symbol)),
      cfg_(cfg),
      admissible_(std::move(admissible)),
      rng_(cfg.seed ^ fnv1a64(stream_tag)) {}

Assignment PointSampler::draw_candidate() {
  const std::uint64_t b = static_cast<std::uint64_t>(cfg_.bound);
  Assignment a;
  for (const auto& sym : free_symbols_) {
    // numerator in [-bound, bound] \ {0}, denominator in [1, bound]
    std::uint64_t raw = rng_.below(2 * b) + 1;
    long num = raw <= b ? static_cast<long>(raw) : -static_cast<long>(raw - b);
    long den = static_cast<long>(rng_.below(b)) + 1;
    a[sym] = make_rational(Integer(num), Integer(den));
  }
  return a;
}

const Assignment& PointSampler::at(int index) {
  while (static_cast<int>(accepted_.size()) <= index) {
    if (rejected_streak_ >= cfg_.retry_budget)
      throw SamplingExhausted("no admissible point within " +
                              std::to_string(cfg_.retry_budget) + " candidates");
    Assignment cand = draw_candidate();
    auto base_it = cand.find(base_symbol_);
    bool ok = true;
    if (base_it != cand.end()) {
      const Rational& tau = base_it->second;
      // powers of the base must never hit 1, so |num| != |den| in lowest terms
      ok = abs(numerator(tau)) != abs(denominator(tau));
    }
    ok = ok && admissible_(cand);
    if (ok) {
      rejected_streak_ = 0;
      accepted_.push_back(std::move(cand));
    } else {
      ++rejected_streak_;
    }
  }
  return accepted_[index];
}

}  // namespace qpfaff
