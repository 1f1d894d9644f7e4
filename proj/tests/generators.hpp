#pragma once

// Seeded generators for property tests. Each test draws from its own stream so
// failures reproduce from the printed seed alone.

#include <cstdint>
#include <random>
#include <vector>

#include "permpoly/extension.hpp"
#include "permpoly/field.hpp"

namespace permpoly::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2024'0001ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(kSeed ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  unsigned between(unsigned lo, unsigned hi) { return static_cast<unsigned>(lo + below(hi - lo + 1)); }
  bool coin() { return below(2) == 1; }

  Gf2mElement element(const BinaryField& f) { return Gf2mElement{static_cast<std::uint32_t>(below(f.order()))}; }
  Gf2mElement nonzero(const BinaryField& f) {
    return Gf2mElement{static_cast<std::uint32_t>(1 + below(f.order() - 1))};
  }
  ExtElement ext(const ExtensionField& e) { return e.from_index(below(e.order())); }
  ExtElement ext_nonzero(const ExtensionField& e) { return e.from_index(1 + below(e.order() - 1)); }

 private:
  std::mt19937_64 rng_;
};

/// Every element when the field is small, otherwise `samples` random ones.
inline std::vector<Gf2mElement> sample_or_all(const BinaryField& f, Gen& g, std::size_t samples = 4096) {
  std::vector<Gf2mElement> out;
  if (f.order() <= samples) return f.elements();
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(g.element(f));
  return out;
}

}  // namespace permpoly::testing
