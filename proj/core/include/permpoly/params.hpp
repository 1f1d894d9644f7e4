#pragma once

#include <cstdint>
#include <optional>

namespace permpoly {

/// Validated parameters (m, k) plus the derived r, m', delta, theta.
///
/// r is the inverse of k modulo m in {1..m-1}, kr = 1 + m*m', sigma = 2^k.
/// Flags are 0 or 1:
///   delta = m' + alpha*k + beta*r + alpha*beta*m   (mod 2)
///   theta = beta + lambda*k                        (mod 2)
struct ParamSet {
  unsigned m = 0;
  unsigned k = 0;
  unsigned r = 0;
  unsigned m_prime = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned gamma = 0;
  unsigned delta = 0;
  unsigned lambda = 0;
  unsigned theta = 0;
  std::uint64_t sigma = 0;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// Throws OutOfRange (m < 2, k outside 1..m-1, flag not in {0,1}) or
/// NotCoprime (gcd(k, m) != 1). lambda defaults to delta.
ParamSet derive_params(unsigned m, unsigned k, unsigned alpha = 0, unsigned beta = 0, unsigned gamma = 0,
                       std::optional<unsigned> lambda = std::nullopt);

}  // namespace permpoly
