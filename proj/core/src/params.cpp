#include "permpoly/params.hpp"

#include <numeric>
#include <string>

#include "permpoly/errors.hpp"
#include "permpoly/field.hpp"

namespace permpoly {

namespace {

unsigned check_flag(const char* name, unsigned v) {
  if (v > 1) throw OutOfRange(std::string(name) + " must be 0 or 1");
  return v;
}

}  // namespace

ParamSet derive_params(unsigned m, unsigned k, unsigned alpha, unsigned beta, unsigned gamma,
                       std::optional<unsigned> lambda) {
  if (m < 2 || m > BinaryField::kMaxDegree) {
    throw OutOfRange("m = " + std::to_string(m) + " outside 2.." + std::to_string(BinaryField::kMaxDegree));
  }
  if (k < 1 || k >= m) {
    throw OutOfRange("k = " + std::to_string(k) + " outside 1.." + std::to_string(m - 1));
  }
  if (std::gcd(k, m) != 1) throw NotCoprime("gcd(k,m) != 1");

  ParamSet p;
  p.m = m;
  p.k = k;
  p.alpha = check_flag("alpha", alpha);
  p.beta = check_flag("beta", beta);
  p.gamma = check_flag("gamma", gamma);
  for (unsigned r = 1; r < m; ++r) {
    if ((k * r) % m == 1) {
      p.r = r;
      break;
    }
  }
  p.m_prime = (k * p.r - 1) / m;
  p.delta = (p.m_prime + alpha * k + beta * p.r + alpha * beta * m) % 2;
  p.lambda = check_flag("lambda", lambda.value_or(p.delta));
  p.theta = (beta + p.lambda * k) % 2;
  p.sigma = std::uint64_t{1} << k;
  return p;
}

}  // namespace permpoly
