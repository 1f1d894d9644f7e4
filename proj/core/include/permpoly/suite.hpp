#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/verify.hpp"

namespace permpoly {

struct SuiteConfig {
  unsigned m_max = 6;
  /// Cap on m for sweeps over GF(q^2).
  unsigned ext_m_max = 10;
  FieldTable table;
  VerifyOptions options;
};

/// Checker names accepted by run_suite, plus "all".
std::vector<std::string> suite_names();
bool is_suite_name(std::string_view name);

/// Runs one named check (or "all") over every valid (m, k) up to the caps and
/// hands each outcome to sink as it completes. Throws ParseError for an
/// unknown name.
void run_suite(std::string_view name, const SuiteConfig& config, const std::function<void(const CheckOutcome&)>& sink);

/// Valid k for m: 1 <= k < m with gcd(k, m) = 1.
std::vector<unsigned> coprime_ks(unsigned m);

}  // namespace permpoly
