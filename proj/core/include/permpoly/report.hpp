#pragma once

#include <string>

#include "permpoly/verify.hpp"

namespace permpoly {

/// One-line JSON object; "failures" appears only when with_failures is set.
std::string to_json(const CheckOutcome& outcome, bool with_failures = false);
std::string to_json(const PermutationReport& report);

std::string outcome_csv_header();
std::string to_csv(const CheckOutcome& outcome);
std::string to_text(const CheckOutcome& outcome);

/// m,k,r,m',alpha,gamma,predicted,observed,t0_image,t1_image,agree
std::string sweep_csv_header();
std::string to_csv(const PermutationReport& report);
std::string to_text(const PermutationReport& report);

}  // namespace permpoly
