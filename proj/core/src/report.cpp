#include "permpoly/report.hpp"

#include <sstream>

#include "json.hpp"

namespace permpoly {

namespace {

using Json = nlohmann::ordered_json;

std::string image_name(const TraceClassImage& c) {
  if (!c.image) return "none";
  return "T" + std::to_string(*c.image) + (c.injective ? "" : "*");
}

std::string params_text(const CheckParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::string to_json(const CheckOutcome& outcome, bool with_failures) {
  Json j;
  j["check"] = outcome.check_name;
  Json params = Json::object();
  for (const auto& [name, value] : outcome.params) params[name] = value;
  j["params"] = params;
  j["passed"] = outcome.passed;
  j["tested"] = outcome.tested;
  if (with_failures) j["failures"] = outcome.failures;
  if (outcome.counterexample) {
    j["counterexample"] = {{"inputs", outcome.counterexample->inputs},
                           {"lhs", outcome.counterexample->lhs},
                           {"rhs", outcome.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["ms"] = outcome.ms;
  return j.dump();
}

std::string to_json(const PermutationReport& r) {
  Json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["r"] = r.r;
  j["m'"] = r.m_prime;
  j["alpha"] = r.alpha;
  j["gamma"] = r.gamma;
  j["predicted"] = r.predicted_by_theorem;
  j["observed"] = r.is_permutation;
  j["t0_image"] = image_name(r.t0);
  j["t1_image"] = image_name(r.t1);
  j["agree"] = r.agrees();
  return j.dump();
}

std::string outcome_csv_header() { return "check,params,passed,tested,failures,inputs,lhs,rhs,ms"; }

std::string to_csv(const CheckOutcome& o) {
  std::ostringstream out;
  out << csv_cell(o.check_name) << ',' << csv_cell(params_text(o.params)) << ',' << (o.passed ? "true" : "false") << ','
      << o.tested << ',' << o.failures << ',';
  if (o.counterexample) {
    out << csv_cell(join(o.counterexample->inputs, ' ')) << ',' << csv_cell(o.counterexample->lhs) << ','
        << csv_cell(o.counterexample->rhs);
  } else {
    out << ",,";
  }
  out << ',' << o.ms;
  return out.str();
}

std::string to_text(const CheckOutcome& o) {
  std::ostringstream out;
  out << (o.passed ? "PASS " : "FAIL ") << o.check_name << " [" << params_text(o.params) << "] tested=" << o.tested;
  if (o.counterexample) {
    out << " counterexample: " << join(o.counterexample->inputs, ' ') << " lhs=" << o.counterexample->lhs
        << " rhs=" << o.counterexample->rhs;
  }
  return out.str();
}

std::string sweep_csv_header() { return "m,k,r,m',alpha,gamma,predicted,observed,t0_image,t1_image,agree"; }

std::string to_csv(const PermutationReport& r) {
  std::ostringstream out;
  out << r.m << ',' << r.k << ',' << r.r << ',' << r.m_prime << ',' << r.alpha << ',' << r.gamma << ','
      << (r.predicted_by_theorem ? "true" : "false") << ',' << (r.is_permutation ? "true" : "false") << ','
      << image_name(r.t0) << ',' << image_name(r.t1) << ',' << (r.agrees() ? "true" : "false");
  return out.str();
}

std::string to_text(const PermutationReport& r) {
  std::ostringstream out;
  out << "m=" << r.m << " k=" << r.k << " alpha=" << r.alpha << " gamma=" << r.gamma
      << " predicted=" << (r.predicted_by_theorem ? "PP" : "not-PP") << " observed=" << (r.is_permutation ? "PP" : "not-PP")
      << " T0->" << image_name(r.t0) << " T1->" << image_name(r.t1) << (r.agrees() ? " agree" : " DISAGREE");
  return out.str();
}

}  // namespace permpoly
