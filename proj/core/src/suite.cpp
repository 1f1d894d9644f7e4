#include "permpoly/suite.hpp"

#include <algorithm>
#include <numeric>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

using Sink = std::function<void(const CheckOutcome&)>;
using PerK = CheckOutcome (*)(const BinaryField&, unsigned, const VerifyOptions&);

void each_mk(unsigned m_lo, unsigned m_hi, const SuiteConfig& c, const Sink& sink, PerK check) {
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    const BinaryField field = c.table.make_field(m);
    for (unsigned k : coprime_ks(m)) sink(check(field, k, c.options));
  }
}

struct Entry {
  const char* name;
  void (*run)(const SuiteConfig&, const Sink&);
};

unsigned ext_cap(const SuiteConfig& c) { return std::min(c.m_max, c.ext_m_max); }

const Entry kEntries[] = {
    {"main_theorem",
     [](const SuiteConfig& c, const Sink& sink) {
       for (unsigned m = 2; m <= c.m_max; ++m) {
         const BinaryField field = c.table.make_field(m);
         for (unsigned k : coprime_ks(m)) {
           sink(summarize_main_theorem(field, k, check_main_theorem(field, k, c.options)));
         }
       }
     }},
    {"nobauer",
     [](const SuiteConfig& c, const Sink& sink) {
       const unsigned m_max = std::min(c.m_max, 5u);
       if (m_max >= 2) sink(check_nobauer(m_max, c.table, c.options));
     }},
    {"fgprop", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, c.m_max, c, sink, check_fgprop); }},
    {"hprop", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, c.m_max, c, sink, check_hprop); }},
    {"perm_lemma", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, ext_cap(c), c, sink, check_perm_lemma); }},
    {"zsumexp", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, ext_cap(c), c, sink, check_zsumexp); }},
    {"h_dickson", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, c.m_max, c, sink, check_h_dickson); }},
    {"hitt", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, ext_cap(c), c, sink, check_hitt); }},
    {"remark3",
     [](const SuiteConfig& c, const Sink& sink) {
       for (unsigned m = 2; m <= c.m_max; ++m) sink(check_remark3(c.table.make_field(m), c.options));
     }},
    {"remark4",
     [](const SuiteConfig& c, const Sink& sink) {
       for (unsigned m = 3; m <= c.m_max; ++m) {
         for (unsigned k : coprime_ks(m)) {
           if ((2 * k) % m == 1) sink(check_remark4(c.table.make_field(m), k, c.options));
         }
       }
     }},
    {"dickson_linearized",
     [](const SuiteConfig& c, const Sink& sink) {
       sink(check_dickson_linearized(16, std::min(c.m_max, 10u), c.table, c.options));
     }},
    {"polynomiality", [](const SuiteConfig& c, const Sink& sink) { each_mk(2, c.m_max, c, sink, check_polynomiality); }},
    {"dickson_methods",
     [](const SuiteConfig& c, const Sink& sink) {
       for (unsigned m = 1; m <= std::min(c.m_max, 5u); ++m) sink(check_dickson_methods(c.table.make_field(m), c.options));
     }},
};

// Short names accepted alongside the checker names.
std::string_view canonical(std::string_view name) {
  if (name == "main") return "main_theorem";
  if (name == "perm") return "perm_lemma";
  return name;
}

}  // namespace

std::vector<unsigned> coprime_ks(unsigned m) {
  std::vector<unsigned> ks;
  for (unsigned k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) ks.push_back(k);
  }
  return ks;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all"};
  for (const auto& e : kEntries) names.emplace_back(e.name);
  return names;
}

bool is_suite_name(std::string_view name) {
  name = canonical(name);
  if (name == "all") return true;
  return std::any_of(std::begin(kEntries), std::end(kEntries), [&](const Entry& e) { return name == e.name; });
}

void run_suite(std::string_view name, const SuiteConfig& config, const Sink& sink) {
  name = canonical(name);
  bool found = false;
  for (const auto& e : kEntries) {
    if (name == "all" || name == e.name) {
      e.run(config, sink);
      found = true;
    }
  }
  if (!found) throw ParseError("unknown check: " + std::string(name));
}

}  // namespace permpoly
