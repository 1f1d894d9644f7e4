// Acceptance gate: one PASS/FAIL line per criterion, exact agreement required
// everywhere. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "permpoly/report.hpp"
#include "permpoly/suite.hpp"
#include "permpoly/verify.hpp"

using namespace permpoly;

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t cases = 0;
  std::string first_failure;

  void add(const CheckOutcome& o) {
    ++checks;
    cases += o.tested;
    if (!o.passed && first_failure.empty()) first_failure = to_text(o);
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Tally&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.first_failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.first_failure.empty();
  failures += ok ? 0 : 1;
  std::printf("%s criterion %d: %s (%llu checks, %llu cases, %.1fs)\n", ok ? "PASS" : "FAIL", id, title,
              static_cast<unsigned long long>(t.checks), static_cast<unsigned long long>(t.cases), secs);
  if (!ok) std::printf("  %s\n", t.first_failure.c_str());
  std::fflush(stdout);
}

void each_mk(unsigned lo, unsigned hi, const std::function<void(const BinaryField&, unsigned)>& fn) {
  for (unsigned m = lo; m <= hi; ++m) {
    const BinaryField field(m);
    for (unsigned k : coprime_ks(m)) fn(field, k);
  }
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opts;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0) opts.workers = static_cast<unsigned>(std::atoi(argv[i + 1]));
  }

  criterion(1, "H permutes GF(2^m) iff r+(alpha+gamma)m odd, with T0->T0 and T1->T_(r+(alpha+gamma)m), m=2..16",
            [&](Tally& t) {
              each_mk(2, 16, [&](const BinaryField& f, unsigned k) {
                t.add(summarize_main_theorem(f, k, check_main_theorem(f, k, opts)));
              });
            });

  criterion(2, "D_n(X,a) permutes GF(q) iff gcd(n,q^2-1)=1, m=2..5, all a, n<q^2",
            [&](Tally& t) { t.add(check_nobauer(5, {}, opts)); });

  criterion(3, "f_alpha/g_beta lemma parts (i)-(vii), m<=12, all alpha,beta,lambda", [&](Tally& t) {
    each_mk(2, 12, [&](const BinaryField& f, unsigned k) { t.add(check_fgprop(f, k, opts)); });
  });

  criterion(4, "D_{2^k-1}(X) = X^(2^k+1) T_k(1/X)^2, symbolic k<=16, pointwise m<=10",
            [&](Tally& t) { t.add(check_dickson_linearized(16, 10, {}, opts)); });

  criterion(5, "H_{alpha,0}(g_beta(x)) = x^(sigma+1)/g_beta(x)^2 = Dickson form, PP iff r+alpha*m odd, m<=10",
            [&](Tally& t) {
              each_mk(2, 10, [&](const BinaryField& f, unsigned k) { t.add(check_h_dickson(f, k, opts)); });
            });

  criterion(6, "phi two-to-one B_e->T_e, w-map permutation parity, power-sum identities over GF(q^2), m<=10",
            [&](Tally& t) {
              each_mk(2, 10, [&](const BinaryField& f, unsigned k) {
                t.add(check_perm_lemma(f, k, opts));
                t.add(check_zsumexp(f, k, opts));
              });
            });

  criterion(7, "H(g_beta(tau(phi(z)))) = tau(phi(w(z))) on B_e incl. 0 and inf, all e,alpha,gamma, m<=10",
            [&](Tally& t) {
              each_mk(2, 10, [&](const BinaryField& f, unsigned k) { t.add(check_hitt(f, k, opts)); });
            });

  criterion(8, "h(x)=x+1/x+1/x^2 permutes T1 and H_{1,1} (k=1) fixes T0, m=2..16", [&](Tally& t) {
    for (unsigned m = 2; m <= 16; ++m) t.add(check_remark3(BinaryField(m), opts));
  });

  criterion(9, "2k=1 mod m: four-term H_{0,0}, H_{0,1} and the five-term polynomial are equal PPs, m<=13",
            [&](Tally& t) {
              each_mk(2, 13, [&](const BinaryField& f, unsigned k) {
                if ((2 * k) % f.degree() == 1) t.add(check_remark4(f, k, opts));
              });
            });

  criterion(10, "H expands to a polynomial (exact division by X^2) matching pointwise values, m=2..16",
            [&](Tally& t) {
              each_mk(2, 16, [&](const BinaryField& f, unsigned k) { t.add(check_polynomiality(f, k, opts)); });
            });

  criterion(11, "Dickson recurrence = closed form = functional (m<=5, n<=q^2); H definitional = rewritten form (m<=12)",
            [&](Tally& t) {
              for (unsigned m = 1; m <= 5; ++m) t.add(check_dickson_methods(BinaryField(m), opts));
              each_mk(2, 12, [&](const BinaryField& f, unsigned k) { t.add(check_hprop(f, k, opts)); });
            });

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
