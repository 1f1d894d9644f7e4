#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/field_table.hpp"

namespace permpoly {

struct VerifyOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Keep sweeping after the first counterexample and count every failure.
  bool count_all = false;
};

struct Counterexample {
  /// "name=value" labels; field elements in lowercase hex.
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

using CheckParams = std::vector<std::pair<std::string, std::int64_t>>;

/// Result of one checker run.
///
/// `tested` counts evaluated cases. Without count_all a sweep stops at its
/// first counterexample, the one earliest in enumeration order, and `tested`
/// then counts the cases up to and including it, independent of worker count.
struct CheckOutcome {
  std::string check_name;
  CheckParams params;
  std::uint64_t tested = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
  bool passed = true;
  double ms = 0.0;
};

/// Image of one trace class T_e under a map.
struct TraceClassImage {
  /// Trace class containing every image, or nullopt when images straddle both.
  std::optional<unsigned> image;
  bool injective = false;

  /// Injective with all images in one class; |T_0| = |T_1| makes this onto.
  bool bijective() const { return injective && image.has_value(); }
};

struct PermutationReport {
  unsigned m = 0;
  unsigned k = 0;
  unsigned r = 0;
  unsigned m_prime = 0;
  unsigned alpha = 0;
  unsigned gamma = 0;
  bool is_permutation = false;
  bool predicted_by_theorem = false;
  TraceClassImage t0;
  TraceClassImage t1;
  std::chrono::duration<double, std::milli> elapsed{};

  /// (r + (alpha+gamma)m) mod 2.
  unsigned predicted_t1_image() const { return (r + (alpha + gamma) * m) % 2; }
  /// Permutation status and both trace-class images as the theorem states.
  bool agrees() const;
};

/// Occupancy count over GF(q): true iff the q images are distinct.
bool is_permutation(const BinaryField& field, const std::function<Gf2mElement(Gf2mElement)>& map);
/// Same test over a precomputed image table indexed by element bits.
bool is_permutation(const BinaryField& field, const std::vector<Gf2mElement>& images);

TraceClassImage map_trace_class(const BinaryField& field, const std::vector<Gf2mElement>& images, unsigned e);

/// One report per (alpha, gamma) in {0,1}^2. Throws NotCoprime.
std::vector<PermutationReport> check_main_theorem(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});
/// Folds the four reports into a CheckOutcome named "main_theorem".
CheckOutcome summarize_main_theorem(const BinaryField& field, unsigned k, const std::vector<PermutationReport>& reports);

/// D_n(X, a) permutes GF(q) iff gcd(n, q^2-1) = 1 for m = 2..m_max, a != 0,
/// 1 <= n < q^2. Throws PreconditionFailed for m_max > 5.
CheckOutcome check_nobauer(unsigned m_max, const FieldTable& table = {}, const VerifyOptions& opts = {});

/// Linearity and parts (i)-(vii) of the f_alpha / g_beta lemma for every alpha, beta, lambda.
CheckOutcome check_fgprop(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// Rewritten form of H and Tr(H(x)) = (r + (alpha+gamma)m) Tr(x) on GF(q)^*.
CheckOutcome check_hprop(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// phi is two-to-one B_e -> T_e; w_0 and w_1 permutation status on B_0, B_1
/// by image counting, by parity, and by the gcd criterion.
CheckOutcome check_perm_lemma(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// The power-sum identity and both phi / w identities over GF(q^2) \ {0, 1}.
CheckOutcome check_zsumexp(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// H_{alpha,0}(g_beta(x)) = x^(sigma+1)/g_beta(x)^2 = reciprocal Dickson form,
/// for every alpha with r + alpha*m odd; PP status of H_{alpha,0} for both alpha.
CheckOutcome check_h_dickson(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// H(g_beta(tau_{delta e}(phi(z)))) = tau_{gamma e}(phi(w_{theta e}(z))) on B_{e(1+delta m)}.
CheckOutcome check_hitt(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// k = 1: h(x) = x + 1/x + 1/x^2 permutes T_1, and H_{1,1} fixes T_0. Needs m >= 2.
CheckOutcome check_remark3(const BinaryField& field, const VerifyOptions& opts = {});

/// 2k = 1 (mod m): four-term expansion of H_{0,0}, class images of H_{0,0} and
/// H_{0,1}, and the five-term permutation polynomial. Throws PreconditionFailed otherwise.
CheckOutcome check_remark4(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// D_{2^k-1}(X) = X^(2^k+1) T_k(1/X)^2 symbolically for k <= k_max (<= 16) and
/// pointwise on GF(2^m)^* for m <= m_max, k <= m.
CheckOutcome check_dickson_linearized(unsigned k_max, unsigned m_max, const FieldTable& table = {},
                                      const VerifyOptions& opts = {});

/// expand_h succeeds for every alpha, gamma and, reduced mod X^q - X, agrees
/// with pointwise evaluation on all of GF(q).
CheckOutcome check_polynomiality(const BinaryField& field, unsigned k, const VerifyOptions& opts = {});

/// Recurrence, closed form and functional Dickson evaluation agree for
/// 1 <= n <= q^2 and every x; exhaustive and algebraic preimages agree.
CheckOutcome check_dickson_methods(const BinaryField& field, const VerifyOptions& opts = {});

}  // namespace permpoly
