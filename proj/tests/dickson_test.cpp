#include <gtest/gtest.h>

#include "generators.hpp"
#include "permpoly/dickson.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/verify.hpp"

using namespace permpoly;
using permpoly::testing::Gen;

namespace {

// Parity of C(a, b) by Lucas: odd iff the bits of b are a subset of those of a.
bool binom_odd(std::uint64_t a, std::uint64_t b) { return b <= a && (a & b) == b; }

// n/(n-j) C(n-j, j) = C(n-j, j) + C(n-j-1, j-1) for j >= 1.
SparsePolyF2 lucas_dickson(std::uint64_t n) {
  std::vector<Exponent> exps;
  for (std::uint64_t j = 0; 2 * j <= n; ++j) {
    bool odd = binom_odd(n - j, j);
    if (j >= 1) odd ^= binom_odd(n - j - 1, j - 1);
    if (odd) exps.emplace_back(n - 2 * j);
  }
  return SparsePolyF2::from_exponents(std::move(exps));
}

}  // namespace

TEST(Dickson, SmallExamples) {
  const BinaryField f(3, 0xb);
  for (auto x : f.elements()) {
    EXPECT_EQ(dickson_recurrence(f, 0, x), BinaryField::zero());
    EXPECT_EQ(dickson_recurrence(f, 1, x), x);
    EXPECT_EQ(dickson_recurrence(f, 3, x), f.pow(x, 3) + x);
  }
  EXPECT_EQ(dickson_closed_form(1), SparsePolyF2{1});
  EXPECT_EQ(dickson_closed_form(3), (SparsePolyF2{1, 3}));
  EXPECT_EQ(dickson_closed_form(2), SparsePolyF2{2});
  EXPECT_THROW(dickson_closed_form(0), OutOfRange);
}

TEST(Dickson, ClosedFormMatchesLucasOracle) {
  for (std::uint64_t n = 1; n <= 700; ++n) ASSERT_EQ(dickson_closed_form(n), lucas_dickson(n)) << "n=" << n;
  for (std::uint64_t n : {1023u, 1024u, 4097u, 12345u, 65535u}) {
    EXPECT_EQ(dickson_closed_form(n), lucas_dickson(n)) << "n=" << n;
  }
}

TEST(Dickson, MethodNames) {
  for (auto m : {DicksonMethod::Recurrence, DicksonMethod::ClosedForm, DicksonMethod::Functional}) {
    EXPECT_EQ(parse_dickson_method(dickson_method_name(m)), m);
  }
  EXPECT_EQ(parse_dickson_method("closed"), DicksonMethod::ClosedForm);
  EXPECT_FALSE(parse_dickson_method("lucas").has_value());
}

TEST(Dickson, PreimagesSolveTheQuadratic) {
  for (unsigned m = 1; m <= 6; ++m) {
    const ExtensionField e{BinaryField(m)};
    for (auto x : e.base().elements()) {
      for (auto how : {PreimageSearch::Exhaustive, PreimageSearch::Algebraic, PreimageSearch::Auto}) {
        const auto z = dickson_preimage(e, x, how);
        ASSERT_FALSE(z.is_zero());
        ASSERT_EQ(z + e.inv(z), ExtensionField::embed(x));
      }
    }
  }
}

TEST(Dickson, MethodsAgreeSampledLargerFields) {
  Gen g(21);
  for (unsigned m : {6u, 8u, 11u, 16u, 20u}) {
    const ExtensionField e{BinaryField(m)};
    for (int i = 0; i < 40; ++i) {
      const auto x = g.element(e.base());
      const std::uint64_t n = 1 + g.below(3000);
      const auto rec = dickson_recurrence(e.base(), n, x);
      ASSERT_EQ(rec, eval_dickson(e, n, x, DicksonMethod::ClosedForm)) << "m=" << m << " n=" << n;
      ASSERT_EQ(rec, eval_dickson(e, n, x, DicksonMethod::Functional)) << "m=" << m << " n=" << n;
      ASSERT_EQ(rec, dickson_functional(e, n, x, PreimageSearch::Algebraic));
    }
  }
}

TEST(Dickson, GeneralParameterFunctionalEquation) {
  // D_n(z + a/z, a) = z^n + (a/z)^n for z in GF(q)^*.
  for (unsigned m = 2; m <= 5; ++m) {
    const BinaryField f(m);
    for (std::uint32_t av = 1; av < f.order(); ++av) {
      const Gf2mElement a{av};
      for (std::uint32_t zv = 1; zv < f.order(); ++zv) {
        const Gf2mElement z{zv};
        const auto az = f.div(a, z);
        for (std::uint64_t n = 1; n < 40; ++n) {
          ASSERT_EQ(dickson_recurrence(f, n, z + az, a), f.pow(z, n) + f.pow(az, n));
        }
      }
    }
  }
}

TEST(Dickson, NobauerExamples) {
  const auto pp = [](unsigned m, std::uint64_t n) {
    const BinaryField f(m);
    return is_permutation(f, [&](Gf2mElement x) { return dickson_recurrence(f, n, x); });
  };
  EXPECT_FALSE(pp(2, 3));
  EXPECT_TRUE(pp(3, 5));
  for (unsigned m = 1; m <= 8; ++m) EXPECT_TRUE(pp(m, 1));
}

TEST(Dickson, LinearizedExamples) {
  // D_{2^k - 1}(X) = X^(2^k+1) T_k(1/X)^2, e.g. D_3 = X^5 (1/X + 1/X^2)^2 = X^3 + X.
  EXPECT_EQ(dickson_closed_form(1), SparsePolyF2{1});
  EXPECT_EQ(dickson_closed_form(3), (SparsePolyF2{1, 3}));
  const auto d31 = dickson_closed_form(31);
  EXPECT_EQ(d31, (SparsePolyF2{1, 17, 25, 29, 31}));
}
