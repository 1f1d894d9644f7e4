#include "check_support.hpp"
#include "permpoly/dickson.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/expand.hpp"
#include "permpoly/maps.hpp"
#include "permpoly/params.hpp"

namespace permpoly {

using detail::cex;
using detail::label;

namespace {

// A polynomial already reduced mod X^q - X, with machine-word exponents.
struct ReducedPoly {
  bool constant = false;
  std::vector<std::uint64_t> exponents;

  ReducedPoly(const SparsePolyF2& p, unsigned m) {
    const SparsePolyF2 reduced = sp_reduce_mod_field(p, m);
    for (const auto& e : reduced.exponents()) {
      if (e == 0) {
        constant = true;
      } else {
        exponents.push_back(static_cast<std::uint64_t>(e));
      }
    }
  }

  Gf2mElement operator()(const BinaryField& field, Gf2mElement x) const {
    Gf2mElement acc = constant ? BinaryField::one() : BinaryField::zero();
    if (x.is_zero()) return acc;
    for (auto e : exponents) acc += field.pow(x, e);
    return acc;
  }
};

SparsePolyF2 poly(std::initializer_list<Exponent> exps) { return SparsePolyF2::from_exponents(std::vector<Exponent>(exps)); }

}  // namespace

CheckOutcome check_remark4(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  if (m < 2 || (2 * k) % m != 1 % m) {
    throw PreconditionFailed("2k = 1 (mod m) fails for m=" + std::to_string(m) + ", k=" + std::to_string(k));
  }
  const ParamSet p00 = derive_params(m, k, 0, 0, 0);
  const ParamSet p01 = derive_params(m, k, 0, 0, 1);
  const std::uint64_t q = field.order();
  detail::Recorder rec("remark4", {{"m", m}, {"k", k}}, opts);

  rec.expect(p00.r == 2, [&] { return cex({"part=r"}, std::to_string(p00.r), "2"); });
  const Exponent sigma(p00.sigma);
  const Exponent sigma_sq_mod = (sigma * sigma) % Exponent(q - 1);
  rec.expect(sigma_sq_mod == 2, [&] { return cex({"part=sigma^2 mod q-1"}, sigma_sq_mod.str(), "2"); });

  const SparsePolyF2 four = poly({sigma - 1, 2 * (sigma - 1), sigma * sigma - 1, sigma * sigma + sigma - 2});
  const SparsePolyF2 h00 = expand_h(p00);
  rec.expect(h00 == four, [&] { return cex({"part=expansion"}, to_string(h00), to_string(four)); });
  const SparsePolyF2 h00_red = sp_reduce_mod_field(h00, m);
  const SparsePolyF2 four_red = sp_reduce_mod_field(four, m);
  rec.expect(h00_red == four_red, [&] { return cex({"part=expansion-reduced"}, to_string(h00_red), to_string(four_red)); });

  const FamilyMaps maps00(field, p00);
  const FamilyMaps maps01(field, p01);
  const ReducedPoly four_eval(four, m);
  rec.sweep(q, [&](std::uint64_t i) -> std::optional<Counterexample> {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    const Gf2mElement lhs = four_eval(field, x);
    const Gf2mElement rhs = maps00.h(x);
    if (lhs != rhs) return cex({"part=expansion-pointwise", label("x", x)}, to_hex(lhs), to_hex(rhs));
    return std::nullopt;
  });

  const auto images00 = detail::image_table(field, opts, [&](Gf2mElement x) { return maps00.h(x); });
  const auto images01 = detail::image_table(field, opts, [&](Gf2mElement x) { return maps01.h(x); });
  const auto expect_class = [&](const char* part, const std::vector<Gf2mElement>& images, unsigned from, unsigned to) {
    const auto c = map_trace_class(field, images, from);
    rec.expect(c.bijective() && c.image == to,
               [&] { return cex({std::string("part=") + part}, detail::class_str(c), "T" + std::to_string(to)); });
  };
  expect_class("H00-T0", images00, 0, 0);
  expect_class("H00-T1", images00, 1, 0);
  expect_class("H01-T0", images01, 0, 0);
  expect_class("H01-T1", images01, 1, 1);

  const SparsePolyF2 five = trace_polynomial(m) + poly({sigma - 1, 2 * (sigma - 1), 1, sigma});
  const ReducedPoly five_eval(five, m);
  const auto images_five = detail::image_table(field, opts, [&](Gf2mElement x) { return five_eval(field, x); });
  const bool five_pp = is_permutation(field, images_five);
  rec.expect(five_pp, [&] { return cex({"part=five-term-pp"}, "false", "true"); });
  rec.sweep(q, [&](std::uint64_t i) -> std::optional<Counterexample> {
    if (images_five[i] != images01[i]) {
      return cex({"part=five-term=H01", label("x", i)}, to_hex(images_five[i]), to_hex(images01[i]));
    }
    return std::nullopt;
  });
  const SparsePolyF2 difference = sp_reduce_mod_field(expand_h(p01) + five, m);
  rec.expect(difference.is_zero(), [&] { return cex({"part=five-term-reduced"}, to_string(difference), "0"); });
  return rec.finish();
}

CheckOutcome check_dickson_linearized(unsigned k_max, unsigned m_max, const FieldTable& table, const VerifyOptions& opts) {
  if (k_max > 16) throw PreconditionFailed("k_max must be at most 16");
  detail::Recorder rec("dickson_linearized", {{"k_max", k_max}, {"m_max", m_max}}, opts);

  // D_{2^k-1} against X^(2^k+1) * sum_{j<k} X^(-2^(j+1)).
  for (unsigned k = 1; k <= k_max; ++k) {
    if (rec.stopped()) return rec.finish();
    const std::uint64_t n = (std::uint64_t{1} << k) - 1;
    std::vector<Exponent> exps;
    for (unsigned j = 0; j < k; ++j) exps.push_back((Exponent(1) << k) + 1 - (Exponent(1) << (j + 1)));
    const SparsePolyF2 linear = SparsePolyF2::from_exponents(std::move(exps));
    const SparsePolyF2 closed = dickson_closed_form(n);
    rec.expect(closed == linear, [&] { return cex({"part=symbolic", label("k", k)}, to_string(closed), to_string(linear)); });
  }

  for (unsigned m = 1; m <= m_max; ++m) {
    const BinaryField field = table.make_field(m);
    for (unsigned k = 1; k <= m; ++k) {
      if (rec.stopped()) return rec.finish();
      const std::uint64_t n = (std::uint64_t{1} << k) - 1;
      rec.sweep(field.order() - 1, [&](std::uint64_t i) -> std::optional<Counterexample> {
        const Gf2mElement x{static_cast<std::uint32_t>(i + 1)};
        const Gf2mElement lhs = dickson_recurrence(field, n, x);
        const Gf2mElement t = partial_trace(field, k, field.inv(x));
        const Gf2mElement rhs = field.mul(field.pow(x, n + 2), field.square(t));
        if (lhs != rhs) return cex({"part=pointwise", label("m", m), label("k", k), label("x", x)}, to_hex(lhs), to_hex(rhs));
        return std::nullopt;
      });
    }
  }
  return rec.finish();
}

CheckOutcome check_polynomiality(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  (void)derive_params(m, k);
  detail::Recorder rec("polynomiality", {{"m", m}, {"k", k}}, opts);
  for (unsigned alpha = 0; alpha < 2; ++alpha) {
    for (unsigned gamma = 0; gamma < 2; ++gamma) {
      if (rec.stopped()) return rec.finish();
      const ParamSet p = derive_params(m, k, alpha, 0, gamma);
      const std::vector<std::string> flags = {label("alpha", alpha), label("gamma", gamma)};
      const auto with = [&](const char* part, std::vector<std::string> extra = {}) {
        std::vector<std::string> in{std::string("part=") + part};
        in.insert(in.end(), flags.begin(), flags.end());
        in.insert(in.end(), extra.begin(), extra.end());
        return in;
      };

      std::optional<SparsePolyF2> expanded;
      std::string error;
      try {
        expanded = expand_h(p);
      } catch (const NotDivisible& e) {
        error = e.what();
      }
      rec.expect(expanded.has_value(), [&] { return cex(with("divisible"), error, "divisible by X^2"); });
      if (!expanded) continue;
      rec.expect(!expanded->has_term(0), [&] { return cex(with("no-constant"), "1", "0"); });

      const FamilyMaps maps(field, p);
      const ReducedPoly reduced(*expanded, m);
      rec.sweep(field.order(), [&](std::uint64_t i) -> std::optional<Counterexample> {
        const Gf2mElement x{static_cast<std::uint32_t>(i)};
        const Gf2mElement lhs = reduced(field, x);
        const Gf2mElement rhs = maps.h(x);
        if (lhs != rhs) return cex(with("pointwise", {label("x", x)}), to_hex(lhs), to_hex(rhs));
        return std::nullopt;
      });
    }
  }
  return rec.finish();
}

}  // namespace permpoly
