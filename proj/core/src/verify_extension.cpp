#include <array>
#include <numeric>

#include "check_support.hpp"
#include "permpoly/dickson.hpp"
#include "permpoly/maps.hpp"
#include "permpoly/params.hpp"

namespace permpoly {

using detail::cex;
using detail::label;

namespace {

// Occupancy key for a projective value: packed index, or q^2 for infinity.
std::uint64_t key(const ExtensionField& ext, const ProjectiveValue& z) {
  return z.is_infinity() ? ext.order() : ext.index(z.value());
}

std::string hex(const ExtensionField& ext, const ProjectiveValue& z) { return to_hex(ext, z); }

// x / y with x / inf = 0.
ExtElement quotient(const ExtensionField& ext, ExtElement x, const ProjectiveValue& y) {
  if (y.is_infinity()) return ExtensionField::zero();
  return ext.div(x, y.value());
}

}  // namespace

CheckOutcome check_perm_lemma(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  const ParamSet p = derive_params(m, k);
  const ExtensionField ext(field);
  const std::uint64_t q = field.order();
  detail::Recorder rec("perm_lemma", {{"m", m}, {"k", k}}, opts);

  // Norm-one description of B_1 against z^q = 1/z, with z^q as m-fold squaring.
  rec.sweep(ext.order() - 2, [&](std::uint64_t i) -> std::optional<Counterexample> {
    const ExtElement z = ext.from_index(i + 2);
    const ExtElement zq = ext.frobenius(z, m);
    if (zq != ext.conj(z)) return cex({"part=conjugate", label("z", to_hex(ext, z))}, to_hex(ext, zq), to_hex(ext, ext.conj(z)));
    const bool unit = zq == ext.inv(z);
    const bool norm_one = ext.norm(z) == BinaryField::one();
    if (unit != norm_one) return cex({"part=b1-definition", label("z", to_hex(ext, z))}, detail::bool_str(norm_one), detail::bool_str(unit));
    return std::nullopt;
  });

  std::vector<bool> seen_any(ext.order() + 1);
  for (unsigned e = 0; e < 2; ++e) {
    if (rec.stopped()) return rec.finish();
    const auto b = build_b_set(ext, e);
    const std::string set = "B" + std::to_string(e);
    rec.expect(b.size() == q, [&] { return cex({"part=size", "set=" + set}, std::to_string(b.size()), std::to_string(q)); });

    std::vector<bool> member(ext.order() + 1);
    for (const auto& z : b) {
      const bool ok = e == 0 ? detail::in_b0(z) : detail::in_b1(ext, z);
      rec.expect(ok && !member[key(ext, z)] && !seen_any[key(ext, z)],
                 [&] { return cex({"part=membership", "set=" + set, label("z", hex(ext, z))}, "not a new member", set); });
      member[key(ext, z)] = true;
      seen_any[key(ext, z)] = true;
    }

    // phi: B_e -> T_e two-to-one.
    std::vector<unsigned> fiber(q);
    for (const auto& z : b) {
      const auto image = detail::base_value(phi(ext, z));
      rec.expect(image && field.trace(*image) == e, [&] {
        return cex({"part=phi-into", "set=" + set, label("z", hex(ext, z))}, hex(ext, phi(ext, z)), "T" + std::to_string(e));
      });
      if (image) ++fiber[image->bits];
    }
    for (std::uint64_t t = 0; t < q; ++t) {
      const Gf2mElement x{static_cast<std::uint32_t>(t)};
      if (field.trace(x) != e) continue;
      rec.expect(fiber[t] == 2, [&] {
        return cex({"part=phi-fiber", "set=" + set, label("t", x)}, std::to_string(fiber[t]), "2");
      });
    }

    for (unsigned w = 0; w < 2; ++w) {
      std::vector<bool> hit(ext.order() + 1);
      bool observed = true;
      for (const auto& z : b) {
        const ProjectiveValue image = w_map(ext, p, w, z);
        const std::uint64_t kk = key(ext, image);
        if (!member[kk] || hit[kk]) observed = false;
        hit[kk] = true;
      }
      const unsigned parity_bit = w == 0 ? (e == 0 ? 1u : k % 2) : (e == 0 ? m % 2 : (m + k) % 2);
      const bool by_parity = parity_bit == 1;
      const std::uint64_t s = w == 0 ? p.sigma - 1 : p.sigma + 1;
      const bool by_gcd = std::gcd(s, e == 0 ? q - 1 : q + 1) == 1;
      const std::vector<std::string> in = {"part=w-permutes", "set=" + set, label("w", w)};
      rec.expect(observed == by_parity, [&] { return cex(in, detail::bool_str(observed), detail::bool_str(by_parity)); });
      rec.expect(observed == by_gcd, [&] {
        auto with_gcd = in;
        with_gcd.back() += ",gcd";
        return cex(with_gcd, detail::bool_str(observed), detail::bool_str(by_gcd));
      });
    }
  }
  return rec.finish();
}

CheckOutcome check_zsumexp(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  const ParamSet p = derive_params(m, k);
  const ExtensionField ext(field);
  detail::Recorder rec("zsumexp", {{"m", m}, {"k", k}}, opts);
  const ExtElement one = ExtensionField::one();

  rec.sweep(ext.order() - 2, [&](std::uint64_t i) -> std::optional<Counterexample> {
    const ExtElement z = ext.from_index(i + 2);
    const std::string zs = label("z", to_hex(ext, z));
    const ExtElement zi = ext.inv(z);
    const ExtElement s = z + zi;
    const ExtElement y = ext.inv(s);
    const ExtElement zsig = ext.frobenius(z, k);
    const ExtElement zsig_inv = ext.frobenius(zi, k);
    const ExtElement z_sm1 = ext.mul(zsig, zi);       // z^(sigma-1)
    const ExtElement z_1ms = ext.mul(z, zsig_inv);    // z^(1-sigma)
    const ExtElement z_sp1 = ext.mul(zsig, z);        // z^(sigma+1)
    const ExtElement z_msm1 = ext.mul(zsig_inv, zi);  // z^(-sigma-1)
    const ExtElement s_sp1 = ext.pow(s, p.sigma + 1);

    ExtElement power_sum = ExtensionField::zero();
    ExtElement term = y;
    for (unsigned j = 1; j <= k; ++j) {
      term = ext.square(term);
      power_sum = power_sum + term;
    }
    const ExtElement rhs_i = ext.div(z_sm1 + z_1ms, s_sp1);
    if (power_sum != rhs_i) return cex({"part=i", zs}, to_hex(ext, power_sum), to_hex(ext, rhs_i));

    const ProjectiveValue phi_z = phi(ext, z);
    if (phi_z.is_infinity() || phi_z.value() != y) return cex({"part=phi", zs}, to_hex(ext, phi_z), to_hex(ext, y));
    const ExtElement g0 = ext.partial_trace(y, k);
    const ExtElement g0_sq = ext.square(g0);
    const ExtElement phi_pow = ext.pow(y, p.sigma + 1);

    const ExtElement rhs_a = quotient(ext, phi_pow, phi(ext, w_map(ext, p, 0, z)));
    if (g0_sq != rhs_a) return cex({"part=ii-w0", zs}, to_hex(ext, g0_sq), to_hex(ext, rhs_a));
    const ExtElement rhs_b = quotient(ext, phi_pow, phi(ext, w_map(ext, p, 1, z)));
    if (one + g0_sq != rhs_b) return cex({"part=ii-w1", zs}, to_hex(ext, one + g0_sq), to_hex(ext, rhs_b));

    const ExtElement expanded = z_sp1 + z_sm1 + z_1ms + z_msm1;
    if (s_sp1 != expanded) return cex({"part=ii-difference", zs}, to_hex(ext, s_sp1), to_hex(ext, expanded));
    return std::nullopt;
  });
  return rec.finish();
}

CheckOutcome check_hitt(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  (void)derive_params(m, k);
  const ExtensionField ext(field);
  const std::array<std::vector<ProjectiveValue>, 2> b_sets = {build_b_set(ext, 0), build_b_set(ext, 1)};
  detail::Recorder rec("hitt", {{"m", m}, {"k", k}}, opts);

  for (unsigned beta = 0; beta < 2; ++beta) {
    if ((k + beta * m) % 2 == 0) continue;
    for (unsigned alpha = 0; alpha < 2; ++alpha) {
      for (unsigned gamma = 0; gamma < 2; ++gamma) {
        if (rec.stopped()) return rec.finish();
        const ParamSet p = derive_params(m, k, alpha, beta, gamma);
        const FamilyMaps maps(field, p);
        const std::vector<std::string> flags = {label("alpha", alpha), label("beta", beta), label("gamma", gamma)};

        const unsigned theta_lhs = (m * p.theta) % 2;
        const unsigned theta_rhs = (1 + k * (1 + p.delta * m)) % 2;
        rec.expect(theta_lhs == theta_rhs, [&] {
          auto in = flags;
          in.insert(in.begin(), "part=theta-congruence");
          return cex(in, std::to_string(theta_lhs), std::to_string(theta_rhs));
        });

        for (unsigned e = 0; e < 2; ++e) {
          const auto& b = b_sets[(e * (1 + p.delta * m)) % 2];
          rec.sweep(b.size(), [&](std::uint64_t i) -> std::optional<Counterexample> {
            const ProjectiveValue& z = b[i];
            const auto describe = [&](const ProjectiveValue& lhs, const ProjectiveValue& rhs) {
              std::vector<std::string> in{"part=identity"};
              in.insert(in.end(), flags.begin(), flags.end());
              in.push_back(label("e", e));
              in.push_back(label("z", hex(ext, z)));
              return cex(std::move(in), hex(ext, lhs), hex(ext, rhs));
            };
            const auto inner = detail::base_value(phi(ext, z));
            const auto outer = detail::base_value(phi(ext, w_map(ext, p, (p.theta * e) % 2, z)));
            if (!inner || !outer) return describe(phi(ext, z), phi(ext, w_map(ext, p, (p.theta * e) % 2, z)));
            const Gf2mElement lhs = maps.h(maps.g_beta(tau(p.delta * e, *inner)));
            const Gf2mElement rhs = tau(p.gamma * e, *outer);
            if (lhs != rhs) return describe(ExtensionField::embed(lhs), ExtensionField::embed(rhs));
            return std::nullopt;
          });
        }
      }
    }
  }
  return rec.finish();
}

CheckOutcome check_dickson_methods(const BinaryField& field, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  const ExtensionField ext(field);
  const std::uint64_t q = field.order();
  detail::Recorder rec("dickson_methods", {{"m", m}}, opts);

  std::vector<ExtElement> preimage(q);
  rec.sweep(q, [&](std::uint64_t i) -> std::optional<Counterexample> {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    const ExtElement exhaustive = dickson_preimage(ext, x, PreimageSearch::Exhaustive);
    const ExtElement algebraic = dickson_preimage(ext, x, PreimageSearch::Algebraic);
    preimage[i] = algebraic;
    const bool same_pair = exhaustive == algebraic || exhaustive == ext.inv(algebraic);
    if (!same_pair) return cex({"part=preimage", label("x", x)}, to_hex(ext, exhaustive), to_hex(ext, algebraic));
    const ExtElement back = algebraic + ext.inv(algebraic);
    if (back != ExtensionField::embed(x)) return cex({"part=z+1/z", label("x", x)}, to_hex(ext, back), to_hex(x));
    return std::nullopt;
  });
  if (rec.stopped()) return rec.finish();

  const std::uint64_t n_max = q * q;
  std::vector<SparsePolyF2> closed(n_max);
  detail::parallel_for(n_max, detail::worker_count(opts), [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) closed[i] = dickson_closed_form(i + 1);
  });

  rec.sweep(n_max * q, [&](std::uint64_t i) -> std::optional<Counterexample> {
    const std::uint64_t n = i / q + 1;
    const Gf2mElement x{static_cast<std::uint32_t>(i % q)};
    const auto in = [&](const char* part) { return std::vector<std::string>{std::string("part=") + part, label("n", n), label("x", x)}; };
    const Gf2mElement rec_value = dickson_recurrence(field, n, x);
    const Gf2mElement closed_value = evaluate(field, closed[n - 1], x);
    if (rec_value != closed_value) return cex(in("recurrence=closed"), to_hex(rec_value), to_hex(closed_value));
    const ExtElement zn = ext.pow(preimage[x.bits], n);
    const ExtElement functional = zn + ext.inv(zn);
    if (!ExtensionField::in_base(functional)) return cex(in("functional-in-base"), to_hex(ext, functional), "GF(q)");
    if (rec_value != functional.a) return cex(in("recurrence=functional"), to_hex(rec_value), to_hex(functional.a));
    return std::nullopt;
  });
  return rec.finish();
}

}  // namespace permpoly
