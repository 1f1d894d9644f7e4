#include <numeric>

#include "check_support.hpp"
#include "permpoly/dickson.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/maps.hpp"
#include "permpoly/params.hpp"

namespace permpoly {

using detail::cex;
using detail::label;

bool is_permutation(const BinaryField& field, const std::vector<Gf2mElement>& images) {
  if (images.size() != field.order()) return false;
  std::vector<bool> seen(field.order(), false);
  for (auto y : images) {
    if (!field.contains(y.bits) || seen[y.bits]) return false;
    seen[y.bits] = true;
  }
  return true;
}

bool is_permutation(const BinaryField& field, const std::function<Gf2mElement(Gf2mElement)>& map) {
  std::vector<Gf2mElement> images(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) images[i] = map(Gf2mElement{static_cast<std::uint32_t>(i)});
  return is_permutation(field, images);
}

TraceClassImage map_trace_class(const BinaryField& field, const std::vector<Gf2mElement>& images, unsigned e) {
  TraceClassImage out;
  out.injective = true;
  std::vector<bool> seen(field.order(), false);
  std::optional<unsigned> cls;
  bool mixed = false;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    if (field.trace(x) != e) continue;
    const Gf2mElement y = images[i];
    const unsigned t = field.trace(y);
    if (!cls) {
      cls = t;
    } else if (*cls != t) {
      mixed = true;
    }
    if (seen[y.bits]) out.injective = false;
    seen[y.bits] = true;
  }
  if (!mixed) out.image = cls;
  return out;
}

bool PermutationReport::agrees() const {
  return is_permutation == predicted_by_theorem && t0.bijective() && t0.image == 0u && t1.bijective() &&
         t1.image == predicted_t1_image();
}

std::vector<PermutationReport> check_main_theorem(const BinaryField& field, unsigned k, const VerifyOptions& opts) {
  std::vector<PermutationReport> reports;
  for (unsigned alpha = 0; alpha < 2; ++alpha) {
    for (unsigned gamma = 0; gamma < 2; ++gamma) {
      const auto start = std::chrono::steady_clock::now();
      const ParamSet p = derive_params(field.degree(), k, alpha, 0, gamma);
      const FamilyMaps maps(field, p);
      const auto images = detail::image_table(field, opts, [&](Gf2mElement x) { return maps.h(x); });

      PermutationReport rep;
      rep.m = p.m;
      rep.k = p.k;
      rep.r = p.r;
      rep.m_prime = p.m_prime;
      rep.alpha = alpha;
      rep.gamma = gamma;
      rep.is_permutation = is_permutation(field, images);
      rep.predicted_by_theorem = (p.r + (alpha + gamma) * p.m) % 2 == 1;
      rep.t0 = map_trace_class(field, images, 0);
      rep.t1 = map_trace_class(field, images, 1);
      rep.elapsed = std::chrono::steady_clock::now() - start;
      reports.push_back(rep);
    }
  }
  return reports;
}

CheckOutcome summarize_main_theorem(const BinaryField& field, unsigned k, const std::vector<PermutationReport>& reports) {
  detail::Recorder rec("main_theorem", {{"m", field.degree()}, {"k", k}}, {});
  double ms = 0.0;
  for (const auto& rep : reports) {
    ms += rep.elapsed.count();
    rec.expect(rep.agrees(), [&] {
      return cex({label("alpha", rep.alpha), label("gamma", rep.gamma)},
                 "pp=" + detail::bool_str(rep.is_permutation) + " T0->" + detail::class_str(rep.t0) +
                     " T1->" + detail::class_str(rep.t1),
                 "pp=" + detail::bool_str(rep.predicted_by_theorem) + " T0->T0 T1->T" +
                     std::to_string(rep.predicted_t1_image()));
    });
  }
  auto out = rec.finish();
  out.tested = reports.size() * field.order();
  out.ms = ms;
  return out;
}

CheckOutcome check_nobauer(unsigned m_max, const FieldTable& table, const VerifyOptions& opts) {
  if (m_max > 5) throw PreconditionFailed("check_nobauer is limited to m <= 5");
  detail::Recorder rec("nobauer", {{"m_max", m_max}}, opts);
  for (unsigned m = 2; m <= m_max && !rec.stopped(); ++m) {
    const BinaryField field = table.make_field(m);
    const std::uint64_t q = field.order();
    const std::uint64_t group = q * q - 1;
    std::vector<Gf2mElement> prev(q);
    std::vector<Gf2mElement> cur(q);
    for (std::uint64_t av = 1; av < q && !rec.stopped(); ++av) {
      const Gf2mElement a{static_cast<std::uint32_t>(av)};
      for (std::uint64_t i = 0; i < q; ++i) {
        prev[i] = BinaryField::zero();
        cur[i] = Gf2mElement{static_cast<std::uint32_t>(i)};
      }
      for (std::uint64_t n = 1; n <= group; ++n) {
        const bool observed = is_permutation(field, cur);
        const bool predicted = std::gcd(n, group) == 1;
        rec.expect(observed == predicted, [&] {
          return cex({label("m", m), label("a", a), label("n", n)}, "pp=" + detail::bool_str(observed),
                     "gcd(n,q^2-1)=1 is " + detail::bool_str(predicted));
        });
        if (rec.stopped()) break;
        for (std::uint64_t i = 0; i < q; ++i) {
          const Gf2mElement x{static_cast<std::uint32_t>(i)};
          const Gf2mElement next = field.mul(x, cur[i]) + field.mul(a, prev[i]);
          prev[i] = cur[i];
          cur[i] = next;
        }
      }
    }
  }
  return rec.finish();
}

CheckOutcome check_remark3(const BinaryField& field, const VerifyOptions& opts) {
  const unsigned m = field.degree();
  if (m < 2) throw PreconditionFailed("check_remark3 needs m >= 2");
  detail::Recorder rec("remark3", {{"m", m}}, opts);
  const FamilyMaps h11(field, derive_params(m, 1, 1, 0, 1));
  const auto small_h = [&](Gf2mElement x) {
    const Gf2mElement xi = field.inv(x);
    return x + xi + field.square(xi);
  };

  rec.sweep(field.order(), [&](std::uint64_t i) -> std::optional<Counterexample> {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    const Gf2mElement hx = h11.h(x);
    if (field.trace(x) == 0) {
      if (hx != x) return cex({"part=fixes-T0", label("x", x)}, to_hex(hx), to_hex(x));
    } else if (hx != small_h(x)) {
      return cex({"part=T1-form", label("x", x)}, to_hex(hx), to_hex(small_h(x)));
    }
    return std::nullopt;
  });

  std::vector<Gf2mElement> images(field.order());
  std::vector<Gf2mElement> twice(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    images[i] = field.trace(x) == 1 ? small_h(x) : x;
    twice[i] = field.trace(x) == 1 && field.trace(images[i]) == 1 ? small_h(images[i]) : x;
  }
  const auto cls = map_trace_class(field, images, 1);
  rec.expect(cls.bijective() && cls.image == 1u,
             [&] { return cex({"part=h-permutes-T1"}, detail::class_str(cls), "T1"); });

  std::vector<bool> hit(field.order(), false);
  std::uint64_t t1_size = 0;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const Gf2mElement x{static_cast<std::uint32_t>(i)};
    if (field.trace(x) != 1) continue;
    ++t1_size;
    if (field.trace(twice[i]) == 1) hit[twice[i].bits] = true;
  }
  const auto covered = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));
  rec.expect(covered == t1_size, [&] {
    return cex({"part=h(h(T1))=T1"}, std::to_string(covered) + " elements", std::to_string(t1_size) + " elements");
  });
  return rec.finish();
}

}  // namespace permpoly
