#include "permpoly/extension.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

Gf2mElement smallest_trace_one(const BinaryField& field) {
  for (std::uint64_t v = 1; v < field.order(); ++v) {
    const Gf2mElement x{static_cast<std::uint32_t>(v)};
    if (field.trace(x) == 1) return x;
  }
  throw Error("no trace-one element");  // unreachable: trace is onto F_2
}

}  // namespace

ExtensionField::ExtensionField(BinaryField base) : base_(std::move(base)), nu_(smallest_trace_one(base_)) {
  const unsigned dim = 2 * base_.degree();
  artin_schreier_basis_.assign(dim, BasisVector{});
  for (unsigned i = 0; i < dim; ++i) {
    const ExtElement e = from_index(std::uint64_t{1} << i);
    BasisVector v{index(square(e) + e), std::uint64_t{1} << i};
    while (v.image != 0) {
      const unsigned lead = static_cast<unsigned>(std::bit_width(v.image)) - 1;
      auto& slot = artin_schreier_basis_[lead];
      if (slot.image == 0) {
        slot = v;
        break;
      }
      v.image ^= slot.image;
      v.preimage ^= slot.preimage;
    }
  }
}

ExtElement ExtensionField::from_index(std::uint64_t index) const {
  if (index >= order()) throw OutOfRange("index " + std::to_string(index) + " outside GF(q^2)");
  const unsigned m = base_.degree();
  return {Gf2mElement{static_cast<std::uint32_t>(index & base_.mask())},
          Gf2mElement{static_cast<std::uint32_t>(index >> m)}};
}

ExtElement ExtensionField::mul(ExtElement x, ExtElement y) const {
  // (a + bu)(c + du) = ac + bd*nu + (ad + bc + bd)u
  const Gf2mElement ac = base_.mul(x.a, y.a);
  const Gf2mElement bd = base_.mul(x.b, y.b);
  const Gf2mElement cross = base_.mul(x.a + x.b, y.a + y.b);  // ac + ad + bc + bd
  return {ac + base_.mul(bd, nu_), cross + ac};
}

ExtElement ExtensionField::square(ExtElement x) const {
  const Gf2mElement b2 = base_.square(x.b);
  return {base_.square(x.a) + base_.mul(b2, nu_), b2};
}

Gf2mElement ExtensionField::norm(ExtElement z) const {
  return base_.square(z.a) + base_.mul(z.a, z.b) + base_.mul(nu_, base_.square(z.b));
}

ExtElement ExtensionField::inv(ExtElement z) const {
  if (z.is_zero()) throw DivisionByZero("inverse of zero in GF(q^2)");
  const Gf2mElement n_inv = base_.inv(norm(z));
  const ExtElement c = conj(z);
  return {base_.mul(c.a, n_inv), base_.mul(c.b, n_inv)};
}

ExtElement ExtensionField::pow(ExtElement z, std::uint64_t e) const {
  ExtElement r = one();
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mul(r, z);
    z = square(z);
  }
  return r;
}

ExtElement ExtensionField::frobenius(ExtElement z, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) z = square(z);
  return z;
}

ExtElement ExtensionField::partial_trace(ExtElement z, unsigned count) const {
  ExtElement acc = zero();
  for (unsigned j = 0; j < count; ++j) {
    acc = acc + z;
    z = square(z);
  }
  return acc;
}

std::optional<ExtElement> ExtensionField::solve_artin_schreier(ExtElement c) const {
  std::uint64_t rest = index(c);
  std::uint64_t solution = 0;
  while (rest != 0) {
    const unsigned lead = static_cast<unsigned>(std::bit_width(rest)) - 1;
    const auto& slot = artin_schreier_basis_[lead];
    if (slot.image == 0) return std::nullopt;
    rest ^= slot.image;
    solution ^= slot.preimage;
  }
  return from_index(solution);
}

std::vector<ProjectiveValue> build_b_set(const ExtensionField& ext, unsigned e) {
  std::vector<ProjectiveValue> out;
  const auto& base = ext.base();
  out.reserve(base.order());
  if (e == 0) {
    for (std::uint64_t v = 0; v < base.order(); ++v) {
      if (v == 1) continue;
      out.emplace_back(ExtensionField::embed(Gf2mElement{static_cast<std::uint32_t>(v)}));
    }
    out.push_back(ProjectiveValue::infinity());
    return out;
  }
  for (std::uint64_t i = 2; i < ext.order(); ++i) {
    const ExtElement z = ext.from_index(i);
    if (ext.norm(z) == BinaryField::one()) out.emplace_back(z);
  }
  return out;
}

std::string to_hex(const ExtensionField& ext, ExtElement z) {
  std::ostringstream os;
  os << std::hex << ext.index(z);
  return os.str();
}

std::string to_hex(const ExtensionField& ext, const ProjectiveValue& z) {
  return z.is_infinity() ? std::string("inf") : to_hex(ext, z.value());
}

ProjectiveValue parse_projective(const ExtensionField& ext, std::string_view text) {
  if (text == "inf") return ProjectiveValue::infinity();
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw ParseError("empty extension-field element");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec == std::errc::result_out_of_range) throw OutOfRange("extension-field element out of range");
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a hex extension-field element: '" + std::string(text) + "'");
  }
  return ext.from_index(value);
}

}  // namespace permpoly
