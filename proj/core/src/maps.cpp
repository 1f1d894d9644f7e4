#include "permpoly/maps.hpp"

#include <array>
#include <string>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

constexpr std::array<std::pair<MapKind, std::string_view>, 9> kNames = {{
    {MapKind::FAlpha, "f"},
    {MapKind::GBeta, "g"},
    {MapKind::Tk, "tk"},
    {MapKind::H, "h"},
    {MapKind::Dickson, "dickson"},
    {MapKind::Phi, "phi"},
    {MapKind::W0, "w0"},
    {MapKind::W1, "w1"},
    {MapKind::Tau, "tau"},
}};

}  // namespace

std::string_view map_kind_name(MapKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Gf2mElement partial_trace(const BinaryField& field, unsigned count, Gf2mElement x) {
  Gf2mElement acc = BinaryField::zero();
  for (unsigned j = 0; j < count; ++j) {
    acc += x;
    x = field.square(x);
  }
  return acc;
}

FamilyMaps::FamilyMaps(const BinaryField& field, const ParamSet& params) : field_(field), params_(params) {
  if (field.degree() != params.m) {
    throw OutOfRange("parameter set for m = " + std::to_string(params.m) + " used with GF(2^" +
                     std::to_string(field.degree()) + ")");
  }
}

Gf2mElement FamilyMaps::f_alpha(Gf2mElement x) const {
  Gf2mElement acc = params_.alpha != 0 && field_.trace(x) != 0 ? BinaryField::one() : BinaryField::zero();
  Gf2mElement y = x;
  for (unsigned i = 0; i < params_.r; ++i) {
    acc += y;
    y = field_.frobenius(y, params_.k);
  }
  return acc;
}

Gf2mElement FamilyMaps::g_beta(Gf2mElement x) const {
  Gf2mElement acc = partial_trace(field_, params_.k, x);
  if (params_.beta != 0 && field_.trace(x) != 0) acc += BinaryField::one();
  return acc;
}

Gf2mElement FamilyMaps::h(Gf2mElement x) const {
  if (x.is_zero()) return BinaryField::zero();
  const Gf2mElement f = f_alpha(x);
  const Gf2mElement f_pow = field_.mul(field_.frobenius(f, params_.k), f);
  Gf2mElement out = field_.div(f_pow, field_.square(x));
  if (params_.gamma != 0 && field_.trace(x) != 0) out += BinaryField::one();
  return out;
}

Gf2mElement FamilyMaps::h_rewritten(Gf2mElement x) const {
  const Gf2mElement f = f_alpha(x);
  const Gf2mElement ratio = field_.div(f, x);
  Gf2mElement out = field_.square(ratio) + ratio + f;
  if (params_.gamma != 0 && field_.trace(x) != 0) out += BinaryField::one();
  return out;
}

ProjectiveValue phi(const ExtensionField& ext, const ProjectiveValue& z) {
  if (z.is_infinity() || z.value().is_zero()) return ExtensionField::zero();
  if (z.value() == ExtensionField::one()) return ProjectiveValue::infinity();
  const ExtElement v = z.value();
  return ext.inv(v + ext.inv(v));
}

ProjectiveValue w_map(const ExtensionField& ext, const ParamSet& params, unsigned e, const ProjectiveValue& z) {
  if (z.is_infinity()) return z;
  const std::uint64_t exponent = e == 0 ? params.sigma - 1 : params.sigma + 1;
  return ext.pow(z.value(), exponent);
}

}  // namespace permpoly
