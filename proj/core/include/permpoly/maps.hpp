#pragma once

#include <optional>
#include <string_view>

#include "permpoly/extension.hpp"
#include "permpoly/field.hpp"
#include "permpoly/params.hpp"

namespace permpoly {

enum class MapKind { FAlpha, GBeta, Tk, H, Dickson, Phi, W0, W1, Tau };

/// CLI tag names: f, g, tk, h, dickson, phi, w0, w1, tau.
std::string_view map_kind_name(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view name);

/// x + x^2 + ... + x^(2^(count-1)); T_k for count = k.
Gf2mElement partial_trace(const BinaryField& field, unsigned count, Gf2mElement x);

/// The linearized maps f_alpha, g_beta, T_k and the family H_{alpha,gamma}
/// for one parameter set over one field.
class FamilyMaps {
 public:
  /// Throws OutOfRange when the field degree differs from params.m.
  FamilyMaps(const BinaryField& field, const ParamSet& params);

  const BinaryField& field() const { return field_; }
  const ParamSet& params() const { return params_; }

  /// alpha*Tr(x) + sum_{i<r} x^(sigma^i).
  Gf2mElement f_alpha(Gf2mElement x) const;
  /// beta*Tr(x) + sum_{j<k} x^(2^j).
  Gf2mElement g_beta(Gf2mElement x) const;
  Gf2mElement tk(Gf2mElement x) const { return partial_trace(field_, params_.k, x); }
  /// gamma*Tr(x) + f_alpha(x)^(sigma+1) / x^2, and 0 at x = 0.
  Gf2mElement h(Gf2mElement x) const;
  /// gamma*Tr(x) + (f/x)^2 + f/x + f with f = f_alpha(x); x != 0.
  Gf2mElement h_rewritten(Gf2mElement x) const;

 private:
  BinaryField field_;
  ParamSet params_;
};

/// x + v for v in {0, 1}.
inline Gf2mElement tau(unsigned v, Gf2mElement x) { return x + Gf2mElement{v & 1u}; }

/// 1/(z + 1/z), with phi(0) = phi(inf) = 0 and phi(1) = inf.
ProjectiveValue phi(const ExtensionField& ext, const ProjectiveValue& z);

/// w_0(z) = z^(sigma-1), w_1(z) = z^(sigma+1), w_e(inf) = inf.
ProjectiveValue w_map(const ExtensionField& ext, const ParamSet& params, unsigned e, const ProjectiveValue& z);

}  // namespace permpoly
