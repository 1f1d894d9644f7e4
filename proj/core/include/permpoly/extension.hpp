#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

/// a + b*u in GF(q^2), where u^2 = u + nu over GF(q).
struct ExtElement {
  Gf2mElement a;
  Gf2mElement b;

  constexpr auto operator<=>(const ExtElement&) const = default;

  friend constexpr ExtElement operator+(ExtElement x, ExtElement y) { return {x.a + y.a, x.b + y.b}; }
  constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

/// GF(q^2) as the tower GF(q)[u]/(u^2 + u + nu).
///
/// nu is the smallest-bit-pattern element of GF(q) with trace 1, which makes
/// u^2 + u + nu irreducible over GF(q). Conjugation (z -> z^q) fixes GF(q)
/// and sends u to u + 1, so the norm z * z^q is a^2 + ab + nu*b^2.
///
/// An element's packed index is a | (b << m); indices enumerate GF(q^2) in
/// increasing order and double as the hex serialization.
class ExtensionField {
 public:
  explicit ExtensionField(BinaryField base);

  const BinaryField& base() const { return base_; }
  Gf2mElement nu() const { return nu_; }
  /// q^2.
  std::uint64_t order() const { return base_.order() * base_.order(); }

  static constexpr ExtElement zero() { return {}; }
  static constexpr ExtElement one() { return {Gf2mElement{1}, Gf2mElement{0}}; }
  static constexpr ExtElement u() { return {Gf2mElement{0}, Gf2mElement{1}}; }
  static constexpr ExtElement embed(Gf2mElement x) { return {x, Gf2mElement{0}}; }
  static constexpr bool in_base(ExtElement z) { return z.b.is_zero(); }

  ExtElement from_index(std::uint64_t index) const;
  std::uint64_t index(ExtElement z) const { return z.a.bits | (std::uint64_t{z.b.bits} << base_.degree()); }

  ExtElement add(ExtElement x, ExtElement y) const { return x + y; }
  ExtElement mul(ExtElement x, ExtElement y) const;
  ExtElement square(ExtElement x) const;
  /// Throws DivisionByZero for z = 0.
  ExtElement inv(ExtElement z) const;
  ExtElement div(ExtElement x, ExtElement y) const { return mul(x, inv(y)); }
  ExtElement pow(ExtElement z, std::uint64_t e) const;
  /// z^(2^times).
  ExtElement frobenius(ExtElement z, unsigned times) const;
  /// z^q.
  ExtElement conj(ExtElement z) const { return {z.a + z.b, z.b}; }
  /// z^(q+1), always in GF(q).
  Gf2mElement norm(ExtElement z) const;

  /// Sum of z^(2^j) for j = 0..count-1.
  ExtElement partial_trace(ExtElement z, unsigned count) const;

  /// One root s of s^2 + s = c, or nullopt when none exists. The other root is s + 1.
  std::optional<ExtElement> solve_artin_schreier(ExtElement c) const;

 private:
  struct BasisVector {
    std::uint64_t image = 0;
    std::uint64_t preimage = 0;
  };

  BinaryField base_;
  Gf2mElement nu_;
  // XOR basis of the F_2-linear map s -> s^2 + s, keyed by leading bit.
  std::vector<BasisVector> artin_schreier_basis_;
};

/// An element of GF(q^2) or the point at infinity.
class ProjectiveValue {
 public:
  ProjectiveValue(ExtElement z) : value_(z) {}  // NOLINT(google-explicit-constructor)

  static ProjectiveValue infinity() { return ProjectiveValue(); }

  bool is_infinity() const { return infinite_; }
  /// Precondition: !is_infinity().
  const ExtElement& value() const { return value_; }

  friend bool operator==(const ProjectiveValue& x, const ProjectiveValue& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }

 private:
  ProjectiveValue() : infinite_(true) {}

  ExtElement value_{};
  bool infinite_ = false;
};

/// B_0 = (GF(q) \ {1}) with infinity adjoined; B_1 = norm-one elements of GF(q^2) other than 1.
/// Both have q elements. B_0 is listed as its finite part in increasing order
/// followed by infinity; B_1 in increasing packed-index order.
std::vector<ProjectiveValue> build_b_set(const ExtensionField& ext, unsigned e);

/// "inf" or the lowercase hex packed index.
std::string to_hex(const ExtensionField& ext, const ProjectiveValue& z);
std::string to_hex(const ExtensionField& ext, ExtElement z);
ProjectiveValue parse_projective(const ExtensionField& ext, std::string_view text);

}  // namespace permpoly
