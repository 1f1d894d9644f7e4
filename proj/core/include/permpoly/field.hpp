#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

/// Element of GF(2^m): bit i holds the coefficient of X^i in the residue.
struct Gf2mElement {
  std::uint32_t bits = 0;

  constexpr auto operator<=>(const Gf2mElement&) const = default;

  friend constexpr Gf2mElement operator+(Gf2mElement x, Gf2mElement y) { return {x.bits ^ y.bits}; }
  constexpr Gf2mElement& operator+=(Gf2mElement y) {
    bits ^= y.bits;
    return *this;
  }
  constexpr bool is_zero() const { return bits == 0; }
};

/// Arithmetic context for GF(2^m), 1 <= m <= 24, with a fixed irreducible modulus.
///
/// Immutable after construction. Copies share the lookup tables, so passing a
/// field by value or sharing one across threads is cheap and safe. For m <= 16
/// multiplication goes through exp/log tables built from the smallest
/// primitive element; larger fields use carry-less multiplication with
/// bitwise reduction.
class BinaryField {
 public:
  static constexpr unsigned kMaxDegree = 24;
  static constexpr unsigned kMaxTableDegree = 16;

  /// Uses the built-in smallest irreducible polynomial of degree m.
  explicit BinaryField(unsigned m);
  /// Throws UnsupportedDegree or ReducibleModulus on a bad modulus.
  BinaryField(unsigned m, std::uint32_t reduction);

  unsigned degree() const { return m_; }
  std::uint32_t reduction() const { return reduction_; }
  /// q = 2^m.
  std::uint64_t order() const { return std::uint64_t{1} << m_; }
  std::uint32_t mask() const { return static_cast<std::uint32_t>(order() - 1); }

  bool contains(std::uint64_t bits) const { return bits < order(); }
  /// Validating constructor for elements; throws OutOfRange when bits >= q.
  Gf2mElement element(std::uint64_t bits) const;
  static constexpr Gf2mElement zero() { return {0}; }
  static constexpr Gf2mElement one() { return {1}; }

  Gf2mElement add(Gf2mElement x, Gf2mElement y) const { return x + y; }
  Gf2mElement mul(Gf2mElement x, Gf2mElement y) const;
  Gf2mElement square(Gf2mElement x) const;
  /// Throws DivisionByZero for x = 0.
  Gf2mElement inv(Gf2mElement x) const;
  Gf2mElement div(Gf2mElement x, Gf2mElement y) const { return mul(x, inv(y)); }
  /// x^e with x^0 = 1 (including 0^0).
  Gf2mElement pow(Gf2mElement x, std::uint64_t e) const;
  /// x^(2^times).
  Gf2mElement frobenius(Gf2mElement x, unsigned times) const;

  /// Absolute trace to F_2, returned as 0 or 1.
  unsigned trace(Gf2mElement x) const;
  /// Tr(x) = x + x^2 + ... + x^(2^(m-1)) evaluated literally.
  unsigned trace_by_squaring(Gf2mElement x) const;

  /// All 2^m elements in increasing bit-pattern order.
  std::vector<Gf2mElement> elements() const;

  /// Multiplication without lookup tables; the reference path for m <= 16.
  Gf2mElement mul_clmul(Gf2mElement x, Gf2mElement y) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // length q, log[0] unused
  };

  void build_tables();

  unsigned m_ = 0;
  std::uint32_t reduction_ = 0;
  std::uint32_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

inline bool operator==(const BinaryField& a, const BinaryField& b) {
  return a.degree() == b.degree() && a.reduction() == b.reduction();
}

/// Exhaustive factor search: true iff no polynomial of degree 1..deg/2 divides poly.
bool is_irreducible(std::uint64_t poly);

/// Lexicographically (numerically) smallest irreducible polynomial of degree m.
std::uint32_t default_reduction(unsigned m);

/// The built-in table indexed by degree; entry 0 is unused.
std::span<const std::uint32_t> builtin_reductions();

/// make_field: built-in modulus when reduction is empty.
BinaryField make_field(unsigned m, std::optional<std::uint32_t> reduction = std::nullopt);

/// Lowercase hex of the bit pattern, no prefix.
std::string to_hex(Gf2mElement x);
/// Accepts an optional 0x prefix; throws ParseError or OutOfRange.
Gf2mElement parse_element(const BinaryField& field, std::string_view text);

}  // namespace permpoly
