#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permpoly/field.hpp"

namespace permpoly {

/// Unbounded nonnegative exponent.
using Exponent = boost::multiprecision::cpp_int;

/// A polynomial over F_2 stored as the sorted set of exponents with coefficient 1.
class SparsePolyF2 {
 public:
  SparsePolyF2() = default;
  SparsePolyF2(std::initializer_list<std::uint64_t> exponents);

  /// Collects exponents with F_2 parity: a repeated exponent cancels in pairs.
  static SparsePolyF2 from_exponents(std::vector<Exponent> exponents);
  static SparsePolyF2 monomial(Exponent e) { return from_exponents({std::move(e)}); }

  const std::vector<Exponent>& exponents() const { return exps_; }
  std::size_t term_count() const { return exps_.size(); }
  bool is_zero() const { return exps_.empty(); }
  /// nullopt stands for the degree of the zero polynomial.
  std::optional<Exponent> degree() const;
  bool has_term(const Exponent& e) const;

  friend bool operator==(const SparsePolyF2&, const SparsePolyF2&) = default;

 private:
  std::vector<Exponent> exps_;  // strictly increasing
};

SparsePolyF2 sp_add(const SparsePolyF2& a, const SparsePolyF2& b);
SparsePolyF2 sp_mul(const SparsePolyF2& a, const SparsePolyF2& b);
/// a^(2^k): every exponent times 2^k.
SparsePolyF2 sp_pow2k(const SparsePolyF2& a, unsigned k);
/// a / X^2; throws NotDivisible when a has a term of degree 0 or 1.
SparsePolyF2 sp_div_x2(const SparsePolyF2& a);
/// Reduction modulo X^(2^m) - X: e >= 1 maps to ((e-1) mod (2^m-1)) + 1.
SparsePolyF2 sp_reduce_mod_field(const SparsePolyF2& a, unsigned m);

inline SparsePolyF2 operator+(const SparsePolyF2& a, const SparsePolyF2& b) { return sp_add(a, b); }
inline SparsePolyF2 operator*(const SparsePolyF2& a, const SparsePolyF2& b) { return sp_mul(a, b); }

/// X + X^2 + ... + X^(2^(m-1)).
SparsePolyF2 trace_polynomial(unsigned m);

/// Evaluates at x in the given field; exponents of any size are accepted.
Gf2mElement evaluate(const BinaryField& field, const SparsePolyF2& p, Gf2mElement x);

/// Ascending comma-separated exponents, "0" for the zero polynomial.
std::string to_string(const SparsePolyF2& p);

}  // namespace permpoly
