#include "permpoly/sparse_poly.hpp"

#include <algorithm>

#include "permpoly/errors.hpp"

namespace permpoly {

SparsePolyF2::SparsePolyF2(std::initializer_list<std::uint64_t> exponents) {
  std::vector<Exponent> v;
  v.reserve(exponents.size());
  for (auto e : exponents) v.emplace_back(e);
  *this = from_exponents(std::move(v));
}

SparsePolyF2 SparsePolyF2::from_exponents(std::vector<Exponent> exponents) {
  std::sort(exponents.begin(), exponents.end());
  SparsePolyF2 out;
  out.exps_.reserve(exponents.size());
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    if ((j - i) % 2 == 1) out.exps_.push_back(std::move(exponents[i]));
    i = j;
  }
  return out;
}

std::optional<Exponent> SparsePolyF2::degree() const {
  if (exps_.empty()) return std::nullopt;
  return exps_.back();
}

bool SparsePolyF2::has_term(const Exponent& e) const { return std::binary_search(exps_.begin(), exps_.end(), e); }

SparsePolyF2 sp_add(const SparsePolyF2& a, const SparsePolyF2& b) {
  std::vector<Exponent> out;
  std::set_symmetric_difference(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                b.exponents().end(), std::back_inserter(out));
  return SparsePolyF2::from_exponents(std::move(out));
}

SparsePolyF2 sp_mul(const SparsePolyF2& a, const SparsePolyF2& b) {
  std::vector<Exponent> out;
  out.reserve(a.term_count() * b.term_count());
  for (const auto& x : a.exponents()) {
    for (const auto& y : b.exponents()) out.push_back(x + y);
  }
  return SparsePolyF2::from_exponents(std::move(out));
}

SparsePolyF2 sp_pow2k(const SparsePolyF2& a, unsigned k) {
  std::vector<Exponent> out(a.exponents().begin(), a.exponents().end());
  for (auto& e : out) e <<= k;
  return SparsePolyF2::from_exponents(std::move(out));
}

SparsePolyF2 sp_div_x2(const SparsePolyF2& a) {
  std::vector<Exponent> out;
  out.reserve(a.term_count());
  for (const auto& e : a.exponents()) {
    if (e < 2) throw NotDivisible("term X^" + e.str() + " is not divisible by X^2");
    out.push_back(e - 2);
  }
  return SparsePolyF2::from_exponents(std::move(out));
}

SparsePolyF2 sp_reduce_mod_field(const SparsePolyF2& a, unsigned m) {
  const Exponent period = (Exponent(1) << m) - 1;
  std::vector<Exponent> out;
  out.reserve(a.term_count());
  for (const auto& e : a.exponents()) {
    out.push_back(e == 0 ? Exponent(0) : Exponent((e - 1) % period + 1));
  }
  return SparsePolyF2::from_exponents(std::move(out));
}

SparsePolyF2 trace_polynomial(unsigned m) {
  std::vector<Exponent> out;
  for (unsigned i = 0; i < m; ++i) out.push_back(Exponent(1) << i);
  return SparsePolyF2::from_exponents(std::move(out));
}

Gf2mElement evaluate(const BinaryField& field, const SparsePolyF2& p, Gf2mElement x) {
  const Exponent group(field.order() - 1);
  Gf2mElement acc = BinaryField::zero();
  for (const auto& e : p.exponents()) {
    if (e == 0) {
      acc += BinaryField::one();
    } else if (!x.is_zero()) {
      acc += field.pow(x, static_cast<std::uint64_t>(e % group));
    }
  }
  return acc;
}

std::string to_string(const SparsePolyF2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& e : p.exponents()) {
    if (!out.empty()) out += ',';
    out += e.str();
  }
  return out;
}

}  // namespace permpoly
