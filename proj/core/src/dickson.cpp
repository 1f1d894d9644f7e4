#include "permpoly/dickson.hpp"

#include <string>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

constexpr unsigned kExhaustivePreimageMaxDegree = 6;

}  // namespace

std::string_view dickson_method_name(DicksonMethod method) {
  switch (method) {
    case DicksonMethod::Recurrence:
      return "recurrence";
    case DicksonMethod::ClosedForm:
      return "closed";
    case DicksonMethod::Functional:
      return "functional";
  }
  return "?";
}

std::optional<DicksonMethod> parse_dickson_method(std::string_view name) {
  if (name == "recurrence") return DicksonMethod::Recurrence;
  if (name == "closed" || name == "closed-form") return DicksonMethod::ClosedForm;
  if (name == "functional") return DicksonMethod::Functional;
  return std::nullopt;
}

Gf2mElement dickson_recurrence(const BinaryField& field, std::uint64_t n, Gf2mElement x, Gf2mElement a) {
  if (n == 0) return BinaryField::zero();
  Gf2mElement prev = BinaryField::zero();
  Gf2mElement cur = x;
  for (std::uint64_t i = 1; i < n; ++i) {
    const Gf2mElement next = field.mul(x, cur) + field.mul(a, prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

SparsePolyF2 dickson_closed_form(std::uint64_t n) {
  if (n == 0) throw OutOfRange("closed-form Dickson polynomial needs n >= 1");
  std::vector<Exponent> odd_terms;
  const Exponent big_n(n);
  // binom tracks C(n-j, j) and steps by C(N-1, J+1) = C(N, J) (N-J)(N-J-1) / (N (J+1)).
  Exponent binom(1);
  for (std::uint64_t j = 0; 2 * j <= n; ++j) {
    const std::uint64_t top = n - j;
    Exponent numerator = big_n * binom;
    Exponent coefficient;
    Exponent remainder;
    boost::multiprecision::divide_qr(numerator, Exponent(top), coefficient, remainder);
    if (remainder != 0) throw Error("Dickson coefficient is not an integer");
    if (boost::multiprecision::bit_test(coefficient, 0)) odd_terms.emplace_back(n - 2 * j);
    if (2 * (j + 1) <= n) {
      binom *= Exponent(top - j) * (top - j - 1);
      binom /= Exponent(top) * (j + 1);
    }
  }
  return SparsePolyF2::from_exponents(std::move(odd_terms));
}

ExtElement dickson_preimage(const ExtensionField& ext, Gf2mElement x, PreimageSearch search) {
  const auto& base = ext.base();
  if (search == PreimageSearch::Auto) {
    search = base.degree() <= kExhaustivePreimageMaxDegree ? PreimageSearch::Exhaustive : PreimageSearch::Algebraic;
  }
  const ExtElement xe = ExtensionField::embed(x);
  if (search == PreimageSearch::Exhaustive) {
    for (std::uint64_t i = 1; i < ext.order(); ++i) {
      const ExtElement z = ext.from_index(i);
      if ((ext.square(z) + ext.mul(xe, z) + ExtensionField::one()).is_zero()) return z;
    }
    throw Error("no preimage of " + to_hex(x) + " under z + 1/z");
  }
  if (x.is_zero()) return ExtensionField::one();
  const ExtElement c = ExtensionField::embed(base.inv(base.square(x)));
  const auto s = ext.solve_artin_schreier(c);
  if (!s) throw Error("no preimage of " + to_hex(x) + " under z + 1/z");
  return ext.mul(xe, *s);
}

Gf2mElement dickson_functional(const ExtensionField& ext, std::uint64_t n, Gf2mElement x, PreimageSearch search) {
  const ExtElement z = dickson_preimage(ext, x, search);
  const ExtElement zn = ext.pow(z, n);
  const ExtElement value = zn + ext.inv(zn);
  if (!ExtensionField::in_base(value)) throw Error("z^n + z^-n left the base field");
  return value.a;
}

Gf2mElement eval_dickson(const ExtensionField& ext, std::uint64_t n, Gf2mElement x, DicksonMethod method) {
  switch (method) {
    case DicksonMethod::Recurrence:
      return dickson_recurrence(ext.base(), n, x);
    case DicksonMethod::ClosedForm:
      return evaluate(ext.base(), dickson_closed_form(n), x);
    case DicksonMethod::Functional:
      return dickson_functional(ext, n, x);
  }
  return BinaryField::zero();
}

}  // namespace permpoly
