#pragma once

#include <cstdint>
#include <string_view>
#include <optional>

#include "permpoly/extension.hpp"
#include "permpoly/field.hpp"
#include "permpoly/sparse_poly.hpp"

namespace permpoly {

enum class DicksonMethod { Recurrence, ClosedForm, Functional };

std::string_view dickson_method_name(DicksonMethod method);
std::optional<DicksonMethod> parse_dickson_method(std::string_view name);

/// D_n(x, a) via D_0 = 0, D_1 = x, D_n = x*D_{n-1} + a*D_{n-2} (characteristic 2).
Gf2mElement dickson_recurrence(const BinaryField& field, std::uint64_t n, Gf2mElement x,
                               Gf2mElement a = BinaryField::one());

/// D_n(X, 1) as a polynomial over F_2: the coefficient of X^(n-2j) is
/// n/(n-j) * C(n-j, j) reduced mod 2, each computed as an exact integer.
/// Throws OutOfRange for n = 0.
SparsePolyF2 dickson_closed_form(std::uint64_t n);

enum class PreimageSearch {
  Auto,        // exhaustive for m <= 6, algebraic otherwise
  Exhaustive,  // smallest packed index z with z^2 + xz + 1 = 0
  Algebraic,   // z = x*s with s^2 + s = 1/x^2
};

/// A root z in GF(q^2) of z + 1/z = x; the other root is 1/z.
ExtElement dickson_preimage(const ExtensionField& ext, Gf2mElement x, PreimageSearch search = PreimageSearch::Auto);

/// z^n + z^(-n) for z + 1/z = x.
Gf2mElement dickson_functional(const ExtensionField& ext, std::uint64_t n, Gf2mElement x,
                               PreimageSearch search = PreimageSearch::Auto);

/// D_n(x, 1) by the chosen method. The closed form rebuilds its coefficient
/// set on every call; sweeps should call dickson_closed_form once per n.
Gf2mElement eval_dickson(const ExtensionField& ext, std::uint64_t n, Gf2mElement x, DicksonMethod method);

}  // namespace permpoly
