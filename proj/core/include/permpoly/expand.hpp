#pragma once

#include "permpoly/params.hpp"
#include "permpoly/sparse_poly.hpp"

namespace permpoly {

/// alpha*Tr(X) + sum_{i<r} X^(sigma^i) as a polynomial over F_2.
SparsePolyF2 f_alpha_polynomial(const ParamSet& p);

/// gamma*Tr(X) + f_alpha(X)^(sigma+1) / X^2, unreduced. Propagates NotDivisible.
SparsePolyF2 expand_h(const ParamSet& p);

}  // namespace permpoly
