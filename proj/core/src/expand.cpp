#include "permpoly/expand.hpp"

namespace permpoly {

SparsePolyF2 f_alpha_polynomial(const ParamSet& p) {
  std::vector<Exponent> terms;
  for (unsigned i = 0; i < p.r; ++i) terms.push_back(Exponent(1) << (p.k * i));
  SparsePolyF2 f = SparsePolyF2::from_exponents(std::move(terms));
  if (p.alpha != 0) f = f + trace_polynomial(p.m);
  return f;
}

SparsePolyF2 expand_h(const ParamSet& p) {
  const SparsePolyF2 f = f_alpha_polynomial(p);
  SparsePolyF2 h = sp_div_x2(sp_pow2k(f, p.k) * f);
  if (p.gamma != 0) h = h + trace_polynomial(p.m);
  return h;
}

}  // namespace permpoly
