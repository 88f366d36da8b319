#pragma once

#include "qtsym/symfunc.hpp"

namespace qtsym {

// p_k[A]: adams(k) on the coefficients of A and p_j -> p_{jk}. Returned in
// the p basis.
SymFunc power_sum_plethysm(int k, const SymFunc& alphabet);

// f[A] with A any symmetric function; pure-coefficient alphabets (only the
// empty partition) give scalar results as multiples of 1. Result in the p basis.
SymFunc plethysm(const SymFunc& f, const SymFunc& alphabet);

// f[c] for a scalar alphabet c, with p_k[c] = adams(c, k). Finite-variable
// evaluation f(x1,...,xk) is eval_scalar(f, x1+...+xk).
ParamRat eval_scalar(const SymFunc& f, const ParamRat& c);

// f* = f[x/(1-q)], in the p basis.
SymFunc star(const SymFunc& f);

// s_mu[1-u]/(1-u), divided exactly.
ParamRat hook_plethysm_1_minus_u(const Partition& mu);

// The alphabet c*x, i.e. c*p_1.
SymFunc scaled_alphabet(const ParamRat& c);

}  // namespace qtsym
