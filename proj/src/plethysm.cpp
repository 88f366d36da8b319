#include "qtsym/plethysm.hpp"

#include <map>

namespace qtsym {

SymFunc power_sum_plethysm(int k, const SymFunc& alphabet) {
  SymFunc a = convert(alphabet, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [mu, c] : a.terms()) {
    std::vector<int> parts = mu.parts();
    for (int& x : parts) x *= k;
    out.add_term(Partition(parts), adams(c, k));
  }
  return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& alphabet) {
  SymFunc fp = convert(f, Basis::p);
  std::map<int, SymFunc> pk;
  auto power = [&](int k) -> const SymFunc& {
    auto it = pk.find(k);
    if (it == pk.end()) it = pk.emplace(k, power_sum_plethysm(k, alphabet)).first;
    return it->second;
  };
  SymFunc out(Basis::p);
  for (const auto& [mu, c] : fp.terms()) {
    SymFunc term = SymFunc::scalar(c, Basis::p);
    for (int k : mu.parts()) term = term * power(k);
    out += term;
  }
  return out;
}

ParamRat eval_scalar(const SymFunc& f, const ParamRat& c) {
  SymFunc fp = convert(f, Basis::p);
  std::map<int, ParamRat> pk;
  ParamRat out;
  for (const auto& [mu, coeff] : fp.terms()) {
    ParamRat term = coeff;
    for (int k : mu.parts()) {
      auto it = pk.find(k);
      if (it == pk.end()) it = pk.emplace(k, adams(c, k)).first;
      term *= it->second;
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SymFunc scaled_alphabet(const ParamRat& c) { return SymFunc(Basis::p, Partition{1}, c); }

SymFunc star(const SymFunc& f) { return plethysm(f, scaled_alphabet(1 / (1 - ParamRat::q()))); }

ParamRat hook_plethysm_1_minus_u(const Partition& mu) {
  ParamRat one_minus_u = 1 - ParamRat::u();
  return divide_exact(eval_scalar(s(mu), one_minus_u), one_minus_u);
}

}  // namespace qtsym
