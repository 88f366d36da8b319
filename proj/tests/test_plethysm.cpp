#include <map>
#include <random>

#include "doctest.h"
#include "qtsym/plethysm.hpp"

using namespace qtsym;

namespace {

const ParamRat q = ParamRat::q();
const ParamRat t = ParamRat::t();
const ParamRat u = ParamRat::u();

SymFunc h1(int k) { return h(Partition{k}); }
SymFunc e1(int k) { return e(Partition{k}); }
SymFunc x() { return p(Partition{1}); }

// Two independent alphabets x and y: elements of Lambda(x) (x) Lambda(y)
// stored in the basis p_a(x) p_b(y).
using Tensor = std::map<std::pair<Partition, Partition>, ParamRat>;

void add(Tensor& t, const Partition& a, const Partition& b, const ParamRat& c) {
  if (c.is_zero()) return;
  ParamRat& slot = t[{a, b}];
  slot += c;
  if (slot.is_zero()) t.erase({a, b});
}

Tensor tensor(const SymFunc& fx, const SymFunc& gy) {
  Tensor out;
  SymFunc a = convert(fx, Basis::p), b = convert(gy, Basis::p);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) add(out, la, lb, ca * cb);
  return out;
}

Tensor tmul(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto merge = [](const Partition& l, const Partition& r) {
        std::vector<int> v = l.parts();
        v.insert(v.end(), r.parts().begin(), r.parts().end());
        std::sort(v.rbegin(), v.rend());
        return Partition(v);
      };
      add(out, merge(ka.first, kb.first), merge(ka.second, kb.second), ca * cb);
    }
  return out;
}

// f[x + sign*y]: p_k -> p_k(x) + sign p_k(y).
Tensor plethysm_sum(const SymFunc& f, int sign) {
  Tensor out;
  SymFunc fp = convert(f, Basis::p);
  for (const auto& [mu, c] : fp.terms()) {
    Tensor term{{{Partition(), Partition()}, c}};
    for (int k : mu.parts()) {
      Tensor pk;
      add(pk, Partition{k}, Partition(), 1);
      add(pk, Partition(), Partition{k}, ParamRat(sign));
      term = tmul(term, pk);
    }
    for (const auto& [key, v] : term) add(out, key.first, key.second, v);
  }
  return out;
}

void tadd(Tensor& into, const Tensor& t) {
  for (const auto& [key, v] : t) add(into, key.first, key.second, v);
}

SymFunc random_p(std::mt19937& rng, int max_degree, int terms) {
  SymFunc f(Basis::p);
  for (int i = 0; i < terms; ++i) {
    int d = 1 + rng() % max_degree;
    auto ps = enumerate_partitions(d);
    f.add_term(ps[rng() % ps.size()], ParamRat(static_cast<long>(rng() % 5) - 2) + (rng() % 2 ? q : ParamRat(0)));
  }
  return f;
}

}  // namespace

TEST_CASE("basic rules") {
  CHECK(plethysm(p(Partition{2}), p(Partition{3})).terms() == p(Partition{6}).terms());
  SymFunc f = s(Partition{2, 1}) + q * s(Partition{3});
  CHECK(plethysm(f, x()) == f);
  SymFunc g = h(Partition{2}) - t * e(Partition{2, 1});
  SymFunc a = s(Partition{1, 1}) + q * x();
  CHECK(plethysm(f * g, a) == plethysm(f, a) * plethysm(g, a));
  CHECK(eval_scalar(SymFunc::scalar(5), q) == 5);
  CHECK(eval_scalar(p(Partition{2}), q + t) == q * q + t * t);
}

TEST_CASE("negated alphabet") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(plethysm(s(mu), -x()) == ParamRat(n % 2 ? -1 : 1) * s(mu.conjugate()));
  CHECK(eval_scalar(h1(1), ParamRat(-1)) == -1);
  for (int n = 2; n <= 6; ++n) CHECK(eval_scalar(h1(n), ParamRat(-1)) == 0);
  for (int n = 1; n <= 6; ++n) CHECK(eval_scalar(e1(n), ParamRat(-1)) == (n % 2 ? -1 : 1));
  for (int n = 3; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      bool column = mu.length() == n;
      ParamRat v = eval_scalar(s(mu), ParamRat(-1));
      if (column) CHECK(v == (n % 2 ? -1 : 1));
      else CHECK(v == 0);
    }
}

TEST_CASE("difference and sum of alphabets") {
  for (int n = 0; n <= 4; ++n) {
    Tensor rhs;
    for (int k = 0; k <= n; ++k) {
      Tensor term = tensor(h1(k), e1(n - k));
      for (auto& [key, v] : term) v *= ParamRat((n - k) % 2 ? -1 : 1);
      tadd(rhs, term);
    }
    CHECK(plethysm_sum(h1(n), -1) == rhs);
    Tensor sum_rhs;
    for (int k = 0; k <= n; ++k) tadd(sum_rhs, tensor(h1(k), h1(n - k)));
    CHECK(plethysm_sum(h1(n), 1) == sum_rhs);
    for (const auto& mu : enumerate_partitions(n)) {
      Tensor schur_rhs;
      for (const auto& nu : subpartitions(mu)) tadd(schur_rhs, tensor(skew_schur(SkewShape(mu, nu)), s(nu)));
      CHECK(plethysm_sum(s(mu), 1) == schur_rhs);
    }
  }
}

TEST_CASE("integer and q-integer evaluations") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) {
      CHECK(eval_scalar(e1(k), ParamRat(n)) == ParamRat(binomial(n, k)));
      CHECK(eval_scalar(h1(k), ParamRat(n)) == (k == 0 ? ParamRat(1) : ParamRat(binomial(n + k - 1, k))));
    }
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (int k = 1; k <= 4; ++k) {
        BigRational prod = 1;
        ParamRat qprod = q.pow(mu.n());
        for (const auto& cd : cell_data(mu)) {
          int content = cd.cell.x - cd.cell.y;
          prod *= BigRational(k + content) / cd.hook;
          qprod *= (1 - q.pow(k + content)) / (1 - q.pow(cd.hook));
        }
        ParamRat v = eval_scalar(s(mu), ParamRat(k));
        CHECK(v == ParamRat(prod));
        CHECK(v == ParamRat(static_cast<long>(ssyt_bounded(SkewShape(mu), k).size())));
        CHECK(eval_scalar(s(mu), (1 - q.pow(k)) / (1 - q)) == qprod);
      }
}

TEST_CASE("star specializations") {
  for (int n = 1; n <= 6; ++n) {
    ParamRat expect = 1;
    for (int k = 1; k <= n; ++k) expect /= 1 - q.pow(k);
    ParamRat hs = eval_scalar(star(h1(n)), ParamRat(1));
    CHECK(hs == expect);
    CHECK(1 / hs == (1 - q).pow(n) * q_factorial(n));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      ParamRat expect = q.pow(mu.n());
      for (const auto& cd : cell_data(mu)) expect /= 1 - q.pow(cd.hook);
      CHECK(eval_scalar(star(s(mu)), ParamRat(1)) == expect);
    }
}

TEST_CASE("hook law at 1-u") {
  CHECK(hook_plethysm_1_minus_u(Partition{2, 2}) == 0);
  CHECK(eval_scalar(s(Partition{3, 1}), 1 - u) == -u * (1 - u));
  CHECK(eval_scalar(s(Partition{4}), 1 - u) == 1 - u);
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      bool hook = mu.length() <= 1 || mu[1] <= 1;
      int k = mu.length() - 1;
      CHECK(hook_plethysm_1_minus_u(mu) == (hook ? (-u).pow(k) : ParamRat(0)));
    }
}

TEST_CASE("(q,t)-integers from e_n[(1-q)(1-t)]") {
  ParamRat M = (1 - q) * (1 - t);
  for (int n = 1; n <= 6; ++n)
    CHECK(ParamRat(n % 2 ? 1 : -1) / M * eval_scalar(e1(n), M) == qt_integer(n));
}

TEST_CASE("combinatorial Hall-Littlewood H_n") {
  for (int n = 1; n <= 5; ++n) {
    SymFunc hn = convert(star(h1(n)), Basis::s) * (1 / eval_scalar(star(h1(n)), ParamRat(1)));
    for (const auto& mu : enumerate_partitions(n)) {
      ParamRat c = hn.coefficient(mu);
      CHECK(c == kostka_foulkes(mu.conjugate(), Partition(std::vector<int>(n, 1))));
      ParamRat reversed = q.pow(n * (n - 1) / 2) *
                          substitute(kostka_foulkes(mu, Partition(std::vector<int>(n, 1))), {{Param::q, 1 / q}});
      CHECK(c == reversed);
    }
    if (n == 3) CHECK(hn.to_string() == "s[3]+(q+q^2)*s[2,1]+(q^3)*s[1,1,1]");
  }
  auto H = [](int n) {
    return convert(star(h1(n)), Basis::s) * (1 / eval_scalar(star(h1(n)), ParamRat(1)));
  };
  CHECK(H(1).terms() == s(Partition{1}).terms());
  CHECK(H(2).terms() == (s(Partition{2}) + q * s(Partition{1, 1})).terms());
  CHECK(H(3).terms() == (s(Partition{3}) + (q * q + q) * s(Partition{2, 1}) + q.pow(3) * s(Partition{1, 1, 1})).terms());
  CHECK(H(4).terms() == (s(Partition{4}) + (q.pow(3) + q.pow(2) + q) * s(Partition{3, 1}) +
                         (q.pow(4) + q.pow(2)) * s(Partition{2, 2}) +
                         (q.pow(5) + q.pow(4) + q.pow(3)) * s(Partition{2, 1, 1}) + q.pow(6) * s(Partition{1, 1, 1, 1}))
                            .terms());
  // The printed H_5 repeats its s_32 line; it is counted once here.
  CHECK(H(5).terms() ==
        (s(Partition{5}) + (q.pow(4) + q.pow(3) + q.pow(2) + q) * s(Partition{4, 1}) +
         (q.pow(6) + q.pow(5) + q.pow(4) + q.pow(3) + q.pow(2)) * s(Partition{3, 2}) +
         (q.pow(7) + q.pow(6) + 2 * q.pow(5) + q.pow(4) + q.pow(3)) * s(Partition{3, 1, 1}) +
         (q.pow(8) + q.pow(7) + q.pow(6) + q.pow(5) + q.pow(4)) * s(Partition{2, 2, 1}) +
         (q.pow(9) + q.pow(8) + q.pow(7) + q.pow(6)) * s(Partition{2, 1, 1, 1}) + q.pow(10) * s(Partition{1, 1, 1, 1, 1}))
            .terms());
}

TEST_CASE("associativity and homogeneity") {
  std::mt19937 rng(17);
  for (int i = 0; i < 6; ++i) {
    SymFunc f = random_p(rng, 3, 2), g = random_p(rng, 2, 2), k = random_p(rng, 2, 2);
    CHECK(plethysm(f, plethysm(g, k)).terms() == plethysm(plethysm(f, g), k).terms());
  }
  for (int d = 1; d <= 5; ++d) {
    SymFunc f = random_p(rng, d, 3).homogeneous_part(d);
    SymFunc a = s(Partition{2}) + q * x();
    CHECK(plethysm(f, u * a).terms() == (u.pow(d) * plethysm(f, a)).terms());
  }
}

TEST_CASE("plethysm of complete functions") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      SymFunc ab = plethysm(h1(a), h1(b)), ba = plethysm(h1(b), h1(a));
      CHECK(eval_scalar(ab, q + t) == eval_scalar(ba, q + t));
      CHECK(eval_scalar(ab, 1 + q) == q_binomial(a + b, b));
    }
  for (int n = 1; n <= 4; ++n) {
    SymFunc expect(Basis::s);
    for (int k = 0; 2 * k <= n; ++k) expect.add_term(Partition{2 * n - 2 * k, 2 * k}, 1);
    CHECK(convert(plethysm(h1(2), h1(n)), Basis::s).terms() == expect.terms());
  }
}

TEST_CASE("dual basis of the pi basis") {
  // ((qt-1)/qt)^l(mu) f_mu[x qt/(qt-1)] is Hall-dual to pi_mu.
  ParamRat qt = q * t;
  for (int n = 1; n <= 4; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& mu : ps) {
      SymFunc dual = plethysm(SymFunc(Basis::f, mu), scaled_alphabet(qt / (qt - 1))) * ((qt - 1) / qt).pow(mu.length());
      for (const auto& lam : ps) CHECK(hall(SymFunc(Basis::pi, lam), dual) == (lam == mu ? 1 : 0));
      CHECK(expand_in_pi(s(mu)).coefficient(mu.conjugate()) == hall(s(mu), plethysm(SymFunc(Basis::f, mu.conjugate()), scaled_alphabet(qt / (qt - 1))) * ((qt - 1) / qt).pow(mu.conjugate().length())));
    }
  }
}
