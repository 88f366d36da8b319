#include "qtsym/scalars.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace qtsym {

namespace mono {

uint64_t pack(const std::array<int, kNumParams>& e) {
  uint64_t key = 0;
  int total = 0;
  for (int v = 0; v < kNumParams; ++v) {
    if (e[v] < 0) throw ArithmeticError("negative exponent in polynomial");
    total += e[v];
    key = (key << kBits) | static_cast<uint64_t>(e[v]);
  }
  if (total > static_cast<int>(kMask)) throw ArithmeticError("exponent overflow");
  return key | (static_cast<uint64_t>(total) << (kBits * kNumParams));
}

uint64_t mul(uint64_t a, uint64_t b) {
  if (total(a) + total(b) > static_cast<int>(kMask)) throw ArithmeticError("exponent overflow");
  return a + b;
}

}  // namespace mono

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

Poly::Poly(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Poly Poly::monomial(const BigInt& c, const std::array<int, kNumParams>& e) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(mono::pack(e), c);
  return p;
}

Poly Poly::var(Param p, int power) {
  std::array<int, kNumParams> e{};
  e[static_cast<int>(p)] = power;
  return monomial(BigInt(1), e);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt Poly::constant_value() const { return terms_.empty() ? BigInt(0) : terms_[0].second; }

int Poly::degree(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono::exp(t.first, var));
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : mono::total(terms_.back().first); }

unsigned Poly::var_mask() const {
  unsigned m = 0;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumParams; ++v)
      if (mono::exp(t.first, v) > 0) m |= 1u << v;
  return m;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::scaled(const BigInt& c) const {
  Poly p;
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::divided_by_integer(const BigInt& c) const {
  Poly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return p;
}

Poly Poly::negated() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::adams(int k) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<int, kNumParams> e{};
    for (int v = 0; v < kNumParams; ++v) e[v] = mono::exp(t.first, v) * k;
    out.emplace_back(mono::pack(e), t.second);
  }
  return from_terms(std::move(out));
}

Poly Poly::evaluate(int var, const BigInt& x) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<BigInt> powers(1, BigInt(1));
  for (const auto& t : terms_) {
    int e = mono::exp(t.first, var);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * x);
    std::array<int, kNumParams> ex{};
    for (int v = 0; v < kNumParams; ++v) ex[v] = v == var ? 0 : mono::exp(t.first, v);
    out.emplace_back(mono::pack(ex), t.second * powers[e]);
  }
  return from_terms(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      BigInt c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.negated(); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& big = a.terms_.size() <= b.terms_.size() ? b : a;
  Poly r;
  if (small.terms_.size() == 1) {
    const auto& [k, c] = small.terms_[0];
    r.terms_.reserve(big.terms_.size());
    for (const auto& t : big.terms_) r.terms_.emplace_back(mono::mul(k, t.first), c * t.second);
    return r;
  }
  std::unordered_map<uint64_t, size_t> index;
  index.reserve(small.terms_.size() * big.terms_.size() / 2 + 8);
  std::vector<Poly::Term> acc;
  BigInt prod;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      uint64_t k = mono::mul(s.first, t.first);
      mpz_mul(prod.get_mpz_t(), s.second.get_mpz_t(), t.second.get_mpz_t());
      auto [it, inserted] = index.try_emplace(k, acc.size());
      if (inserted)
        acc.emplace_back(k, prod);
      else
        acc[it->second].second += prod;
    }
  }
  std::sort(acc.begin(), acc.end(), [](const Poly::Term& x, const Poly::Term& y) { return x.first < y.first; });
  for (auto& t : acc)
    if (t.second != 0) r.terms_.push_back(std::move(t));
  return r;
}

bool Poly::divide(const Poly& a, const Poly& b, Poly* quotient) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) {
    if (quotient) *quotient = Poly();
    return true;
  }
  if (b.is_constant()) {
    const BigInt& c = b.terms_[0].second;
    for (const auto& t : a.terms_)
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return false;
    if (quotient) {
      Poly q = a;
      for (auto& t : q.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
      *quotient = std::move(q);
    }
    return true;
  }
  if (!mono::divides(b.terms_.front().first, a.terms_.front().first) ||
      !mono::divides(b.terms_.back().first, a.terms_.back().first))
    return false;
  for (int v = 0; v < kNumParams; ++v)
    if (b.degree(v) > a.degree(v)) return false;
  if (b.is_monomial()) {
    const auto& [kb, cb] = b.terms_[0];
    Poly q;
    q.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
      if (!mono::divides(kb, t.first) || !mpz_divisible_p(t.second.get_mpz_t(), cb.get_mpz_t())) return false;
      BigInt c;
      mpz_divexact(c.get_mpz_t(), t.second.get_mpz_t(), cb.get_mpz_t());
      q.terms_.emplace_back(mono::div(t.first, kb), std::move(c));
    }
    if (quotient) *quotient = std::move(q);
    return true;
  }
  std::map<uint64_t, BigInt> rem;
  for (const auto& t : a.terms_) rem.emplace_hint(rem.end(), t.first, t.second);
  const auto& [kb, cb] = b.terms_.back();
  std::vector<Term> q;
  BigInt c, prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!mono::divides(kb, top->first) || !mpz_divisible_p(top->second.get_mpz_t(), cb.get_mpz_t()))
      return false;
    mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), cb.get_mpz_t());
    uint64_t k = mono::div(top->first, kb);
    rem.erase(top);
    for (size_t i = 0; i + 1 < b.terms_.size(); ++i) {
      uint64_t key = b.terms_[i].first + k;
      mpz_mul(prod.get_mpz_t(), c.get_mpz_t(), b.terms_[i].second.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(key, -prod);
      if (!inserted) {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
    q.emplace_back(k, c);
  }
  if (quotient) *quotient = from_terms(std::move(q));
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Ascending degree; inside a degree the larger q exponent comes first.
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int da = mono::total(a->first), db = mono::total(b->first);
    if (da != db) return da < db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    BigInt c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string m;
    for (int v = 0; v < kNumParams; ++v) {
      int e = mono::exp(t->first, v);
      if (e == 0) continue;
      if (!m.empty()) m += "*";
      m += kParamNames[v];
      if (e > 1) m += "^" + std::to_string(e);
    }
    if (m.empty())
      out += c.get_str();
    else if (c == 1)
      out += m;
    else
      out += c.get_str() + "*" + m;
  }
  return out;
}

size_t Poly::hash() const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    h ^= std::hash<uint64_t>()(t.first) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<long>()(mpz_get_si(t.second.get_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- gcd

namespace {

BigInt max_norm(const Poly& p) {
  BigInt m = 0;
  for (const auto& t : p.terms()) {
    BigInt a = abs(t.second);
    if (a > m) m = a;
  }
  return m;
}

Poly normalize_sign(const Poly& p) {
  if (!p.is_zero() && p.leading().second < 0) return p.negated();
  return p;
}

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  Poly r = c == 1 ? p : p.divided_by_integer(c);
  return normalize_sign(r);
}

int main_var(unsigned mask) {
  for (int v = kNumParams - 1; v >= 0; --v)
    if (mask & (1u << v)) return v;
  return -1;
}

Poly monomial_gcd(const Poly& mono_poly, const Poly& other) {
  std::array<int, kNumParams> e{};
  uint64_t k = mono_poly.terms()[0].first;
  for (int v = 0; v < kNumParams; ++v) e[v] = mono::exp(k, v);
  for (const auto& t : other.terms())
    for (int v = 0; v < kNumParams; ++v) e[v] = std::min(e[v], mono::exp(t.first, v));
  BigInt g = gcd(mono_poly.content(), other.content());
  return Poly::monomial(g, e);
}

// Inverse of evaluating `var` at x: balanced x-adic digits of each coefficient.
Poly interpolate(Poly h, const BigInt& x, int var) {
  std::vector<Poly::Term> out;
  BigInt half = x / 2;
  int power = 0;
  while (!h.is_zero()) {
    std::vector<Poly::Term> digit;
    for (const auto& t : h.terms()) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), t.second.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) digit.emplace_back(t.first, r);
    }
    Poly g = Poly::from_terms(digit);
    for (const auto& t : g.terms()) {
      std::array<int, kNumParams> e{};
      for (int v = 0; v < kNumParams; ++v) e[v] = mono::exp(t.first, v);
      e[var] = power;
      out.emplace_back(mono::pack(e), t.second);
    }
    h = (h - g).divided_by_integer(x);
    ++power;
  }
  return normalize_sign(Poly::from_terms(std::move(out)));
}

std::vector<Poly> coefficients_in(const Poly& f, int var) {
  std::vector<std::vector<Poly::Term>> parts(std::max(0, f.degree(var) + 1));
  for (const auto& t : f.terms()) {
    std::array<int, kNumParams> e{};
    for (int v = 0; v < kNumParams; ++v) e[v] = mono::exp(t.first, v);
    int d = e[var];
    e[var] = 0;
    parts[d].emplace_back(mono::pack(e), t.second);
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(Poly::from_terms(std::move(p)));
  return out;
}

Poly content_in(const Poly& f, int var) {
  Poly g;
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g == Poly(1)) break;
  }
  return g;
}

Poly lead_in(const Poly& f, int var) { return coefficients_in(f, var).back(); }

// Primitive polynomial remainder sequence; slow but always correct.
Poly prs_gcd(const Poly& f, const Poly& g) {
  int v = main_var(f.var_mask() | g.var_mask());
  if (v < 0) return Poly(gcd(f.content(), g.content()));
  if (f.degree(v) <= 0) return poly_gcd(f, content_in(g, v));
  if (g.degree(v) <= 0) return poly_gcd(content_in(f, v), g);
  Poly cf = content_in(f, v), cg = content_in(g, v);
  Poly a, b;
  Poly::divide(f, cf, &a);
  Poly::divide(g, cg, &b);
  Poly c = poly_gcd(cf, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  Poly result;
  while (true) {
    Poly lb = lead_in(b, v);
    int db = b.degree(v);
    Poly r = a;
    int e = a.degree(v) - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
      Poly lr = lead_in(r, v);
      r = lb * r - lr * Poly::var(static_cast<Param>(v), r.degree(v) - db) * b;
      --e;
    }
    for (; e > 0; --e) r = lb * r;
    if (r.is_zero()) {
      result = b;
      break;
    }
    if (r.degree(v) <= 0) {
      result = Poly(1);
      break;
    }
    a = b;
    Poly::divide(r, content_in(r, v), &b);
  }
  Poly prim;
  Poly::divide(result, content_in(result, v), &prim);
  return normalize_sign(c * primitive(prim));
}

// Heuristic gcd: evaluate the main variable at a large integer, recurse,
// lift the result back by balanced x-adic expansion, and verify by division.
Poly heu_gcd(const Poly& f0, const Poly& g0) {
  int v = main_var(f0.var_mask() | g0.var_mask());
  if (v < 0) return Poly(gcd(f0.content(), g0.content()));
  BigInt cf = f0.content(), cg = g0.content();
  BigInt c = gcd(cf, cg);
  Poly f = f0.divided_by_integer(cf), g = g0.divided_by_integer(cg);
  BigInt fn = max_norm(f), gn = max_norm(g);
  BigInt b = 2 * std::min(fn, gn) + 29;
  BigInt sq = sqrt(BigInt(b));
  BigInt x = std::min(b, BigInt(99 * sq));
  BigInt lf = abs(f.leading().second), lg = abs(g.leading().second);
  BigInt alt = 2 * std::min(BigInt(fn / lf), BigInt(gn / lg)) + 4;
  if (alt > x) x = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = f.evaluate(v, x), gg = g.evaluate(v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      Poly h = poly_gcd(ff, gg);
      Poly hh = primitive(interpolate(h, x, v));
      if (!hh.is_zero() && Poly::divide(f, hh, nullptr) && Poly::divide(g, hh, nullptr))
        return normalize_sign(hh.scaled(c));
      Poly cff;
      if (Poly::divide(ff, h, &cff)) {
        Poly lifted = interpolate(cff, x, v);
        Poly cand;
        if (!lifted.is_zero() && Poly::divide(f, lifted, &cand)) {
          cand = primitive(cand);
          if (!cand.is_zero() && Poly::divide(g, cand, nullptr)) return normalize_sign(cand.scaled(c));
        }
      }
    }
    BigInt r4 = sqrt(BigInt(sqrt(x)));
    x = 73794 * x * r4 / 27011;
  }
  return normalize_sign(prs_gcd(f, g).scaled(c));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) return Poly(gcd(a.content(), b.content()));
  if (a == b) return normalize_sign(a);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  return heu_gcd(a, b);
}

namespace {
bool both_constant(const ParamRat& a, const ParamRat& b) { return a.is_constant() && b.is_constant(); }

// Sign convention for denominators: the first term in display order (lowest
// degree, then larger q exponent) is positive.
bool display_first_negative(const Poly& p) {
  const auto& ts = p.terms();
  int d = mono::total(ts.front().first);
  const Poly::Term* best = &ts.front();
  for (const auto& t : ts) {
    if (mono::total(t.first) != d) break;
    best = &t;
  }
  return best->second < 0;
}

void fix_sign(Poly& num, Poly& den) {
  if (display_first_negative(den)) {
    num = num.negated();
    den = den.negated();
  }
}
}  // namespace

// ---------------------------------------------------------------- ParamRat

ParamRat::ParamRat(const BigRational& c) : num_(c.get_num()), den_(c.get_den()) {}

ParamRat::ParamRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

ParamRat ParamRat::param(Param p, int power) {
  if (power >= 0) return ParamRat(Poly::var(p, power));
  return ParamRat(Poly(1), Poly::var(p, -power), NoReduce{});
}

BigRational ParamRat::constant_value() const {
  BigRational r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

void ParamRat::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_ == Poly(1)) return;
  Poly g = poly_gcd(num_, den_);
  if (g != Poly(1)) {
    Poly n, d;
    Poly::divide(num_, g, &n);
    Poly::divide(den_, g, &d);
    num_ = std::move(n);
    den_ = std::move(d);
  }
  fix_sign(num_, den_);
}


ParamRat operator+(const ParamRat& a, const ParamRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (both_constant(a, b)) return ParamRat(BigRational(a.constant_value() + b.constant_value()));
  if (a.den_ == b.den_) return ParamRat(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    BigInt da = a.den_.constant_value(), db = b.den_.constant_value();
    BigInt g = gcd(da, db);
    BigInt la = db / g, lb = da / g;
    return ParamRat(a.num_.scaled(la) + b.num_.scaled(lb), Poly(BigInt(da * la)));
  }
  Poly g = poly_gcd(a.den_, b.den_);
  Poly ad, bd;
  Poly::divide(a.den_, g, &ad);
  Poly::divide(b.den_, g, &bd);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return ParamRat();
  Poly h = poly_gcd(num, g);
  Poly den = ad * b.den_;
  if (h != Poly(1)) {
    Poly nn, dd;
    Poly::divide(num, h, &nn);
    Poly::divide(den, h, &dd);
    num = std::move(nn);
    den = std::move(dd);
  }
  fix_sign(num, den);
  return ParamRat(std::move(num), std::move(den), ParamRat::NoReduce{});
}

ParamRat ParamRat::operator-() const { return ParamRat(num_.negated(), den_, NoReduce{}); }

ParamRat operator-(const ParamRat& a, const ParamRat& b) { return a + (-b); }

ParamRat operator*(const ParamRat& a, const ParamRat& b) {
  if (a.is_zero() || b.is_zero()) return ParamRat();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (both_constant(a, b)) return ParamRat(BigRational(a.constant_value() * b.constant_value()));
  if (a.den_ == Poly(1) && b.den_ == Poly(1)) return ParamRat(a.num_ * b.num_, Poly(1), ParamRat::NoReduce{});
  Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
  Poly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
  if (g1 != Poly(1)) {
    Poly::divide(a.num_, g1, &an);
    Poly::divide(b.den_, g1, &bd);
  }
  if (g2 != Poly(1)) {
    Poly::divide(b.num_, g2, &bn);
    Poly::divide(a.den_, g2, &ad);
  }
  Poly num = an * bn, den = ad * bd;
  fix_sign(num, den);
  return ParamRat(std::move(num), std::move(den), ParamRat::NoReduce{});
}

ParamRat operator/(const ParamRat& a, const ParamRat& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly bn = b.num_, bd = b.den_;
  fix_sign(bd, bn);
  return a * ParamRat(std::move(bd), std::move(bn), ParamRat::NoReduce{});
}

ParamRat ParamRat::pow(long k) const {
  if (k < 0) return ParamRat(1) / pow(-k);
  ParamRat result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string ParamRat::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  if (den_.is_constant()) {
    // Rational coefficients are written inline, e.g. 1/2*q-3/2.
    BigInt d = den_.constant_value();
    std::string out;
    std::vector<const Poly::Term*> order;
    for (const auto& t : num_.terms()) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Poly::Term* a, const Poly::Term* b) {
      int da = mono::total(a->first), db = mono::total(b->first);
      if (da != db) return da < db;
      return a->first > b->first;
    });
    bool first = true;
    for (const auto* t : order) {
      BigRational c(t->second, d);
      c.canonicalize();
      bool neg = c < 0;
      if (neg) c = -c;
      out += neg ? "-" : (first ? "" : "+");
      first = false;
      Poly m = Poly::from_terms({{t->first, BigInt(1)}});
      std::string ms = t->first == 0 ? "" : m.to_string();
      if (ms.empty())
        out += c.get_str();
      else if (c == 1)
        out += ms;
      else
        out += c.get_str() + "*" + ms;
    }
    return out;
  }
  std::string n = num_.to_string();
  if (num_.terms().size() > 1)
    n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

size_t ParamRat::hash() const { return num_.hash() * 31 + den_.hash(); }

ParamRat arith(const ParamRat& a, const ParamRat& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw ArithmeticError("unknown operation");
}

namespace {

// Substitutes into a polynomial, returning numerator and denominator without
// any gcd work: each variable's binding a/b contributes a^e b^(D-e) over b^D.
std::pair<Poly, Poly> substitute_poly(const Poly& p, const std::array<const ParamRat*, kNumParams>& bind) {
  std::array<int, kNumParams> maxdeg{};
  for (int v = 0; v < kNumParams; ++v) maxdeg[v] = std::max(0, p.degree(v));
  std::array<std::vector<Poly>, kNumParams> npow, dpow;
  for (int v = 0; v < kNumParams; ++v) {
    if (!bind[v]) continue;
    npow[v].push_back(Poly(1));
    dpow[v].push_back(Poly(1));
    for (int e = 1; e <= maxdeg[v]; ++e) {
      npow[v].push_back(npow[v].back() * bind[v]->num());
      dpow[v].push_back(dpow[v].back() * bind[v]->den());
    }
  }
  Poly num;
  for (const auto& t : p.terms()) {
    std::array<int, kNumParams> keep{};
    Poly factor(t.second);
    for (int v = 0; v < kNumParams; ++v) {
      int e = mono::exp(t.first, v);
      if (bind[v])
        factor = factor * npow[v][e] * dpow[v][maxdeg[v] - e];
      else
        keep[v] = e;
    }
    num = num + factor * Poly::monomial(BigInt(1), keep);
  }
  Poly den(1);
  for (int v = 0; v < kNumParams; ++v)
    if (bind[v]) den = den * dpow[v][maxdeg[v]];
  return {num, den};
}

}  // namespace

ParamRat substitute(const ParamRat& f, const Bindings& bindings) {
  std::array<const ParamRat*, kNumParams> bind{};
  for (const auto& [p, val] : bindings) bind[static_cast<int>(p)] = &val;
  auto [nn, nd] = substitute_poly(f.num(), bind);
  auto [dn, dd] = substitute_poly(f.den(), bind);
  if (dn.is_zero()) throw DivisionByZero();
  return ParamRat(nn * dd, nd * dn);
}

ParamRat adams(const ParamRat& f, int k) {
  if (k < 1) throw ArithmeticError("adams index must be positive");
  if (k == 1 || f.is_constant()) return f;
  return ParamRat(f.num().adams(k), f.den().adams(k));
}

ParamRat divide_exact(const ParamRat& f, const ParamRat& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (!f.is_polynomial() || !g.is_polynomial()) throw NonExactDivision();
  // f = a/c and g = b/d with integer c, d: f/g = (a d)/(b c).
  Poly a = f.num().scaled(g.den().constant_value());
  Poly b = g.num().scaled(f.den().constant_value());
  Poly quo;
  BigInt cb = b.content();
  Poly bp = b.divided_by_integer(cb);
  if (!Poly::divide(a, bp, &quo)) throw NonExactDivision();
  return ParamRat(quo, Poly(cb));
}

ParamRat q_integer(int n, Param p) {
  std::vector<Poly::Term> terms;
  for (int i = 0; i < n; ++i) {
    std::array<int, kNumParams> e{};
    e[static_cast<int>(p)] = i;
    terms.emplace_back(mono::pack(e), BigInt(1));
  }
  return ParamRat(Poly::from_terms(std::move(terms)));
}

ParamRat q_factorial(int n, Param p) {
  ParamRat r(1);
  for (int i = 1; i <= n; ++i) r *= q_integer(i, p);
  return r;
}

ParamRat qt_integer(int n) {
  std::vector<Poly::Term> terms;
  for (int i = 0; i < n; ++i) terms.emplace_back(mono::pack({n - 1 - i, i, 0}), BigInt(1));
  return ParamRat(Poly::from_terms(std::move(terms)));
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace qtsym
