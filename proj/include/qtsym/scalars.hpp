#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtsym {

using BigInt = mpz_class;
using BigRational = mpq_class;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by zero") {}
};
class NonExactDivision : public ArithmeticError {
 public:
  NonExactDivision() : ArithmeticError("non-exact division") {}
};

// Parameters of the coefficient field. Changing the set means editing this
// enum and kParamNames together.
enum class Param : int { q = 0, t = 1, u = 2 };
inline constexpr int kNumParams = 3;
inline constexpr std::array<const char*, kNumParams> kParamNames = {"q", "t", "u"};

// Exponent vector packed as [total | q | t | u], 16 bits each, so integer
// comparison of keys is the degree-lex order with q > t > u.
namespace mono {
inline constexpr int kBits = 16;
inline constexpr uint64_t kMask = 0xFFFF;
inline int exp(uint64_t key, int var) {
  return static_cast<int>((key >> (kBits * (kNumParams - 1 - var))) & kMask);
}
inline int total(uint64_t key) { return static_cast<int>(key >> (kBits * kNumParams)); }
uint64_t pack(const std::array<int, kNumParams>& e);
uint64_t mul(uint64_t a, uint64_t b);
inline bool divides(uint64_t a, uint64_t b) {
  for (int v = 0; v < kNumParams; ++v)
    if (exp(a, v) > exp(b, v)) return false;
  return true;
}
inline uint64_t div(uint64_t b, uint64_t a) { return b - a; }
}  // namespace mono

// Sparse polynomial in q,t,u with integer coefficients. Terms are sorted by
// ascending monomial key; no zero coefficients are stored.
class Poly {
 public:
  using Term = std::pair<uint64_t, BigInt>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const BigInt& c);
  static Poly monomial(const BigInt& c, const std::array<int, kNumParams>& e);
  static Poly var(Param p, int power = 1);
  static Poly from_terms(std::vector<Term> terms);  // sorts and merges

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  BigInt constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.back(); }
  int degree(int var) const;
  int total_degree() const;
  unsigned var_mask() const;

  BigInt content() const;  // positive gcd of coefficients (0 for zero)
  Poly scaled(const BigInt& c) const;
  Poly divided_by_integer(const BigInt& c) const;  // exact
  Poly negated() const;
  Poly adams(int k) const;
  Poly evaluate(int var, const BigInt& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return negated(); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient when b divides a exactly in Z[q,t,u]; false otherwise.
  static bool divide(const Poly& a, const Poly& b, Poly* quotient);

  std::string to_string() const;
  size_t hash() const;

 private:
  std::vector<Term> terms_;
};

Poly poly_gcd(const Poly& a, const Poly& b);

// Element of Q(q,t,u) as num/den with num, den in Z[q,t,u].
// Canonical: gcd(num, den) = 1 over Z, leading coefficient of den positive,
// zero is 0/1. Equality is therefore representation equality.
class ParamRat {
 public:
  ParamRat() : num_(0), den_(1) {}
  ParamRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamRat(const BigInt& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamRat(const BigRational& c);  // NOLINT(google-explicit-constructor)
  ParamRat(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamRat(Poly num, Poly den);  // reduces; throws DivisionByZero
  static ParamRat param(Param p, int power = 1);
  static ParamRat q(int power = 1) { return param(Param::q, power); }
  static ParamRat t(int power = 1) { return param(Param::t, power); }
  static ParamRat u(int power = 1) { return param(Param::u, power); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_integer_polynomial() const { return den_ == Poly(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRational constant_value() const;  // requires is_constant()
  bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

  friend ParamRat operator+(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator-(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator*(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator/(const ParamRat& a, const ParamRat& b);
  ParamRat operator-() const;
  ParamRat& operator+=(const ParamRat& b) { return *this = *this + b; }
  ParamRat& operator-=(const ParamRat& b) { return *this = *this - b; }
  ParamRat& operator*=(const ParamRat& b) { return *this = *this * b; }
  ParamRat& operator/=(const ParamRat& b) { return *this = *this / b; }
  friend bool operator==(const ParamRat& a, const ParamRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

  ParamRat pow(long k) const;  // negative k inverts
  std::string to_string() const;
  size_t hash() const;

 private:
  struct NoReduce {};
  ParamRat(Poly num, Poly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };
ParamRat arith(const ParamRat& a, const ParamRat& b, ArithOp op);

using Bindings = std::map<Param, ParamRat>;
// Throws DivisionByZero when the substituted denominator vanishes.
ParamRat substitute(const ParamRat& f, const Bindings& bindings);
ParamRat adams(const ParamRat& f, int k);
// f and g must be polynomials; throws DivisionByZero for g = 0 and
// NonExactDivision when the quotient is not a polynomial.
ParamRat divide_exact(const ParamRat& f, const ParamRat& g);

// [n]_q = 1 + q + ... + q^{n-1} in the chosen parameter.
ParamRat q_integer(int n, Param p = Param::q);
ParamRat q_factorial(int n, Param p = Param::q);
// [n]_{q,t} = (q^n - t^n)/(q - t)
ParamRat qt_integer(int n);
BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace qtsym

template <>
struct std::hash<qtsym::ParamRat> {
  size_t operator()(const qtsym::ParamRat& x) const { return x.hash(); }
};
