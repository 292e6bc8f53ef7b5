#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pasep/errors.hpp"

namespace pasep {

using Integer = mpz_class;
using Rational = mpq_class;

/// q^q * a^a * b^b, where a stands for 1/alpha and b for 1/beta.
/// Exponents are signed: the E1 generator has entries in 1/b, and the q-Eulerian closed
/// form carries a q^(k - k^2) prefactor. Every generating function is a true polynomial.
struct Monomial {
  int q = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const { return {q + o.q, a + o.a, b + o.b}; }
};

/// Canonical term order: ascending in q, then ascending in b, then descending in a.
/// This is the order in which the generating functions are conventionally printed
/// (a^3 + 2*a^2 + 2*a + a^2*b + ...).
struct CanonicalOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.q != y.q) return x.q < y.q;
    if (x.b != y.b) return x.b < y.b;
    return x.a > y.a;
  }
};

/// Sparse Laurent polynomial in q, a, b with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored, so structural equality is polynomial equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, CanonicalOrder>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& constant);

  static Polynomial monomial(const Monomial& m, const Integer& coefficient = 1);
  static Polynomial q(int power = 1) { return monomial({power, 0, 0}); }
  static Polynomial a(int power = 1) { return monomial({0, power, 0}); }
  static Polynomial b(int power = 1) { return monomial({0, 0, power}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;

  /// True iff no coefficient is negative (the zero polynomial qualifies).
  bool is_nonnegative() const;

  /// True iff no exponent is negative.
  bool is_polynomial() const;

  /// Substitutes a = b = 1, leaving a polynomial in q alone.
  Polynomial at_ab_one() const;

  Polynomial pow(unsigned e) const;

  /// Value with a = 1/alpha and b = 1/beta substituted. Throws InvalidParameter for zero
  /// alpha or beta, and for q = 0 when some q exponent is negative.
  Rational eval(const Rational& q, const Rational& alpha, const Rational& beta) const;

  /// Value at the given q with a = b = 1.
  Rational eval_q(const Rational& q) const;

  std::string to_string() const;
  static Polynomial parse(std::string_view text);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  /// this += x * y without materialising the product.
  Polynomial& add_product(const Polynomial& x, const Polynomial& y);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x);
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses "p/q" or an integer; denominators must be nonzero.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace pasep
