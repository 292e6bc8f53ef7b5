#include "pasep/poly.hpp"

#include <cctype>
#include <sstream>

namespace pasep {

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_nonnegative() const {
  for (const auto& [m, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

bool Polynomial::is_polynomial() const {
  for (const auto& [m, c] : terms_) {
    if (m.q < 0 || m.a < 0 || m.b < 0) return false;
  }
  return true;
}

Polynomial Polynomial::at_ab_one() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add_term({m.q, 0, 0}, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw InvalidParameter("eval: negative power of zero");
    Rational r = 1 / rational_pow(x, -e);
    r.canonicalize();
    return r;
  }
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational Polynomial::eval(const Rational& q, const Rational& alpha, const Rational& beta) const {
  if (alpha == 0) throw InvalidParameter("eval: alpha must be nonzero");
  if (beta == 0) throw InvalidParameter("eval: beta must be nonzero");
  const Rational a = 1 / alpha;
  const Rational b = 1 / beta;
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += Rational(c) * rational_pow(q, m.q) * rational_pow(a, m.a) * rational_pow(b, m.b);
  }
  sum.canonicalize();
  return sum;
}

Rational Polynomial::eval_q(const Rational& q) const { return eval(q, 1, 1); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::add_product(const Polynomial& x, const Polynomial& y) {
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) add_term(mx * my, cx * cy);
  }
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  Polynomial r;
  r.add_product(x, y);
  return r;
}

Polynomial operator-(const Polynomial& x) {
  Polynomial r = x;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

void append_power(std::string& out, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) out += '*';
  first_factor = false;
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    Integer magnitude = abs(c);
    if (first_term) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first_term = false;

    const bool constant = m.q == 0 && m.a == 0 && m.b == 0;
    bool first_factor = true;
    if (magnitude != 1 || constant) {
      out += magnitude.get_str();
      first_factor = false;
    }
    append_power(out, 'q', m.q, first_factor);
    append_power(out, 'a', m.a, first_factor);
    append_power(out, 'b', m.b, first_factor);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      throw ParseError("unexpected '+'", pos_);
    }
    while (true) {
      result += negative ? -term() : term();
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        negative = false;
      } else if (peek() == '-') {
        negative = true;
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::string d;
    skip_ws();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || std::isspace(static_cast<unsigned char>(peek())))) {
      if (!std::isspace(static_cast<unsigned char>(peek()))) d += peek();
      ++pos_;
    }
    return d;
  }

  Polynomial term() {
    skip_ws();
    const std::size_t start = pos_;
    Integer coefficient = 1;
    Monomial m;
    bool saw_anything = false;

    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(digits());
      saw_anything = true;
    }
    while (true) {
      skip_ws();
      if (at_end()) break;
      std::size_t star = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) throw ParseError("expected variable after '*'", star);
      }
      char v = peek();
      if (v != 'q' && v != 'a' && v != 'b') {
        if (pos_ != star) throw ParseError(std::string("expected variable, got '") + v + "'", pos_);
        break;
      }
      ++pos_;
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t exp_pos = pos_;
        bool negative = false;
        if (!at_end() && peek() == '-') {
          negative = true;
          ++pos_;
        }
        std::string d = digits();
        if (d.empty()) throw ParseError("expected exponent after '^'", exp_pos);
        if (d.size() > 9) throw ParseError("exponent too large", exp_pos);
        e = std::stoi(d);
        if (negative) e = -e;
      }
      (v == 'q' ? m.q : v == 'a' ? m.a : m.b) += e;
      saw_anything = true;
    }
    if (!saw_anything) throw ParseError("empty term", start);
    return Polynomial::monomial(m, coefficient);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || (den[0] == '-' || den[0] == '+')) {
    throw ParseError("malformed rational '" + s + "'", 0);
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InvalidParameter("rational with zero denominator: '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace pasep
