#include "tropical/valuation.hpp"

#include <cctype>

namespace tropical {

ValuedField ValuedField::padic(const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    fail(ErrorCode::Precondition, "p-adic valuation needs a prime, got " + to_string(p));
  return {Kind::PadicQ, p};
}

std::string to_string(const ValuedField& f) {
  switch (f.kind) {
    case ValuedField::Kind::TrivialQ:
      return "Q";
    case ValuedField::Kind::PadicQ:
      return "Q_" + to_string(f.p);
    case ValuedField::Kind::TadicQT:
      return "Q(t)";
  }
  return "?";
}

// --- univariate polynomials -------------------------------------------

namespace {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly padd(const UPoly& a, const UPoly& b, int sign = 1) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  trim(r);
  return r;
}

UPoly pmul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly pscale(const UPoly& a, const Rational& s) {
  UPoly r(a);
  for (auto& x : r) x *= s;
  trim(r);
  return r;
}

// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> pdivmod(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly pgcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = pdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = pscale(a, 1 / a.back());
  return a;
}

std::size_t lowest_degree(const UPoly& p) {
  std::size_t i = 0;
  while (i < p.size() && sgn(p[i]) == 0) ++i;
  return i;
}

std::string poly_to_string(const UPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? "-" : "+";
    }
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

// --- Scalar ------------------------------------------------------------

Scalar::Scalar(const Rational& q) : den_{Rational(1)} {
  if (sgn(q) != 0) num_ = {q};
}

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  reduce();
}

Scalar Scalar::t() { return Scalar(UPoly{0, 1}, UPoly{1}); }

void Scalar::reduce() {
  if (den_.empty()) fail(ErrorCode::ZeroInput, "division by zero in Q(t)");
  if (num_.empty()) {
    den_ = {Rational(1)};
    return;
  }
  UPoly g = pgcd(num_, den_);
  if (g.size() > 1) {
    num_ = pdivmod(num_, g).first;
    den_ = pdivmod(den_, g).first;
  }
  Rational low = den_[lowest_degree(den_)];
  if (low != 1) {
    num_ = pscale(num_, 1 / low);
    den_ = pscale(den_, 1 / low);
  }
}

Rational Scalar::rational() const {
  if (!is_rational()) fail(ErrorCode::Precondition, "scalar " + to_string(*this) + " is not rational");
  return num_.empty() ? Rational(0) : num_[0] / den_[0];
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return Scalar(padd(a.num_, b.num_), a.den_);
  return Scalar(padd(pmul(a.num_, b.den_), pmul(b.num_, a.den_)), pmul(a.den_, b.den_));
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  for (auto& x : r.num_) x = -x;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  return Scalar(pmul(a.num_, b.num_), pmul(a.den_, b.den_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "division by zero");
  return Scalar(pmul(a.num_, b.den_), pmul(a.den_, b.num_));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return Scalar(1) / pow(-e);
  Scalar r(1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string to_string(const Scalar& s) {
  if (s.is_rational()) return to_string(s.rational());
  if (s.denominator() == UPoly{Rational(1)}) return poly_to_string(s.numerator());
  return "(" + poly_to_string(s.numerator()) + ")/(" + poly_to_string(s.denominator()) + ")";
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, bool allow_t) : s_(text), allow_t_(allow_t) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::Parse, "cannot parse scalar \"" + std::string(s_) + "\" at position " +
                               std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) error("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("exponent expected after '^'");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (neg && base.is_zero()) error("division by zero");
    return base.pow(neg ? -e : e);
  }
  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) error("')' expected");
      return v;
    }
    if (c == 't') {
      if (!allow_t_) error("the variable t is only allowed over Q(t)");
      ++pos_;
      return Scalar::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

long padic_order(const Integer& z, const Integer& p) {
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Scalar parse_scalar(std::string_view text, const ValuedField& field) {
  return ScalarParser(text, field.kind == ValuedField::Kind::TadicQT).parse();
}

Rational valuate(const ValuedField& field, const Scalar& c) {
  if (c.is_zero()) fail(ErrorCode::ZeroInput, "valuation of zero is undefined");
  switch (field.kind) {
    case ValuedField::Kind::TrivialQ:
      c.rational();  // rejects non-constant input
      return 0;
    case ValuedField::Kind::PadicQ: {
      Rational q = c.rational();
      return padic_order(q.get_num(), field.p) - padic_order(q.get_den(), field.p);
    }
    case ValuedField::Kind::TadicQT:
      return static_cast<long>(lowest_degree(c.numerator())) -
             static_cast<long>(lowest_degree(c.denominator()));
  }
  return 0;
}

TropicalNumber semiring_image(const SemiringMap& m, const Scalar& c) {
  if (c.is_zero()) return TropicalNumber::infinite(m.convention);
  Rational v = valuate(m.field, c);
  return TropicalNumber(m.convention == Convention::Min ? v : Rational(-v), m.convention);
}

// --- ValuedPolynomial ----------------------------------------------------

ValuedPolynomial::ValuedPolynomial(ValuedField field, std::size_t arity, std::map<Exponent, Scalar> terms)
    : field_(std::move(field)), arity_(arity) {
  for (auto& [e, c] : terms) {
    if (e.size() != arity_) fail(ErrorCode::ArityMismatch, "exponent of wrong length");
    if (field_.kind != ValuedField::Kind::TadicQT && !c.is_rational())
      fail(ErrorCode::FieldMismatch, "coefficient " + to_string(c) + " is not in " + to_string(field_));
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

ValuedPolynomial ValuedPolynomial::constant(ValuedField field, std::size_t arity, const Scalar& c) {
  return ValuedPolynomial(std::move(field), arity, {{Exponent(arity, 0), c}});
}

ValuedPolynomial ValuedPolynomial::monomial(ValuedField field, const Exponent& e, const Scalar& c) {
  return ValuedPolynomial(std::move(field), e.size(), {{e, c}});
}

ValuedPolynomial ValuedPolynomial::variable(ValuedField field, std::size_t arity, std::size_t i) {
  Exponent e(arity, 0);
  e.at(i) = 1;
  return monomial(std::move(field), e);
}

std::vector<Exponent> ValuedPolynomial::support() const {
  std::vector<Exponent> out;
  for (const auto& [e, _] : terms_) out.push_back(e);
  return out;
}

void ValuedPolynomial::check_compatible(const ValuedPolynomial& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (arity_ != o.arity_) fail(ErrorCode::ArityMismatch, "polynomials in different numbers of variables");
}

ValuedPolynomial operator+(const ValuedPolynomial& a, const ValuedPolynomial& b) {
  a.check_compatible(b);
  ValuedPolynomial r = a;
  for (const auto& [e, c] : b.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

ValuedPolynomial operator-(const ValuedPolynomial& a, const ValuedPolynomial& b) {
  ValuedPolynomial nb = b;
  for (auto& [_, c] : nb.terms_) c = -c;
  return a + nb;
}

ValuedPolynomial operator*(const ValuedPolynomial& a, const ValuedPolynomial& b) {
  a.check_compatible(b);
  std::map<Exponent, Scalar> acc;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto [it, inserted] = acc.emplace(std::move(e), c1 * c2);
      if (!inserted) it->second = it->second + c1 * c2;
    }
  return ValuedPolynomial(a.field_, a.arity_, std::move(acc));
}

ValuedPolynomial ValuedPolynomial::pow(unsigned long e) const {
  ValuedPolynomial r = constant(field_, arity_, Scalar(1)), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

ValuedPolynomial ValuedPolynomial::shifted(const Exponent& shift) const {
  if (shift.size() != arity_) fail(ErrorCode::ArityMismatch, "shift of wrong length");
  std::map<Exponent, Scalar> t;
  for (const auto& [e, c] : terms_) {
    Exponent s(e);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    t.emplace(std::move(s), c);
  }
  return ValuedPolynomial(field_, arity_, std::move(t));
}

ValuedPolynomial ValuedPolynomial::extended(std::size_t new_arity, std::size_t offset) const {
  if (offset + arity_ > new_arity) fail(ErrorCode::ArityMismatch, "cannot embed polynomial");
  std::map<Exponent, Scalar> t;
  for (const auto& [e, c] : terms_) {
    Exponent s(new_arity, 0);
    for (std::size_t i = 0; i < e.size(); ++i) s[offset + i] = e[i];
    t.emplace(std::move(s), c);
  }
  return ValuedPolynomial(field_, new_arity, std::move(t));
}

TropicalPolynomial tropicalize(const ValuedPolynomial& f, const SemiringMap& m) {
  if (!(f.field() == m.field)) fail(ErrorCode::FieldMismatch, "polynomial and semiring map over different fields");
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "tropicalization of the zero polynomial");
  std::map<Exponent, Rational> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace(e, semiring_image(m, c).value());
  return TropicalPolynomial(m.convention, f.arity(), std::move(terms));
}

}  // namespace tropical
