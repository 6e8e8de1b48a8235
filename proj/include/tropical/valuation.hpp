#pragma once

#include "tropical/semiring.hpp"

#include <map>

namespace tropical {

struct ValuedField {
  enum class Kind { TrivialQ, PadicQ, TadicQT };
  Kind kind = Kind::TrivialQ;
  Integer p = 0;  // the prime for PadicQ

  static ValuedField trivial() { return {}; }
  static ValuedField padic(const Integer& p);
  static ValuedField tadic() { return {Kind::TadicQT, 0}; }

  friend bool operator==(const ValuedField& a, const ValuedField& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

std::string to_string(const ValuedField& f);

/// Dense univariate polynomial over Q, coefficient i belongs to t^i; no
/// trailing zeros (the zero polynomial is empty).
using UPoly = QVector;

/// Element of Q(t) as a reduced fraction num/den; den has lowest nonzero
/// coefficient 1. Rationals are the constant fractions, so the same type
/// serves every supported field.
class Scalar {
 public:
  Scalar() : num_{}, den_{Rational(1)} {}
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(long q) : Scalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(UPoly num, UPoly den);
  static Scalar t();

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return num_.size() <= 1 && den_.size() == 1; }
  /// The value as a rational; Precondition unless is_rational().
  Rational rational() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  Scalar pow(long e) const;

 private:
  void reduce();
  UPoly num_, den_;
};

/// Text form: "p/q" for rationals, "(num)/(den)" or a bare polynomial in t.
std::string to_string(const Scalar& s);
/// Parses arithmetic expressions in numbers and t (+ - * / ^ and brackets).
/// `t` is accepted only for the t-adic field. Throws ErrorCode::Parse.
Scalar parse_scalar(std::string_view text, const ValuedField& field);

/// Valuation of a nonzero scalar; ZeroInput on 0.
Rational valuate(const ValuedField& field, const Scalar& c);

struct SemiringMap {
  ValuedField field;
  Convention convention = Convention::Min;
};

/// nu(c) = val(c) under MIN and -val(c) under MAX; 0 maps to INFINITE.
TropicalNumber semiring_image(const SemiringMap& m, const Scalar& c);

/// Laurent polynomial with coefficients in the given valued field.
class ValuedPolynomial {
 public:
  ValuedPolynomial(ValuedField field, std::size_t arity, std::map<Exponent, Scalar> terms = {});
  static ValuedPolynomial constant(ValuedField field, std::size_t arity, const Scalar& c);
  static ValuedPolynomial monomial(ValuedField field, const Exponent& e, const Scalar& c = Scalar(1));
  static ValuedPolynomial variable(ValuedField field, std::size_t arity, std::size_t i);

  const ValuedField& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<Exponent> support() const;

  ValuedPolynomial pow(unsigned long e) const;
  /// Multiply by x^shift (Laurent shift).
  ValuedPolynomial shifted(const Exponent& shift) const;
  /// Same polynomial viewed in more variables (new ones appended).
  ValuedPolynomial extended(std::size_t new_arity, std::size_t offset = 0) const;

  friend ValuedPolynomial operator+(const ValuedPolynomial& a, const ValuedPolynomial& b);
  friend ValuedPolynomial operator-(const ValuedPolynomial& a, const ValuedPolynomial& b);
  friend ValuedPolynomial operator*(const ValuedPolynomial& a, const ValuedPolynomial& b);
  friend bool operator==(const ValuedPolynomial& a, const ValuedPolynomial& b) {
    return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const ValuedPolynomial& o) const;
  ValuedField field_;
  std::size_t arity_;
  std::map<Exponent, Scalar> terms_;
};

TropicalPolynomial tropicalize(const ValuedPolynomial& f, const SemiringMap& m);

}  // namespace tropical
