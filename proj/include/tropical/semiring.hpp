#pragma once

#include "tropical/arith.hpp"

#include <compare>
#include <map>
#include <optional>

namespace tropical {

enum class Convention { Min, Max };

const char* to_string(Convention c);
Convention parse_convention(std::string_view s);

/// Element of the min-plus or max-plus semiring: a rational, or the
/// absorbing element INFINITE (+inf under MIN, -inf under MAX).
class TropicalNumber {
 public:
  TropicalNumber() = default;  // INFINITE under MIN
  explicit TropicalNumber(Rational v, Convention c = Convention::Min)
      : value_(std::move(v)), conv_(c) {}
  static TropicalNumber infinite(Convention c = Convention::Min) {
    TropicalNumber t;
    t.conv_ = c;
    return t;
  }
  static TropicalNumber zero(Convention c = Convention::Min) { return infinite(c); }
  static TropicalNumber one(Convention c = Convention::Min) { return TropicalNumber(0, c); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Finite part; throws Precondition on INFINITE.
  const Rational& value() const;
  Convention convention() const { return conv_; }

  friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
    return a.conv_ == b.conv_ && a.value_ == b.value_;
  }

 private:
  std::optional<Rational> value_;
  Convention conv_ = Convention::Min;
};

TropicalNumber trop_add(const TropicalNumber& a, const TropicalNumber& b);
TropicalNumber trop_mul(const TropicalNumber& a, const TropicalNumber& b);
/// Semiring order: MIN keeps the rational order, MAX reverses it; INFINITE
/// is the smallest element in both.
std::strong_ordering trop_compare(const TropicalNumber& a, const TropicalNumber& b);

inline TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {
  return trop_add(a, b);
}
inline TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {
  return trop_mul(a, b);
}

std::string to_string(const TropicalNumber& t);

using Exponent = std::vector<long>;

/// Tropical (Laurent) polynomial with finite coefficients.
class TropicalPolynomial {
 public:
  TropicalPolynomial(Convention c, std::size_t arity, std::map<Exponent, Rational> terms);

  Convention convention() const { return conv_; }
  std::size_t arity() const { return arity_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Supports and coefficients in the (sorted) term order.
  std::vector<Exponent> support() const;
  QVector coefficients() const;

  TropicalNumber eval(const QVector& w) const;
  /// Exponents of the terms attaining the optimum at w.
  std::vector<Exponent> optimal_terms(const QVector& w) const;

  friend bool operator==(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    return a.conv_ == b.conv_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  Convention conv_;
  std::size_t arity_;
  std::map<Exponent, Rational> terms_;
};

TropicalNumber trop_eval(const TropicalPolynomial& f, const QVector& w);
/// Tropical product: optimum convolution of the two term lists.
TropicalPolynomial trop_product(const TropicalPolynomial& f, const TropicalPolynomial& g);

class TropicalMatrix {
 public:
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<TropicalNumber> entries);
  /// Builds a matrix from finite rational entries.
  static TropicalMatrix from_rationals(const QMatrix& m, Convention c = Convention::Min);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Convention convention() const { return conv_; }
  const TropicalNumber& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  TropicalMatrix columns(const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_, cols_;
  Convention conv_ = Convention::Min;
  std::vector<TropicalNumber> entries_;
};

/// Optimal assignment value (Hungarian method).
TropicalNumber trop_det(const TropicalMatrix& m);
/// Tropical maximal minors indexed by sorted 0-based column subsets.
std::map<std::vector<std::size_t>, TropicalNumber> trop_minors(const TropicalMatrix& m);

}  // namespace tropical
