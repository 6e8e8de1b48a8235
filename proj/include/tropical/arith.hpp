#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;
using QMatrix = std::vector<QVector>;  // row-major
using ZMatrix = std::vector<ZVector>;

enum class ErrorCode {
  ConventionMismatch,
  ArityMismatch,
  DimensionMismatch,
  NonSquare,
  ZeroInput,
  FieldMismatch,
  EmptyInput,
  Parse,
  NonPure,
  NonGenericPerturbation,
  DegenerateLifting,
  NotTransverse,
  NonComplementary,
  Precondition,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

/// Parses "p", "-p" or "p/q" (whitespace tolerant). Throws ErrorCode::Parse.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational from_integer(const Integer& z);
bool is_integral(const Rational& q);

QVector to_rational(const ZVector& v);
/// Requires every entry to be integral.
ZVector to_integer(const QVector& v);
/// Smallest positive multiple of v with coprime integer entries; zero stays zero.
ZVector primitive(const QVector& v);
/// The same direction scaled to the primitive integer vector, kept as rationals.
QVector primitive_rational(const QVector& v);

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const Rational& s);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

Integer gcd_of(const ZVector& v);

/// Value of the form a + b*eps for a positive infinitesimal eps, ordered
/// lexicographically. Used for perturbations that must be exact.
struct EpsRational {
  Rational a;
  Rational b;

  EpsRational() = default;
  EpsRational(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

  EpsRational& operator+=(const EpsRational& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  EpsRational& operator-=(const EpsRational& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend EpsRational operator+(EpsRational x, const EpsRational& y) { return x += y; }
  friend EpsRational operator-(EpsRational x, const EpsRational& y) { return x -= y; }
  friend EpsRational operator-(const EpsRational& x) { return {-x.a, -x.b}; }
  friend EpsRational operator*(const EpsRational& x, const Rational& s) {
    return {x.a * s, x.b * s};
  }
  friend EpsRational operator*(const Rational& s, const EpsRational& x) { return x * s; }
  friend EpsRational operator/(const EpsRational& x, const Rational& s) {
    return {x.a / s, x.b / s};
  }
  friend bool operator==(const EpsRational& x, const EpsRational& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend std::strong_ordering operator<=>(const EpsRational& x, const EpsRational& y) {
    int c = cmp(x.a, y.a);
    if (c == 0) c = cmp(x.b, y.b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int sign() const {
    int s = sgn(a);
    return s != 0 ? s : sgn(b);
  }
};

}  // namespace tropical
