#include "tropical/arith.hpp"

#include <algorithm>
#include <cctype>

namespace tropical {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConventionMismatch: return "CONVENTION_MISMATCH";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NonSquare: return "NON_SQUARE";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::NonPure: return "NON_PURE";
    case ErrorCode::NonGenericPerturbation: return "NON_GENERIC_PERTURBATION";
    case ErrorCode::DegenerateLifting: return "DEGENERATE_LIFTING";
    case ErrorCode::NotTransverse: return "NOT_TRANSVERSE";
    case ErrorCode::NonComplementary: return "NON_COMPLEMENTARY";
    case ErrorCode::Precondition: return "PRECONDITION";
  }
  return "UNKNOWN";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = trim(s.substr(0, slash));
  auto den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den))
    fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational from_integer(const Integer& z) { return Rational(z); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

ZVector to_integer(const QVector& v) {
  ZVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) fail(ErrorCode::Precondition, "non-integral entry " + to_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

ZVector primitive(const QVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  ZVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q.get_num() * (l / q.get_den())));
  Integer g = gcd_of(out);
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

QVector primitive_rational(const QVector& v) { return to_rational(primitive(v)); }

QVector add(const QVector& a, const QVector& b) {
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

QVector scale(const QVector& a, const Rational& s) {
  QVector out(a);
  for (auto& q : out) q *= s;
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Integer gcd_of(const ZVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

}  // namespace tropical
