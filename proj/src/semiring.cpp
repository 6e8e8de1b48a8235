#include "tropical/semiring.hpp"

#include <algorithm>

namespace tropical {

const char* to_string(Convention c) { return c == Convention::Min ? "min" : "max"; }

Convention parse_convention(std::string_view s) {
  if (s == "min") return Convention::Min;
  if (s == "max") return Convention::Max;
  fail(ErrorCode::Parse, "convention must be \"min\" or \"max\", got \"" + std::string(s) + "\"");
}

const Rational& TropicalNumber::value() const {
  if (!value_) fail(ErrorCode::Precondition, "INFINITE has no finite part");
  return *value_;
}

namespace {

void same_convention(const TropicalNumber& a, const TropicalNumber& b) {
  if (a.convention() != b.convention())
    fail(ErrorCode::ConventionMismatch, "tropical numbers of different conventions");
}

// True when x is strictly better than y under the convention.
bool better(const Rational& x, const Rational& y, Convention c) {
  return c == Convention::Min ? x < y : x > y;
}

}  // namespace

TropicalNumber trop_add(const TropicalNumber& a, const TropicalNumber& b) {
  same_convention(a, b);
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  return better(b.value(), a.value(), a.convention()) ? b : a;
}

TropicalNumber trop_mul(const TropicalNumber& a, const TropicalNumber& b) {
  same_convention(a, b);
  if (a.is_infinite() || b.is_infinite()) return TropicalNumber::infinite(a.convention());
  return TropicalNumber(a.value() + b.value(), a.convention());
}

std::strong_ordering trop_compare(const TropicalNumber& a, const TropicalNumber& b) {
  same_convention(a, b);
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.value(), b.value());
  if (a.convention() == Convention::Max) c = -c;
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const TropicalNumber& t) {
  return t.is_infinite() ? std::string("inf") : to_string(t.value());
}

TropicalPolynomial::TropicalPolynomial(Convention c, std::size_t arity,
                                       std::map<Exponent, Rational> terms)
    : conv_(c), arity_(arity), terms_(std::move(terms)) {
  if (terms_.empty()) fail(ErrorCode::EmptyInput, "tropical polynomial without terms");
  for (const auto& [e, _] : terms_)
    if (e.size() != arity_) fail(ErrorCode::ArityMismatch, "exponent of wrong length");
}

std::vector<Exponent> TropicalPolynomial::support() const {
  std::vector<Exponent> out;
  for (const auto& [e, _] : terms_) out.push_back(e);
  return out;
}

QVector TropicalPolynomial::coefficients() const {
  QVector out;
  for (const auto& [_, c] : terms_) out.push_back(c);
  return out;
}

namespace {

Rational term_value(const Exponent& e, const Rational& c, const QVector& w) {
  Rational v = c;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) v += e[i] * w[i];
  return v;
}

}  // namespace

TropicalNumber TropicalPolynomial::eval(const QVector& w) const {
  if (w.size() != arity_) fail(ErrorCode::ArityMismatch, "evaluation point of wrong length");
  std::optional<Rational> best;
  for (const auto& [e, c] : terms_) {
    Rational v = term_value(e, c, w);
    if (!best || better(v, *best, conv_)) best = std::move(v);
  }
  return TropicalNumber(*best, conv_);
}

std::vector<Exponent> TropicalPolynomial::optimal_terms(const QVector& w) const {
  Rational best = eval(w).value();
  std::vector<Exponent> out;
  for (const auto& [e, c] : terms_)
    if (term_value(e, c, w) == best) out.push_back(e);
  return out;
}

TropicalNumber trop_eval(const TropicalPolynomial& f, const QVector& w) { return f.eval(w); }

TropicalPolynomial trop_product(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  if (f.convention() != g.convention())
    fail(ErrorCode::ConventionMismatch, "tropical polynomials of different conventions");
  if (f.arity() != g.arity()) fail(ErrorCode::ArityMismatch, "tropical polynomials of different arity");
  std::map<Exponent, Rational> terms;
  for (const auto& [e1, c1] : f.terms())
    for (const auto& [e2, c2] : g.terms()) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Rational c = c1 + c2;
      auto it = terms.find(e);
      if (it == terms.end())
        terms.emplace(std::move(e), std::move(c));
      else if (better(c, it->second, f.convention()))
        it->second = std::move(c);
    }
  return TropicalPolynomial(f.convention(), f.arity(), std::move(terms));
}

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<TropicalNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrorCode::EmptyInput, "tropical matrix without entries");
  if (entries_.size() != rows_ * cols_) fail(ErrorCode::DimensionMismatch, "matrix is not rectangular");
  conv_ = entries_.front().convention();
  for (const auto& e : entries_)
    if (e.convention() != conv_) fail(ErrorCode::ConventionMismatch, "matrix of mixed conventions");
}

TropicalMatrix TropicalMatrix::from_rationals(const QMatrix& m, Convention c) {
  if (m.empty()) fail(ErrorCode::EmptyInput, "tropical matrix without entries");
  std::vector<TropicalNumber> entries;
  for (const auto& row : m) {
    if (row.size() != m.front().size()) fail(ErrorCode::DimensionMismatch, "matrix is not rectangular");
    for (const auto& x : row) entries.emplace_back(x, c);
  }
  return TropicalMatrix(m.size(), m.front().size(), std::move(entries));
}

TropicalMatrix TropicalMatrix::columns(const std::vector<std::size_t>& cols) const {
  std::vector<TropicalNumber> entries;
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto j : cols) entries.push_back(at(i, j));
  return TropicalMatrix(rows_, cols.size(), std::move(entries));
}

TropicalNumber trop_det(const TropicalMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NonSquare, "tropical determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Convention conv = m.convention();
  // Minimization costs; forbidden (INFINITE) entries get a penalty larger
  // than any finite assignment can reach, so they are used only when no
  // finite assignment exists.
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.at(i, j).is_infinite()) total += abs(m.at(i, j).value());
  const Rational penalty = 2 * total + 1;
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    const auto& e = m.at(i, j);
    if (e.is_infinite()) return penalty;
    return conv == Convention::Min ? e.value() : Rational(-e.value());
  };
  // Hungarian method with potentials, 1-based rows/columns.
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      std::optional<Rational> delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  TropicalNumber result = TropicalNumber::one(conv);
  for (std::size_t j = 1; j <= n; ++j) result = trop_mul(result, m.at(p[j] - 1, j - 1));
  return result;
}

std::map<std::vector<std::size_t>, TropicalNumber> trop_minors(const TropicalMatrix& m) {
  if (m.rows() > m.cols()) fail(ErrorCode::DimensionMismatch, "more rows than columns");
  std::map<std::vector<std::size_t>, TropicalNumber> out;
  std::vector<bool> mask(m.cols(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(m.rows()), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mask[j]) cols.push_back(j);
    out.emplace(cols, trop_det(m.columns(cols)));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace tropical
