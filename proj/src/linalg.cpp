#include "tropical/linalg.hpp"

namespace tropical::linalg {

Echelon rref(QMatrix a, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const QMatrix& a, std::size_t cols) { return rref(a, cols).rows.size(); }

QMatrix nullspace(const QMatrix& a, std::size_t cols) {
  auto e = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b, std::size_t cols) {
  QMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    QVector row(a[i]);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto e = rref(std::move(aug), cols + 1);
  QVector x(cols, 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

QMatrix row_basis(const QMatrix& a, std::size_t cols) { return rref(a, cols).rows; }

bool in_span(const QMatrix& rows, const QVector& v, std::size_t cols) {
  QMatrix m(rows);
  std::size_t before = rank(m, cols);
  m.push_back(v);
  return rank(m, cols) == before;
}

QVector project_out(const QMatrix& rows, const QVector& v) {
  if (rows.empty()) return v;
  const std::size_t k = rows.size();
  // Solve (L L^T) c = L v, then v - L^T c.
  QMatrix gram(k, QVector(k));
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(rows[i], rows[j]);
    rhs[i] = dot(rows[i], v);
  }
  auto c = solve(gram, rhs, k);
  QVector out(v);
  for (std::size_t i = 0; i < k; ++i)
    if (sgn((*c)[i]) != 0)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] -= (*c)[i] * rows[i][j];
  return out;
}

QMatrix transpose(const QMatrix& a, std::size_t cols) {
  QMatrix t(cols, QVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix identity(std::size_t n) {
  QMatrix m(n, QVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace tropical::linalg
