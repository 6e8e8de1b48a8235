#include "tropical/lp.hpp"

namespace tropical::lp {

namespace {

int sign_of(const Rational& q) { return sgn(q); }
int sign_of(const EpsRational& q) { return q.sign(); }

template <class V>
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural + slack + artificial columns
  QMatrix a;
  std::vector<V> rhs;
  std::vector<std::size_t> basis;
  QVector reduced;  // reduced costs (maximization)
  V value{};
  std::vector<bool> blocked;  // columns that may not enter

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r])
      if (sgn(x) != 0) x *= inv;
    rhs[r] = rhs[r] * inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(a[r][j]) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (auto j : nz) a[i][j] -= f * a[r][j];
      rhs[i] -= rhs[r] * f;
    }
    if (sgn(reduced[c]) != 0) {
      Rational f = reduced[c];
      for (auto j : nz) reduced[j] -= f * a[r][j];
      value += rhs[r] * f;
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (!blocked[j] && sgn(reduced[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = rows;
      V best{};
      for (std::size_t i = 0; i < rows; ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        V ratio = rhs[i] / a[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

template <class V>
Result<V> maximize(const QVector& c, const QMatrix& ineq, const std::vector<V>& ineq_rhs,
                   const QMatrix& eq, const std::vector<V>& eq_rhs, std::size_t n) {
  const std::size_t mi = ineq.size();
  const std::size_t me = eq.size();
  const std::size_t m = mi + me;
  // Columns: x+ (n), x- (n), slacks (mi), artificials (m).
  const std::size_t n_struct = 2 * n;
  const std::size_t slack0 = n_struct;
  const std::size_t art0 = slack0 + mi;
  Tableau<V> t;
  t.rows = m;
  t.cols = art0 + m;
  t.a.assign(m, QVector(t.cols, 0));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.blocked.assign(t.cols, false);

  std::vector<bool> artificial_basic(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const QVector& row = i < mi ? ineq[i] : eq[i - mi];
    V b = i < mi ? ineq_rhs[i] : eq_rhs[i - mi];
    bool flip = sign_of(b) < 0;
    Rational s = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(row[j]) == 0) continue;
      t.a[i][j] = s * row[j];
      t.a[i][n + j] = -s * row[j];
    }
    if (i < mi) t.a[i][slack0 + i] = s;
    t.rhs[i] = flip ? -b : b;
    if (i < mi && !flip) {
      t.basis[i] = slack0 + i;
    } else {
      t.a[i][art0 + i] = 1;
      t.basis[i] = art0 + i;
      artificial_basic[i] = true;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!artificial_basic[i]) t.blocked[art0 + i] = true;

  // Phase I: maximize -(sum of artificials).
  t.reduced.assign(t.cols, 0);
  t.value = V{};
  for (std::size_t i = 0; i < m; ++i) {
    if (!artificial_basic[i]) continue;
    for (std::size_t j = 0; j < art0; ++j)
      if (sgn(t.a[i][j]) != 0) t.reduced[j] += t.a[i][j];
    t.value -= t.rhs[i];
  }
  t.optimize();
  Result<V> res;
  if (sign_of(t.value) < 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (t.basis[i] < art0) continue;
    std::size_t col = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (sgn(t.a[i][j]) != 0) {
        col = j;
        break;
      }
    if (col < art0) {
      t.pivot(i, col);
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --t.rows;
      --i;
    }
  }
  for (std::size_t j = art0; j < t.cols; ++j) t.blocked[j] = true;

  // Phase II.
  QVector cost(t.cols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  t.reduced = cost;
  t.value = V{};
  for (std::size_t i = 0; i < t.rows; ++i) {
    const Rational& cb = cost[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < t.cols; ++j)
      if (sgn(t.a[i][j]) != 0) t.reduced[j] -= cb * t.a[i][j];
    t.value += t.rhs[i] * cb;
  }
  for (std::size_t i = 0; i < t.rows; ++i) t.reduced[t.basis[i]] = 0;
  if (!t.optimize()) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.value = t.value;
  res.x.assign(n, V{});
  for (std::size_t i = 0; i < t.rows; ++i) {
    std::size_t b = t.basis[i];
    if (b < n)
      res.x[b] += t.rhs[i];
    else if (b < 2 * n)
      res.x[b - n] -= t.rhs[i];
  }
  return res;
}

template Result<Rational> maximize<Rational>(const QVector&, const QMatrix&,
                                             const std::vector<Rational>&, const QMatrix&,
                                             const std::vector<Rational>&, std::size_t);
template Result<EpsRational> maximize<EpsRational>(const QVector&, const QMatrix&,
                                                   const std::vector<EpsRational>&, const QMatrix&,
                                                   const std::vector<EpsRational>&, std::size_t);

}  // namespace tropical::lp
