#include "tropical/lattice.hpp"

#include "tropical/linalg.hpp"

namespace tropical::lattice {

namespace {

// Row reduction by unimodular operations; optionally mirrors every operation
// on `track`. Returns the pivot columns of the resulting echelon rows.
std::vector<std::size_t> integer_echelon(ZMatrix& a, std::size_t cols, ZMatrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (sgn(a[i][c]) != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      std::swap(a[best], a[r]);
      if (track) std::swap((*track)[best], (*track)[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (track)
          for (std::size_t j = 0; j < (*track)[i].size(); ++j) (*track)[i][j] -= q * (*track)[r][j];
        if (sgn(a[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (r < a.size() && sgn(a[r][c]) != 0) {
      if (sgn(a[r][c]) < 0) {
        for (auto& x : a[r]) x = -x;
        if (track)
          for (auto& x : (*track)[r]) x = -x;
      }
      pivots.push_back(c);
      ++r;
    }
  }
  return pivots;
}

}  // namespace

ZMatrix hermite_normal_form(ZMatrix a, std::size_t cols) {
  auto pivots = integer_echelon(a, cols, nullptr);
  a.resize(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
  }
  return a;
}

ZMatrix integer_kernel(const ZMatrix& a, std::size_t cols) {
  // Row-reduce a^T while tracking the unimodular transform; rows of the
  // transform whose image vanishes span the kernel.
  ZMatrix t(cols, ZVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  ZMatrix u(cols, ZVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto pivots = integer_echelon(t, a.size(), &u);
  ZMatrix kernel(u.begin() + static_cast<std::ptrdiff_t>(pivots.size()), u.end());
  return hermite_normal_form(kernel, cols);
}

ZVector smith_invariants(ZMatrix a, std::size_t cols) {
  // Alternate row and column echelon passes until diagonal, then fix the
  // divisibility chain with gcd/lcm swaps.
  std::size_t rows = a.size();
  for (;;) {
    auto h = hermite_normal_form(a, cols);
    ZMatrix tr(cols, ZVector(h.size()));
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) tr[j][i] = h[i][j];
    auto h2 = hermite_normal_form(tr, h.size());
    bool diagonal = true;
    for (std::size_t i = 0; i < h2.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j)
        if (i != j && sgn(h2[i][j]) != 0) diagonal = false;
    cols = h.size();
    a = std::move(h2);
    rows = a.size();
    if (diagonal) break;
  }
  ZVector d;
  for (std::size_t i = 0; i < rows; ++i) d.push_back(abs(a[i][i]));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return d;
}

ZMatrix saturate(const SublatticeSpan& span) {
  const std::size_t n = span.ambient_dim;
  QMatrix gens;
  for (const auto& g : span.generators) {
    if (g.size() != n) fail(ErrorCode::DimensionMismatch, "span generator of wrong length");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return {};
  // Z^n ∩ span = integer kernel of the orthogonal complement.
  QMatrix ortho = linalg::nullspace(gens, n);
  ZMatrix constraints;
  for (const auto& o : ortho) constraints.push_back(primitive(o));
  if (constraints.empty()) {
    ZMatrix id(n, ZVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(constraints, n);
}

std::optional<Integer> lattice_index(const std::vector<SublatticeSpan>& spans) {
  if (spans.empty()) return std::nullopt;
  const std::size_t n = spans.front().ambient_dim;
  ZMatrix stacked;
  for (const auto& s : spans) {
    if (s.ambient_dim != n) fail(ErrorCode::DimensionMismatch, "spans in different ambient spaces");
    for (const auto& g : s.generators)
      for (const auto& q : g)
        if (!is_integral(q)) fail(ErrorCode::Precondition, "non-integral span generator");
    for (auto& row : saturate(s)) stacked.push_back(std::move(row));
  }
  if (n == 0) return Integer(1);
  auto h = hermite_normal_form(stacked, n);
  if (h.size() < n) return std::nullopt;
  Integer index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= h[i][i];
  return index;
}

}  // namespace tropical::lattice
