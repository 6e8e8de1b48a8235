#include "tropical/polyhedron.hpp"

#include "tropical/linalg.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>

namespace tropical {

namespace {

using Bits = boost::dynamic_bitset<>;

struct DDRay {
  QVector v;
  Bits zero;
};

void axpy_out(QVector& r, const QVector& l0, const Rational& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (sgn(l0[j]) != 0) r[j] -= factor * l0[j];
}

// Removes from the lineality basis a vector l0 with a.l0 != 0 and makes the
// remaining lineality vectors and all rays orthogonal to a along l0.
// Returns l0 oriented so that a.l0 > 0, or nullopt when a vanishes on lin.
std::optional<QVector> split_lineality(QMatrix& lin, std::vector<DDRay>& rays, const QVector& a) {
  std::size_t pick = lin.size();
  for (std::size_t i = 0; i < lin.size(); ++i)
    if (sgn(dot(a, lin[i])) != 0) {
      pick = i;
      break;
    }
  if (pick == lin.size()) return std::nullopt;
  QVector l0 = std::move(lin[pick]);
  lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
  Rational al0 = dot(a, l0);
  if (sgn(al0) < 0) {
    for (auto& x : l0) x = -x;
    al0 = -al0;
  }
  for (auto& l : lin) axpy_out(l, l0, dot(a, l) / al0);
  for (auto& r : rays) {
    axpy_out(r.v, l0, dot(a, r.v) / al0);
    r.v = primitive_rational(r.v);
  }
  return primitive_rational(l0);
}

// Homogeneous generators -> V-data helpers.
QVector tail(const QVector& v) { return QVector(v.begin() + 1, v.end()); }

QVector with_head(const Rational& h, const QVector& v) {
  QVector out;
  out.reserve(v.size() + 1);
  out.push_back(h);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ConeGenerators cone_generators(const QMatrix& ineq, const QMatrix& eq, std::size_t d) {
  QMatrix lin = linalg::identity(d);
  std::vector<DDRay> rays;
  const std::size_t m = ineq.size();
  for (const auto& a : eq) split_lineality(lin, rays, a);

  for (std::size_t k = 0; k < m; ++k) {
    const QVector& a = ineq[k];
    if (auto l0 = split_lineality(lin, rays, a)) {
      for (auto& r : rays) r.zero.set(k);
      DDRay nr{std::move(*l0), Bits(m)};
      for (std::size_t j = 0; j < k; ++j) nr.zero.set(j);
      rays.push_back(std::move(nr));
      continue;
    }
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(val[i]) == 0) rays[i].zero.set(k);
      continue;
    }
    // A pair spans a 2-face only if enough constraints are tight on both.
    std::size_t threshold = 0;
    if (!pos.empty()) {
      QMatrix span = lin;
      for (const auto& r : rays) span.push_back(r.v);
      std::size_t cone_dim = linalg::rank(span, d);
      std::size_t pointed = cone_dim - lin.size();
      threshold = pointed >= 2 ? pointed - 2 : 0;
    }
    std::vector<DDRay> next;
    for (auto p : pos)
      for (auto q : neg) {
        Bits s = rays[p].zero & rays[q].zero;
        if (s.count() < threshold) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && s.is_subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        QVector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        s.set(k);
        next.push_back({primitive_rational(v), std::move(s)});
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int sg = sgn(val[i]);
      if (sg < 0) continue;
      if (sg == 0) rays[i].zero.set(k);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }
  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

ConeGenerators cone_facets(const QMatrix& rays, const QMatrix& lineality, std::size_t d) {
  // The dual cone {y : y.r >= 0, y.l = 0} has the facet normals as rays.
  return cone_generators(rays, lineality, d);
}

// --- Polyhedron ---------------------------------------------------------

namespace {

struct Canonical {
  QMatrix vertices, rays, lineality;
};

void sort_unique(QMatrix& m) {
  std::sort(m.begin(), m.end(), lex_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

}  // namespace

void Polyhedron::finish_from_generators(const ConeGenerators& homog) {
  // homog.rays: extreme homogeneous generators (t, x), t >= 0.
  QMatrix lin;
  for (const auto& l : homog.lineality) lin.push_back(tail(l));
  lineality_ = linalg::row_basis(lin, n_);
  vertices_.clear();
  rays_.clear();
  for (const auto& g : homog.rays) {
    if (sgn(g[0]) > 0) {
      QVector v = scale(tail(g), 1 / g[0]);
      vertices_.push_back(linalg::project_out(lineality_, v));
    } else {
      QVector r = linalg::project_out(lineality_, tail(g));
      if (!is_zero(r)) rays_.push_back(primitive_rational(r));
    }
  }
  sort_unique(vertices_);
  sort_unique(rays_);
  empty_ = vertices_.empty();
  if (empty_) {
    *this = empty_set(n_);
    return;
  }
  QMatrix span = lineality_;
  for (const auto& r : rays_) span.push_back(r);
  for (std::size_t i = 1; i < vertices_.size(); ++i) span.push_back(sub(vertices_[i], vertices_[0]));
  dim_ = static_cast<int>(linalg::rank(span, n_));
}

// Canonical H-representation from the (already canonical) V-data.
void Polyhedron::compute_h() {
  ineq_a_.clear();
  ineq_b_.clear();
  eq_a_.clear();
  eq_b_.clear();
  const std::size_t d = n_ + 1;
  QMatrix gens, lin;
  for (const auto& v : vertices_) gens.push_back(with_head(1, v));
  for (const auto& r : rays_) gens.push_back(with_head(0, r));
  for (const auto& l : lineality_) lin.push_back(with_head(0, l));
  ConeGenerators dual = cone_facets(gens, lin, d);

  // Equations y0 + y'.x = 0, stored as rows (y', -y0) in reduced echelon form.
  QMatrix eqrows;
  for (const auto& y : dual.lineality) {
    QVector row = tail(y);
    row.push_back(-y[0]);
    eqrows.push_back(std::move(row));
  }
  auto e = linalg::rref(eqrows, d);
  QMatrix normals;
  for (auto& row : e.rows) {
    eq_b_.push_back(row.back());
    row.pop_back();
    eq_a_.push_back(row);
    normals.push_back(std::move(row));
  }
  // Inequalities -y'.x <= y0, reduced modulo the equations, made primitive.
  std::vector<std::pair<QVector, Rational>> rows;
  for (const auto& y : dual.rays) {
    QVector a = scale(tail(y), -1);
    Rational b = y[0];
    if (!normals.empty()) {
      QVector pa = linalg::project_out(normals, a);
      // b shifts by the same combination of equation right-hand sides.
      QVector diff = sub(a, pa);
      auto c = linalg::solve(linalg::transpose(normals, n_), diff, normals.size());
      for (std::size_t i = 0; i < normals.size(); ++i) b -= (*c)[i] * eq_b_[i];
      a = std::move(pa);
    }
    if (is_zero(a)) continue;
    QVector pa = primitive_rational(a);
    Rational s;
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(a[j]) != 0) {
        s = pa[j] / a[j];
        break;
      }
    rows.emplace_back(std::move(pa), b * s);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return lex_less(x.first, y.first);
    return x.second < y.second;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (auto& [a, b] : rows) {
    ineq_a_.push_back(std::move(a));
    ineq_b_.push_back(std::move(b));
  }
}

Polyhedron Polyhedron::from_h(std::size_t n, const QMatrix& ineq_a, const QVector& ineq_b,
                              const QMatrix& eq_a, const QVector& eq_b) {
  if (ineq_a.size() != ineq_b.size() || eq_a.size() != eq_b.size())
    fail(ErrorCode::DimensionMismatch, "inequality system shape mismatch");
  QMatrix ineq, eq;
  QVector t0(n + 1, 0);
  t0[0] = 1;
  ineq.push_back(t0);
  for (std::size_t i = 0; i < ineq_a.size(); ++i) {
    if (ineq_a[i].size() != n) fail(ErrorCode::DimensionMismatch, "inequality of wrong length");
    ineq.push_back(with_head(ineq_b[i], scale(ineq_a[i], -1)));
  }
  for (std::size_t i = 0; i < eq_a.size(); ++i) {
    if (eq_a[i].size() != n) fail(ErrorCode::DimensionMismatch, "equation of wrong length");
    eq.push_back(with_head(eq_b[i], scale(eq_a[i], -1)));
  }
  Polyhedron p;
  p.n_ = n;
  p.finish_from_generators(cone_generators(ineq, eq, n + 1));
  if (!p.empty_) p.compute_h();
  return p;
}

Polyhedron Polyhedron::from_v(std::size_t n, const QMatrix& vertices, const QMatrix& rays,
                              const QMatrix& lineality) {
  if (vertices.empty()) return empty_set(n);
  for (const auto* m : {&vertices, &rays, &lineality})
    for (const auto& v : *m)
      if (v.size() != n) fail(ErrorCode::DimensionMismatch, "generator of wrong length");
  const std::size_t d = n + 1;
  QMatrix gens, lin;
  for (const auto& v : vertices) gens.push_back(with_head(1, v));
  for (const auto& r : rays)
    if (!is_zero(r)) gens.push_back(with_head(0, r));
  for (const auto& l : lineality)
    if (!is_zero(l)) lin.push_back(with_head(0, l));
  lin = linalg::row_basis(lin, d);
  // Keep the extreme generators: tight facets of the homogenized cone must
  // have rank d - dim(lin) - 1 together with its equations.
  ConeGenerators dual = cone_facets(gens, lin, d);
  ConeGenerators extreme;
  extreme.lineality = lin;
  const std::size_t target = d - lin.size() - 1;
  for (const auto& g : gens) {
    QMatrix tight = dual.lineality;
    for (const auto& y : dual.rays)
      if (sgn(dot(y, g)) == 0) tight.push_back(y);
    if (linalg::rank(tight, d) == target) extreme.rays.push_back(g);
  }
  Polyhedron p;
  p.n_ = n;
  p.finish_from_generators(extreme);
  if (!p.empty_) p.compute_h();
  return p;
}

Polyhedron Polyhedron::point(const QVector& p) { return from_v(p.size(), {p}); }

Polyhedron Polyhedron::whole_space(std::size_t n) {
  return from_v(n, {QVector(n, 0)}, {}, linalg::identity(n));
}

Polyhedron Polyhedron::empty_set(std::size_t n) {
  Polyhedron p;
  p.n_ = n;
  p.empty_ = true;
  p.dim_ = -1;
  p.ineq_a_ = {QVector(n, 0)};
  p.ineq_b_ = {Rational(-1)};
  return p;
}

bool Polyhedron::contains(const QVector& x) const {
  if (empty_) return false;
  for (std::size_t i = 0; i < eq_a_.size(); ++i)
    if (dot(eq_a_[i], x) != eq_b_[i]) return false;
  for (std::size_t i = 0; i < ineq_a_.size(); ++i)
    if (dot(ineq_a_[i], x) > ineq_b_[i]) return false;
  return true;
}

bool Polyhedron::relative_interior_contains(const QVector& x) const {
  if (empty_) return false;
  for (std::size_t i = 0; i < eq_a_.size(); ++i)
    if (dot(eq_a_[i], x) != eq_b_[i]) return false;
  for (std::size_t i = 0; i < ineq_a_.size(); ++i)
    if (dot(ineq_a_[i], x) >= ineq_b_[i]) return false;
  return true;
}

QVector Polyhedron::relative_interior_point() const {
  if (empty_) fail(ErrorCode::Precondition, "empty polyhedron has no interior point");
  QVector p(n_, 0);
  for (const auto& v : vertices_) p = add(p, v);
  p = scale(p, Rational(1, static_cast<unsigned long>(vertices_.size())));
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

QMatrix Polyhedron::linear_span() const {
  if (empty_) return {};
  return linalg::nullspace(eq_a_, n_);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.n_ != n_) fail(ErrorCode::DimensionMismatch, "polyhedra in different spaces");
  if (empty_ || other.empty_) return empty_set(n_);
  QMatrix a = ineq_a_, e = eq_a_;
  QVector b = ineq_b_, f = eq_b_;
  a.insert(a.end(), other.ineq_a_.begin(), other.ineq_a_.end());
  b.insert(b.end(), other.ineq_b_.begin(), other.ineq_b_.end());
  e.insert(e.end(), other.eq_a_.begin(), other.eq_a_.end());
  f.insert(f.end(), other.eq_b_.begin(), other.eq_b_.end());
  return from_h(n_, a, b, e, f);
}

Polyhedron Polyhedron::translate(const QVector& v) const {
  if (v.size() != n_) fail(ErrorCode::DimensionMismatch, "translation of wrong length");
  if (empty_) return *this;
  Polyhedron p = *this;
  QVector shift = linalg::project_out(lineality_, v);
  for (auto& x : p.vertices_) x = add(x, shift);
  sort_unique(p.vertices_);
  for (std::size_t i = 0; i < p.eq_a_.size(); ++i) p.eq_b_[i] += dot(p.eq_a_[i], v);
  std::vector<std::pair<QVector, Rational>> rows;
  for (std::size_t i = 0; i < p.ineq_a_.size(); ++i)
    rows.emplace_back(p.ineq_a_[i], p.ineq_b_[i] + dot(p.ineq_a_[i], v));
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return lex_less(x.first, y.first);
    return x.second < y.second;
  });
  p.ineq_a_.clear();
  p.ineq_b_.clear();
  for (auto& [a, b] : rows) {
    p.ineq_a_.push_back(std::move(a));
    p.ineq_b_.push_back(std::move(b));
  }
  return p;
}

Polyhedron Polyhedron::facet(std::size_t i) const {
  const QVector& a = ineq_a_.at(i);
  const Rational& b = ineq_b_.at(i);
  QMatrix vs, rs;
  for (const auto& v : vertices_)
    if (dot(a, v) == b) vs.push_back(v);
  for (const auto& r : rays_)
    if (sgn(dot(a, r)) == 0) rs.push_back(r);
  return from_v(n_, vs, rs, lineality_);
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  if (empty_) return out;
  for (std::size_t i = 0; i < ineq_a_.size(); ++i) out.push_back(facet(i));
  return out;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::vector<Polyhedron> out;
  if (empty_) return out;
  std::set<Polyhedron> seen{*this};
  std::vector<Polyhedron> frontier{*this};
  while (!frontier.empty()) {
    std::vector<Polyhedron> next;
    for (const auto& p : frontier)
      for (auto& f : p.facets())
        if (!f.empty() && seen.insert(f).second) next.push_back(std::move(f));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool Polyhedron::has_face(const Polyhedron& f) const {
  if (f.n_ != n_ || f.empty_ || empty_) return false;
  QVector x = f.relative_interior_point();
  if (!contains(x)) return false;
  QMatrix vs, rs;
  for (const auto& v : vertices_) {
    bool tight = true;
    for (std::size_t i = 0; i < ineq_a_.size() && tight; ++i)
      if (dot(ineq_a_[i], x) == ineq_b_[i] && dot(ineq_a_[i], v) != ineq_b_[i]) tight = false;
    if (tight) vs.push_back(v);
  }
  for (const auto& r : rays_) {
    bool tight = true;
    for (std::size_t i = 0; i < ineq_a_.size() && tight; ++i)
      if (dot(ineq_a_[i], x) == ineq_b_[i] && sgn(dot(ineq_a_[i], r)) != 0) tight = false;
    if (tight) rs.push_back(r);
  }
  return from_v(n_, vs, rs, lineality_) == f;
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.empty_ != b.empty_) return a.empty_;
  auto cmp = [](const QMatrix& x, const QMatrix& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), lex_less);
  };
  if (a.vertices_ != b.vertices_) return cmp(a.vertices_, b.vertices_);
  if (a.rays_ != b.rays_) return cmp(a.rays_, b.rays_);
  return cmp(a.lineality_, b.lineality_);
}

}  // namespace tropical
