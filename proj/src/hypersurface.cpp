#include "tropical/hypersurface.hpp"

#include <algorithm>

namespace tropical {

namespace {

QMatrix exponent_points(const TropicalPolynomial& f) {
  QMatrix pts;
  for (const auto& e : f.support()) {
    QVector p;
    for (long x : e) p.push_back(x);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

RegularSubdivision newton_subdivision(const TropicalPolynomial& f) {
  LiftedConfiguration c{exponent_points(f), f.coefficients()};
  return regular_subdivision(c, f.convention() == Convention::Min ? Orientation::Lower : Orientation::Upper);
}

Integer lattice_length(const QVector& a, const QVector& b) {
  return gcd_of(to_integer(sub(b, a)));
}

TropicalHypersurface tropical_hypersurface(const TropicalPolynomial& f) {
  const std::size_t n = f.arity();
  TropicalHypersurface h{f, newton_subdivision(f), WeightedComplex{n, {}, {}}, {}};
  if (f.size() < 2) return h;
  const QMatrix& pts = h.dual.configuration.points;
  const QVector& c = h.dual.configuration.heights;
  const bool min = f.convention() == Convention::Min;
  for (const auto& edge : subdivision_edges(h.dual)) {
    auto by_lex = [&](std::size_t i, std::size_t j) { return lex_less(pts[i], pts[j]); };
    const std::size_t a = *std::min_element(edge.begin(), edge.end(), by_lex);
    const std::size_t b = *std::max_element(edge.begin(), edge.end(), by_lex);
    // Term a is optimal: (a - k).w <= c_k - c_a under MIN, reversed under MAX.
    QMatrix ineq_a;
    QVector ineq_b;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == a) continue;
      if (min) {
        ineq_a.push_back(sub(pts[a], pts[k]));
        ineq_b.push_back(c[k] - c[a]);
      } else {
        ineq_a.push_back(sub(pts[k], pts[a]));
        ineq_b.push_back(c[a] - c[k]);
      }
    }
    Polyhedron cell = Polyhedron::from_h(n, ineq_a, ineq_b, {sub(pts[a], pts[b])}, {Rational(c[b] - c[a])});
    h.complex.add(std::move(cell), lattice_length(pts[a], pts[b]));
    h.dual_edges.push_back(edge);
  }
  return h;
}

bool contains(const TropicalPolynomial& f, const QVector& w) {
  return f.optimal_terms(w).size() >= 2;
}

}  // namespace tropical
