#pragma once

#include "tropical/arith.hpp"

#include <optional>

namespace tropical {

/// Generators of a polyhedral cone: extreme rays (primitive, modulo the
/// lineality space) and a lineality basis.
struct ConeGenerators {
  QMatrix rays;
  QMatrix lineality;
};

/// Double description: generators of {x in Q^d : ineq x >= 0, eq x = 0}.
ConeGenerators cone_generators(const QMatrix& ineq, const QMatrix& eq, std::size_t d);

/// Facets of the cone generated by `rays` and the linear span of `lineality`:
/// returns inequalities (y.x >= 0) in `rays` and equations in `lineality`.
ConeGenerators cone_facets(const QMatrix& rays, const QMatrix& lineality, std::size_t d);

/// A rational polyhedron kept in both representations, each canonical:
///   H: ineq_a x <= ineq_b (facets only), eq_a x = eq_b (reduced echelon);
///   V: vertices + cone(rays) + span(lineality), vertices and rays taken
///      orthogonal to the lineality space, rays primitive, sorted.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_h(std::size_t n, const QMatrix& ineq_a, const QVector& ineq_b,
                           const QMatrix& eq_a = {}, const QVector& eq_b = {});
  static Polyhedron from_v(std::size_t n, const QMatrix& vertices, const QMatrix& rays = {},
                           const QMatrix& lineality = {});
  static Polyhedron point(const QVector& p);
  static Polyhedron whole_space(std::size_t n);
  static Polyhedron empty_set(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  bool empty() const { return empty_; }
  /// -1 for the empty set.
  int dim() const { return dim_; }
  bool bounded() const { return rays_.empty() && lineality_.empty(); }

  const QMatrix& vertices() const { return vertices_; }
  const QMatrix& rays() const { return rays_; }
  const QMatrix& lineality() const { return lineality_; }
  const QMatrix& ineq_a() const { return ineq_a_; }
  const QVector& ineq_b() const { return ineq_b_; }
  const QMatrix& eq_a() const { return eq_a_; }
  const QVector& eq_b() const { return eq_b_; }

  bool contains(const QVector& x) const;
  bool relative_interior_contains(const QVector& x) const;
  /// Barycenter of the vertices plus the sum of the rays.
  QVector relative_interior_point() const;
  /// Basis of the linear space parallel to the affine hull.
  QMatrix linear_span() const;

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron translate(const QVector& v) const;
  /// Face on which the i-th facet inequality is tight.
  Polyhedron facet(std::size_t i) const;
  std::vector<Polyhedron> facets() const;
  /// All nonempty faces, including the polyhedron itself.
  std::vector<Polyhedron> faces() const;
  /// Is `f` (a polyhedron contained in this one) a face of it?
  bool has_face(const Polyhedron& f) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.n_ == b.n_ && a.empty_ == b.empty_ && a.vertices_ == b.vertices_ &&
           a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b);

 private:
  void finish_from_generators(const ConeGenerators& homog);
  void compute_h();

  std::size_t n_ = 0;
  bool empty_ = true;
  int dim_ = -1;
  QMatrix vertices_, rays_, lineality_;
  QMatrix ineq_a_;
  QVector ineq_b_;
  QMatrix eq_a_;
  QVector eq_b_;
};

/// Lexicographic comparison helper for rational vectors.
bool lex_less(const QVector& a, const QVector& b);

}  // namespace tropical
