#pragma once

#include "tropical/polyhedron.hpp"

#include <cstdint>

namespace tropical {

struct RationalPolytope {
  std::size_t ambient_dim = 0;
  QMatrix vertices;  // irredundant, lexicographically sorted

  friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;
};

RationalPolytope convex_hull(const QMatrix& points);
RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);
/// Affine dimension (-1 for no points).
int affine_dim(const QMatrix& points);
/// n! times the Euclidean volume (0 unless full-dimensional).
Rational normalized_volume(const RationalPolytope& p);

/// Injective affine coordinates of points on their own affine hull: the
/// points restricted to a set of coordinate columns. Returns the columns.
std::vector<std::size_t> affine_chart(const QMatrix& points);
QMatrix restrict_columns(const QMatrix& points, const std::vector<std::size_t>& cols);

enum class Orientation { Lower, Upper };

struct LiftedConfiguration {
  QMatrix points;
  QVector heights;
};

using Cell = std::vector<std::size_t>;

struct RegularSubdivision {
  LiftedConfiguration configuration;
  Orientation orientation = Orientation::Lower;
  std::vector<Cell> cells;  // maximal cells, sorted index lists in sorted order
};

RegularSubdivision regular_subdivision(const LiftedConfiguration& c, Orientation o);

/// Pairs (or larger collinear sets) of point indices forming the edges of
/// the maximal cells; each edge lists every configuration point on it.
std::vector<Cell> subdivision_edges(const RegularSubdivision& s);

struct MixedCell {
  std::vector<Cell> summands;     // one index list per configuration
  std::vector<int> summand_dims;  // affine dimension of each summand
  int dim = 0;                    // dimension of the Minkowski sum cell
};

/// Maximal cells of the mixed subdivision induced by the liftings, via the
/// Cayley construction.
std::vector<MixedCell> mixed_subdivision(const std::vector<LiftedConfiguration>& configs, Orientation o);

/// Vertices of the Minkowski sum cell of a mixed cell.
RationalPolytope mixed_cell_polytope(const std::vector<LiftedConfiguration>& configs, const MixedCell& c);

/// Normalized volume of a simplex given by d+1 points in R^d.
Rational simplex_volume(const QMatrix& pts);

}  // namespace tropical
