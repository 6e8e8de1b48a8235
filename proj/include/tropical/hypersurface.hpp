#pragma once

#include "tropical/complex.hpp"
#include "tropical/semiring.hpp"
#include "tropical/subdivision.hpp"

namespace tropical {

/// Tropical hypersurface together with its dual Newton subdivision. A
/// polynomial with a single term yields the empty hypersurface.
struct TropicalHypersurface {
  TropicalPolynomial source;
  RegularSubdivision dual;
  WeightedComplex complex;
  /// Dual edge (support indices on it) of each maximal cell, parallel to complex.cells.
  std::vector<Cell> dual_edges;

  bool empty() const { return complex.empty(); }
};

/// Heights are the coefficients; Lower hull under MIN, Upper hull under MAX.
RegularSubdivision newton_subdivision(const TropicalPolynomial& f);

TropicalHypersurface tropical_hypersurface(const TropicalPolynomial& f);

/// Is the optimum of f at w attained by at least two terms?
bool contains(const TropicalPolynomial& f, const QVector& w);

/// Lattice length of the segment between two integer points.
Integer lattice_length(const QVector& a, const QVector& b);

}  // namespace tropical
