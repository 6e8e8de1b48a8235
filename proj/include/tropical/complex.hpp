#pragma once

#include "tropical/polyhedron.hpp"

#include <optional>

namespace tropical {

/// Weighted polyhedral complex given by its maximal cells. Cells of lower
/// dimension are derived on demand.
struct WeightedComplex {
  std::size_t ambient_dim = 0;
  std::vector<Polyhedron> cells;
  std::vector<Integer> weights;  // one positive weight per cell

  bool empty() const { return cells.empty(); }
  bool pure() const;
  /// Common dimension of the maximal cells; -1 when empty, NonPure if mixed.
  int dim() const;
  void add(Polyhedron cell, Integer weight);
};

struct VerticesAndRays {
  QMatrix vertices;   // sorted
  QMatrix rays;       // primitive, modulo lineality, sorted
  QMatrix lineality;  // basis of the common lineality space
  /// Per maximal cell: indices into vertices, then rays offset by #vertices.
  std::vector<std::vector<std::size_t>> cells;
};

VerticesAndRays vertices_and_rays(const WeightedComplex& c);

struct BalancingReport {
  bool balanced = true;
  std::optional<Polyhedron> violation;  // first unbalanced codimension-one cell
  QVector defect;                        // weighted normal sum at the violation
};

/// Balancing at every codimension-one cell (NonPure for a non-pure complex).
BalancingReport check_balancing(const WeightedComplex& c);

/// Primitive lattice normal of `cell` relative to its facet `facet_index`,
/// pointing into the cell (defined modulo the facet's lattice).
QVector primitive_normal(const Polyhedron& cell, std::size_t facet_index);

/// A cell with a signed weight, used for refinement and overlays.
struct WeightedPiece {
  Polyhedron cell;
  Integer weight;
};

/// Common refinement of equidimensional pieces: pieces with equal affine
/// hull are cut along each other's facet hyperplanes; identical atoms have
/// their weights summed; atoms of total weight 0 are dropped.
std::vector<WeightedPiece> common_refinement(const std::vector<WeightedPiece>& pieces);

/// Same support and multiplicity function (generic points of the top cells).
bool equal_up_to_refinement(const WeightedComplex& a, const WeightedComplex& b);

/// Sum of the weights of maximal cells containing x.
Integer multiplicity_at(const WeightedComplex& c, const QVector& x);

}  // namespace tropical
