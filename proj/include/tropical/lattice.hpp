#pragma once

#include "tropical/arith.hpp"

#include <optional>

namespace tropical::lattice {

/// Row-style Hermite normal form: the nonzero rows of an upper echelon basis
/// of the integer row lattice, positive pivots, entries above each pivot
/// reduced into [0, pivot).
ZMatrix hermite_normal_form(ZMatrix a, std::size_t cols);

/// Basis of {x in Z^cols : a x = 0}.
ZMatrix integer_kernel(const ZMatrix& a, std::size_t cols);

/// Diagonal of the Smith normal form (nonzero invariant factors only).
ZVector smith_invariants(ZMatrix a, std::size_t cols);

/// Generators of a linear subspace of Q^n (any rational vectors).
struct SublatticeSpan {
  std::size_t ambient_dim = 0;
  QMatrix generators;
};

/// Lattice basis of Z^n ∩ span_Q(generators).
ZMatrix saturate(const SublatticeSpan& span);

/// Index in Z^n of the lattice generated by the saturations of all spans;
/// nullopt stands for an infinite index (rank deficient sum).
std::optional<Integer> lattice_index(const std::vector<SublatticeSpan>& spans);

}  // namespace tropical::lattice
