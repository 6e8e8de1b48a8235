#pragma once

#include "tropical/complex.hpp"

#include <cstdint>

namespace tropical {

struct PerturbationVector {
  enum class Provenance { User, Seeded };

  QVector v;
  Provenance provenance = Provenance::User;
  std::uint64_t seed = 0;

  static PerturbationVector user(QVector v);
  /// Deterministic vector with nonzero numerators over distinct large primes.
  static PerturbationVector seeded(std::size_t n, std::uint64_t seed);
};

inline constexpr std::uint64_t kDefaultPerturbationSeed = 0x7e5eed;
inline constexpr int kPerturbationRetries = 16;

/// Stable intersection via the displacement rule. A user vector that turns
/// out to be non-generic raises NonGenericPerturbation; a seeded vector is
/// replaced by the next seed, at most kPerturbationRetries times. Both
/// inputs must be balanced (Precondition otherwise).
WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b,
                                    const PerturbationVector& v);
WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b,
                                    std::uint64_t seed = kDefaultPerturbationSeed);

/// Number of points of the iterated stable intersection, with multiplicity.
/// Codimensions must add up to the ambient dimension (NonComplementary);
/// an empty complex makes the number 0.
Integer intersection_number(const std::vector<WeightedComplex>& complexes,
                            std::uint64_t seed = kDefaultPerturbationSeed);

/// Every pair of intersecting maximal cells meets in the expected codimension
/// and in the relative interiors of both cells.
bool is_transverse(const WeightedComplex& a, const WeightedComplex& b);

}  // namespace tropical
