#pragma once

#include "tropical/intersection.hpp"
#include "tropical/subdivision.hpp"
#include "tropical/valuation.hpp"

#include <optional>
#include <string>

namespace tropical {

/// f_i = sum over j in equations[i] of a_ij * s_j with s_j = b^beta_j.
/// A support index may be shared by several equations, each use carrying its
/// own parameter.
struct HorizontalSystem {
  ValuedField field;
  std::vector<std::string> variables;
  std::vector<ValuedPolynomial> base;
  std::vector<std::vector<long>> beta;              // one row of length |base| per support element
  std::vector<std::vector<std::size_t>> equations;  // support indices used by each equation
  std::vector<std::string> parameters;              // one name per use, in equation order
  std::vector<ValuedPolynomial> support;            // explicit s_j, optional

  std::size_t n_vars() const { return variables.size(); }
  std::size_t support_size() const { return beta.size(); }
  /// Shape checks (DimensionMismatch, EmptyInput, ZeroInput, FieldMismatch).
  void validate() const;
  /// s_j computed from the base (Laurent monomials in the base elements are
  /// returned as numerator and denominator).
  std::pair<ValuedPolynomial, ValuedPolynomial> support_fraction(std::size_t j) const;
};

/// Exact check s_j * prod b^{-beta-} == prod b^{beta+}; Precondition without
/// an explicit support.
bool verify_support(const HorizontalSystem& s);

struct TransversalityWitness {
  std::vector<std::size_t> base_indices;  // base elements taking part (non-monomial ones)
  MixedCell cell;                          // summands index the points of those elements
  std::vector<QMatrix> summand_points;
  int deficit = 0;                         // sum of summand dimensions minus cell dimension
};

struct TransversalityCertificate {
  bool verdict = true;
  std::optional<TransversalityWitness> witness;  // present iff verdict is false
};

/// Dimension additivity on every cell of the mixed subdivision of the base's
/// Newton polytopes; monomial and constant elements are skipped.
TransversalityCertificate is_tropically_transverse(const std::vector<ValuedPolynomial>& base, const SemiringMap& map);

struct ModifiedSystem {
  std::vector<std::string> variables;  // x..., then y..., then z...
  std::vector<ValuedPolynomial> f_hat, g_hat, h_hat;
  /// f_hat, g_hat, h_hat in this order.
  std::vector<ValuedPolynomial> equations() const;
};

/// The modification at the canonical parameter point (every parameter 1).
/// With `simplify`, monomial base elements are substituted, support elements
/// that become monomials in x enter f_hat directly, and repeated rows share
/// one z variable.
ModifiedSystem build_modification(const HorizontalSystem& s, bool simplify);

inline constexpr std::uint64_t kDefaultLiftingSeed = 0x11f7;

/// Normalized mixed volume of n lattice polytopes in R^n (MV(P,...,P) is the
/// normalized volume of P), summed over the fine mixed cells of a random
/// lifting. DimensionMismatch unless there are exactly n polytopes.
Integer mixed_volume(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed = kDefaultLiftingSeed);

struct RootCountOptions {
  bool simplify = true;
  bool check_intersection = false;
  Convention convention = Convention::Min;
  std::uint64_t seed = kDefaultLiftingSeed;
};

struct RootCount {
  Integer count;
  std::optional<Integer> intersection_number;  // when requested
  std::size_t modified_equations = 0;
};

/// NonSquare unless #equations == #variables; NotTransverse when the base
/// fails the transversality check.
RootCount generic_root_count(const HorizontalSystem& s, const RootCountOptions& options = {});

/// The two-equation oscillator family with base {x1, x2, x1^m + x2^m}.
HorizontalSystem nonlinear_resonator_system(long n, long m);

}  // namespace tropical
