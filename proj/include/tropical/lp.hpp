#pragma once

#include "tropical/arith.hpp"

// Dense exact simplex method (two phases, Bland's rule). The constraint
// matrix is always rational; right-hand sides may carry an infinitesimal
// (EpsRational), which is what the perturbation tests need.
namespace tropical::lp {

enum class Status { Optimal, Infeasible, Unbounded };

template <class V>
struct Result {
  Status status = Status::Infeasible;
  V value{};
  std::vector<V> x;
};

/// maximize c.x subject to ineq x <= ineq_rhs, eq x = eq_rhs, x free in Q^n.
template <class V>
Result<V> maximize(const QVector& c, const QMatrix& ineq, const std::vector<V>& ineq_rhs,
                   const QMatrix& eq, const std::vector<V>& eq_rhs, std::size_t n);

template <class V>
bool feasible(const QMatrix& ineq, const std::vector<V>& ineq_rhs, const QMatrix& eq,
              const std::vector<V>& eq_rhs, std::size_t n) {
  return maximize<V>(QVector(n, 0), ineq, ineq_rhs, eq, eq_rhs, n).status != Status::Infeasible;
}

extern template Result<Rational> maximize<Rational>(const QVector&, const QMatrix&,
                                                    const std::vector<Rational>&, const QMatrix&,
                                                    const std::vector<Rational>&, std::size_t);
extern template Result<EpsRational> maximize<EpsRational>(const QVector&, const QMatrix&,
                                                          const std::vector<EpsRational>&,
                                                          const QMatrix&,
                                                          const std::vector<EpsRational>&,
                                                          std::size_t);

}  // namespace tropical::lp
