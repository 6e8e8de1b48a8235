#pragma once

#include "tropical/lattice.hpp"
#include "tropical/rootcount.hpp"
#include "tropical/valuation.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace tropical;

inline ValuedPolynomial polynomial(const ValuedField& k, std::size_t arity,
                                   const std::vector<std::pair<Exponent, const char*>>& terms) {
  std::map<Exponent, Scalar> m;
  for (const auto& [e, c] : terms) m.emplace(e, parse_scalar(c, k));
  return ValuedPolynomial(k, arity, std::move(m));
}

// Plane curves over Q(t) used as the standard pair.
inline ValuedPolynomial curve_f() {
  return polynomial(ValuedField::tadic(), 2, {{{0, 0}, "t^3"}, {{1, 0}, "1"}, {{0, 1}, "t^2"}, {{3, 0}, "1"}, {{1, 2}, "1"}});
}

inline ValuedPolynomial curve_g() {
  return polynomial(ValuedField::tadic(), 2, {{{0, 0}, "t^4"}, {{1, 0}, "t^4"}, {{0, 1}, "t^2"}, {{2, 1}, "1"}, {{0, 3}, "1"}});
}

inline TropicalPolynomial trop_f(Convention c = Convention::Max) { return tropicalize(curve_f(), {ValuedField::tadic(), c}); }
inline TropicalPolynomial trop_g(Convention c = Convention::Max) { return tropicalize(curve_g(), {ValuedField::tadic(), c}); }

inline TropicalPolynomial tropical_line(Convention c, Rational a = 0, Rational b = 0, Rational k = 0) {
  return TropicalPolynomial(c, 2, {{{1, 0}, a}, {{0, 1}, b}, {{0, 0}, k}});
}


// Base sets of three transversality pictures over Q(t).
inline std::vector<ValuedPolynomial> lines(const std::vector<std::array<const char*, 3>>& coeffs) {
  std::vector<ValuedPolynomial> out;
  for (const auto& [a, b, c] : coeffs)
    out.push_back(polynomial(ValuedField::tadic(), 2, {{{1, 0}, a}, {{0, 1}, b}, {{0, 0}, c}}));
  return out;
}
inline std::vector<ValuedPolynomial> transverse_lines() { return lines({{"1", "t^2", "t"}, {"t^2", "1", "1"}, {"t", "1", "t"}}); }
inline std::vector<ValuedPolynomial> concurrent_lines() { return lines({{"1", "t", "1"}, {"t^2", "1", "1"}, {"1", "1", "t"}}); }
inline std::vector<ValuedPolynomial> ray_sharing_lines() { return lines({{"1", "1", "1"}, {"t", "1", "1"}}); }

// Dense system in the variables with every exponent of total degree <= d in every equation.
inline HorizontalSystem dense_system(std::size_t n, long d) {
  HorizontalSystem s;
  s.field = ValuedField::trivial();
  for (std::size_t i = 0; i < n; ++i) {
    s.variables.push_back("x" + std::to_string(i + 1));
    s.base.push_back(ValuedPolynomial::variable(s.field, n, i));
  }
  std::vector<long> e(n, 0);
  for (;;) {
    long deg = 0;
    for (auto x : e) deg += x;
    if (deg <= d) s.beta.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == d) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::vector<std::size_t> all(s.beta.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  s.equations.assign(n, all);
  return s;
}

// Spans from the lower bound in the oscillator count, in the coordinates
// (x1, x2, w, y1..yn, z1..zn): pairs (tau, sigma2) with expected indices mn, mn, 1.
inline std::vector<std::vector<lattice::SublatticeSpan>> oscillator_span_pairs(long n, long m) {
  const std::size_t dim = 3 + 2 * static_cast<std::size_t>(n);
  auto e = [&](std::size_t i) {
    QVector v(dim, 0);
    v[i] = 1;
    return v;
  };
  auto x1 = e(0), x2 = e(1), w = e(2);
  auto y = [&](long i) { return e(2 + static_cast<std::size_t>(i)); };
  auto z = [&](long i) { return e(2 + static_cast<std::size_t>(n + i)); };
  QVector s1 = x1, s2 = add(add(x1, x2), scale(w, m));
  for (long i = 1; i <= n; ++i) {
    s1 = add(s1, y(i));
    s2 = add(s2, scale(add(y(i), z(i)), m * i + 1));
  }
  lattice::SublatticeSpan sigma2{dim, {s1, s2}};
  QMatrix t1{add(add(x1, y(n)), z(n)), x2, w}, t2{add(add(x1, x2), z(n)), w}, t3{w};
  for (long i = 1; i <= n; ++i) {
    t2.push_back(y(i));
    t3.push_back(y(i));
    t3.push_back(z(i));
    if (i < n) {
      t1.push_back(y(i));
      t1.push_back(z(i));
      t2.push_back(z(i));
    }
  }
  return {{{dim, t1}, sigma2}, {{dim, t2}, sigma2}, {{dim, t3}, sigma2}};
}

}  // namespace fixtures
