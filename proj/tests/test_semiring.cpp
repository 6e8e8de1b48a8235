#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tropical/semiring.hpp"

using namespace tropical;
using testing_support::Rng;

namespace {

const Convention kMin = Convention::Min;
const Convention kMax = Convention::Max;

TropicalNumber tn(long v, Convention c = kMin) { return TropicalNumber(v, c); }

// Oracle for a tropical determinant with finite entries.
Rational brute_det(const QMatrix& m, Convention c) {
  auto better = [c](const Rational& x, const Rational& y) { return c == kMin ? x < y : x > y; };
  return testing_support::brute_force_assignment(m, better, Rational(0));
}

}  // namespace

TEST_CASE("addition and multiplication") {
  CHECK(trop_add(tn(3), tn(5)) == tn(3));
  CHECK(trop_add(tn(3, kMax), tn(5, kMax)) == tn(5, kMax));
  CHECK(trop_add(tn(-4), TropicalNumber::infinite()) == tn(-4));
  CHECK(trop_mul(tn(3), tn(5)) == tn(8));
  CHECK(trop_mul(tn(0), tn(7)) == tn(7));
  CHECK(trop_mul(tn(-1), tn(1)) == tn(0));
  CHECK(trop_mul(tn(9), TropicalNumber::infinite()).is_infinite());
  CHECK_THROWS_AS(trop_add(tn(1), tn(1, kMax)), Error);
  CHECK_THROWS_AS(trop_mul(tn(1), tn(1, kMax)), Error);
}

TEST_CASE("ordering") {
  CHECK(trop_compare(tn(2), tn(7)) == std::strong_ordering::less);
  CHECK(trop_compare(tn(2, kMax), tn(7, kMax)) == std::strong_ordering::greater);
  CHECK(trop_compare(TropicalNumber::infinite(), tn(-1000)) == std::strong_ordering::less);
  CHECK(trop_compare(TropicalNumber::infinite(kMax), tn(1000, kMax)) == std::strong_ordering::less);
}

TEST_CASE("semiring axioms on random triples") {
  Rng rng(11);
  for (auto c : {kMin, kMax})
    for (int i = 0; i < 300; ++i) {
      auto pick = [&] {
        return rng.integer(0, 9) == 0 ? TropicalNumber::infinite(c) : TropicalNumber(rng.rational(), c);
      };
      auto a = pick(), b = pick(), d = pick();
      CHECK(a + b == b + a);
      CHECK((a + b) + d == a + (b + d));
      CHECK(a + a == a);
      CHECK(a * b == b * a);
      CHECK((a * b) * d == a * (b * d));
      CHECK(a * (b + d) == a * b + a * d);
      CHECK(a + TropicalNumber::zero(c) == a);
      CHECK(a * TropicalNumber::one(c) == a);
    }
}

TEST_CASE("polynomial evaluation") {
  TropicalPolynomial line(kMin, 2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}});
  CHECK(trop_eval(line, {1, 2}) == tn(0));
  TropicalPolynomial f(kMin, 2, {{{1, 0}, 0}, {{0, 1}, 1}});
  CHECK(trop_eval(f, {3, 1}) == tn(2));
  CHECK_THROWS_AS(trop_eval(f, {1}), Error);
  CHECK(line.optimal_terms({0, 0}).size() == 3);
  CHECK(line.optimal_terms({5, 7}).size() == 1);
  CHECK_THROWS_AS(TropicalPolynomial(kMin, 2, {}), Error);
  CHECK_THROWS_AS(TropicalPolynomial(kMin, 2, {{{1}, 0}}), Error);
}

TEST_CASE("evaluation is concave under MIN, convex under MAX, and the product is multiplicative") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = trial % 2 ? kMin : kMax;
    auto random_poly = [&] {
      std::map<Exponent, Rational> t;
      int k = static_cast<int>(rng.integer(1, 5));
      for (int i = 0; i < k; ++i) t[{rng.integer(-2, 3), rng.integer(-2, 3)}] = rng.rational(-5, 5);
      return TropicalPolynomial(c, 2, t);
    };
    auto f = random_poly(), g = random_poly();
    QVector w1{rng.rational(), rng.rational()}, w2{rng.rational(), rng.rational()};
    Rational lambda(rng.integer(0, 10), 10);
    lambda.canonicalize();
    QVector mid{lambda * w1[0] + (1 - lambda) * w2[0], lambda * w1[1] + (1 - lambda) * w2[1]};
    Rational chord = lambda * f.eval(w1).value() + (1 - lambda) * f.eval(w2).value();
    // a minimum of affine functions lies above its chords
    if (c == kMin)
      CHECK(f.eval(mid).value() >= chord);
    else
      CHECK(f.eval(mid).value() <= chord);
    CHECK(trop_eval(trop_product(f, g), w1) == trop_eval(f, w1) * trop_eval(g, w1));
  }
}

TEST_CASE("tropical determinant") {
  auto inf = TropicalNumber::infinite();
  CHECK(trop_det(TropicalMatrix(2, 2, {tn(0), inf, inf, tn(0)})) == tn(0));
  CHECK(trop_det(TropicalMatrix::from_rationals({{1, 2}, {3, 4}})) == tn(5));
  CHECK(trop_det(TropicalMatrix::from_rationals({{1, 2}, {3, 4}}, kMax)) == tn(5, kMax));
  CHECK(trop_det(TropicalMatrix(2, 2, {inf, inf, tn(1), tn(2)})).is_infinite());
  CHECK(trop_det(TropicalMatrix(2, 2, {inf, tn(3), tn(4), inf})) == tn(7));
  CHECK_THROWS_AS(trop_det(TropicalMatrix::from_rationals({{1, 2}})), Error);
}

TEST_CASE("tropical determinant agrees with permutation enumeration") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    auto c = trial % 3 == 0 ? kMax : kMin;
    QMatrix m(n, QVector(n));
    for (auto& row : m)
      for (auto& x : row) x = rng.rational();
    CHECK(trop_det(TropicalMatrix::from_rationals(m, c)).value() == brute_det(m, c));
  }
}

TEST_CASE("tropical minors") {
  auto single = trop_minors(TropicalMatrix::from_rationals({{4, 9}}));
  CHECK(single.at({0}) == tn(4));
  CHECK(single.at({1}) == tn(9));
  auto m = trop_minors(TropicalMatrix::from_rationals({{0, 0, 0}, {0, 1, 2}}));
  CHECK(m.size() == 3);
  CHECK(m.at({0, 1}) == tn(0));
  CHECK(m.at({0, 2}) == tn(0));
  CHECK(m.at({1, 2}) == tn(1));
  CHECK_THROWS_AS(trop_minors(TropicalMatrix::from_rationals({{1}, {2}})), Error);

  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a(2, QVector(4));
    for (auto& row : a)
      for (auto& x : row) x = rng.rational();
    auto minors = trop_minors(TropicalMatrix::from_rationals(a));
    CHECK(minors.size() == 6);
    for (const auto& [cols, val] : minors) {
      QMatrix sub = {{a[0][cols[0]], a[0][cols[1]]}, {a[1][cols[0]], a[1][cols[1]]}};
      CHECK(val.value() == brute_det(sub, kMin));
    }
  }
}
