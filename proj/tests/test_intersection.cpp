#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "tropical/hypersurface.hpp"
#include "tropical/intersection.hpp"

#include <set>

using namespace tropical;
using testing_support::Rng;

namespace {

WeightedComplex hyp(const TropicalPolynomial& f) { return tropical_hypersurface(f).complex; }

RationalPolytope newton_polytope(const TropicalPolynomial& f) {
  QMatrix pts;
  for (const auto& e : f.support()) pts.push_back(QVector(e.begin(), e.end()));
  return convex_hull(pts);
}

std::set<QVector> points_of(const WeightedComplex& c) {
  std::set<QVector> out;
  for (const auto& cell : c.cells) {
    REQUIRE(cell.dim() == 0);
    out.insert(cell.vertices().front());
  }
  return out;
}

Integer total_weight(const WeightedComplex& c) {
  Integer t = 0;
  for (const auto& w : c.weights) t += w;
  return t;
}

TropicalPolynomial random_full_dim(Rng& rng, std::size_t n, Convention conv) {
  for (;;) {
    std::map<Exponent, Rational> m;
    auto terms = static_cast<std::size_t>(rng.integer(static_cast<long>(n) + 1, 6));
    while (m.size() < terms) {
      Exponent e;
      for (std::size_t i = 0; i < n; ++i) e.push_back(rng.integer(0, 3));
      m[e] = rng.integer(-6, 6);
    }
    TropicalPolynomial f(conv, n, m);
    if (affine_dim(newton_polytope(f).vertices) == static_cast<int>(n)) return f;
  }
}

}  // namespace

TEST_CASE("perturbation vectors") {
  auto a = PerturbationVector::seeded(3, 5);
  auto b = PerturbationVector::seeded(3, 5);
  CHECK(a.v == b.v);
  CHECK(a.v != PerturbationVector::seeded(3, 6).v);
  for (const auto& x : a.v) CHECK(sgn(x) != 0);
  CHECK(a.v[0].get_den() != a.v[1].get_den());
  CHECK_THROWS_AS(PerturbationVector::user({0, 0}), Error);
}

TEST_CASE("stable self-intersection of a tropical line") {
  auto line = hyp(fixtures::tropical_line(Convention::Min));
  auto s = stable_intersection(line, line, PerturbationVector::user({1, 2}));
  CHECK(points_of(s) == std::set<QVector>{{0, 0}});
  CHECK(s.weights == std::vector<Integer>{1});
  // a direction along a ray is not generic
  try {
    stable_intersection(line, line, PerturbationVector::user({1, 0}));
    FAIL("expected a non-generic perturbation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonGenericPerturbation);
  }
  // the seeded path recovers on its own
  CHECK(total_weight(stable_intersection(line, line)) == 1);
}

TEST_CASE("two translated lines") {
  auto a = hyp(fixtures::tropical_line(Convention::Min));
  auto b = hyp(fixtures::tropical_line(Convention::Min, 1, 3, 0));
  CHECK(is_transverse(a, b));
  auto s = stable_intersection(a, b);
  REQUIRE(s.cells.size() == 1);
  CHECK(s.weights[0] == 1);
  // b's upward ray from (-1,-3) crosses a's diagonal ray
  CHECK(s.cells[0].vertices().front() == QVector{-1, -1});
  CHECK(multiplicity_at(a, {-1, -1}) == 1);
  CHECK(multiplicity_at(b, {-1, -1}) == 1);
  CHECK_FALSE(is_transverse(a, a));
}

TEST_CASE("lines sharing a ray are not transverse") {
  SemiringMap nu{ValuedField::tadic(), Convention::Min};
  auto k = ValuedField::tadic();
  auto p = fixtures::polynomial(k, 2, {{{1, 0}, "1"}, {{0, 1}, "1"}, {{0, 0}, "1"}});
  auto q = fixtures::polynomial(k, 2, {{{1, 0}, "t"}, {{0, 1}, "1"}, {{0, 0}, "1"}});
  CHECK_FALSE(is_transverse(hyp(tropicalize(p, nu)), hyp(tropicalize(q, nu))));
  // their stable intersection is still a single point
  CHECK(intersection_number({hyp(tropicalize(p, nu)), hyp(tropicalize(q, nu))}) == 1);
}

TEST_CASE("stable intersection of the curves f and g") {
  auto f = fixtures::trop_f();
  auto g = fixtures::trop_g();
  auto hf = hyp(f), hg = hyp(g);
  Rational mv = oracles::inclusion_exclusion_mv({newton_polytope(f), newton_polytope(g)});
  std::set<QVector> first;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto s = stable_intersection(hf, hg, seed);
    if (seed == 1) first = points_of(s);
    CHECK(points_of(s) == first);
    CHECK(from_integer(total_weight(s)) == mv);
    CHECK(check_balancing(s).balanced);
  }
  CHECK(first.size() == 4);
  CHECK(mv == 9);
  CHECK(intersection_number({hf, hg}) == mv.get_num());
}

TEST_CASE("linear Bezout") {
  Rng rng(3);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<WeightedComplex> planes;
    for (std::size_t i = 0; i < n; ++i) {
      std::map<Exponent, Rational> m;
      m[Exponent(n, 0)] = rng.integer(-4, 4);
      for (std::size_t j = 0; j < n; ++j) {
        Exponent e(n, 0);
        e[j] = 1;
        m[e] = rng.integer(-4, 4);
      }
      planes.push_back(hyp(TropicalPolynomial(Convention::Min, n, m)));
    }
    CHECK(intersection_number(planes) == 1);
  }
}

TEST_CASE("preconditions") {
  auto line = hyp(fixtures::tropical_line(Convention::Min));
  try {
    intersection_number({line});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonComplementary);
  }
  auto bad = line;
  bad.weights[0] = 2;
  CHECK_THROWS_AS(stable_intersection(bad, line), Error);
  auto empty = hyp(TropicalPolynomial(Convention::Min, 2, {{{1, 1}, 0}}));
  CHECK(intersection_number({line, empty}) == 0);
  CHECK(stable_intersection(line, empty).empty());
}

TEST_CASE("surfaces in three-space") {
  Rng rng(17);
  for (int t = 0; t < 6; ++t) {
    auto a = hyp(random_full_dim(rng, 3, Convention::Min));
    auto b = hyp(random_full_dim(rng, 3, Convention::Min));
    auto s = stable_intersection(a, b, static_cast<std::uint64_t>(t));
    if (s.empty()) continue;
    CHECK(s.dim() == 1);
    CHECK(check_balancing(s).balanced);
    // perturbation independence up to refinement
    CHECK(equal_up_to_refinement(s, stable_intersection(a, b, static_cast<std::uint64_t>(t + 100))));
  }
}

TEST_CASE("three surfaces agree with the mixed volume") {
  Rng rng(23);
  for (int t = 0; t < 4; ++t) {
    std::vector<TropicalPolynomial> fs;
    std::vector<RationalPolytope> ps;
    for (int i = 0; i < 3; ++i) {
      fs.push_back(random_full_dim(rng, 3, Convention::Max));
      ps.push_back(newton_polytope(fs.back()));
    }
    Integer k = intersection_number({hyp(fs[0]), hyp(fs[1]), hyp(fs[2])});
    CHECK(from_integer(k) == oracles::inclusion_exclusion_mv(ps));
  }
}

TEST_CASE("plane curves agree with the mixed volume") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    auto conv = t % 2 ? Convention::Min : Convention::Max;
    auto f = random_full_dim(rng, 2, conv);
    auto g = random_full_dim(rng, 2, conv);
    Integer k = intersection_number({hyp(f), hyp(g)}, static_cast<std::uint64_t>(t));
    CHECK(from_integer(k) == oracles::inclusion_exclusion_mv({newton_polytope(f), newton_polytope(g)}));
  }
}

TEST_CASE("transverse intersections need no perturbation") {
  Rng rng(59);
  int transverse = 0;
  for (int t = 0; t < 30; ++t) {
    auto a = hyp(random_full_dim(rng, 2, Convention::Min));
    auto b = hyp(random_full_dim(rng, 2, Convention::Min));
    if (!is_transverse(a, b)) continue;
    ++transverse;
    // plain cell-wise intersection weighted by m1 m2 [N : N1 + N2]
    WeightedComplex plain{2, {}, {}};
    for (std::size_t i = 0; i < a.cells.size(); ++i)
      for (std::size_t j = 0; j < b.cells.size(); ++j) {
        Polyhedron s = a.cells[i].intersect(b.cells[j]);
        if (s.empty()) continue;
        auto da = to_integer(primitive_rational(a.cells[i].linear_span()[0]));
        auto db = to_integer(primitive_rational(b.cells[j].linear_span()[0]));
        Integer det = abs(da[0] * db[1] - da[1] * db[0]);
        plain.add(s, a.weights[i] * b.weights[j] * det);
      }
    CHECK(equal_up_to_refinement(stable_intersection(a, b), plain));
  }
  CHECK(transverse > 5);
}

TEST_CASE("tropicalization commutes with intersecting generic lines") {
  // Common root of two linear forms over Q(t), computed by Cramer's rule.
  Rng rng(71);
  auto k = ValuedField::tadic();
  auto coeff = [&] {
    Scalar c = Scalar(Rational(rng.integer(1, 9)) * (rng.coin() ? 1 : -1));
    for (long e = rng.integer(-3, 3); e != 0; e += (e > 0 ? -1 : 1))
      c = e > 0 ? c * Scalar::t() : c / Scalar::t();
    return c;
  };
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    Scalar a1 = coeff(), b1 = coeff(), c1 = coeff(), a2 = coeff(), b2 = coeff(), c2 = coeff();
    Scalar det = a1 * b2 - a2 * b1;
    if (det.is_zero()) continue;
    Scalar x = (b1 * c2 - b2 * c1) / det;
    Scalar y = (a2 * c1 - a1 * c2) / det;
    if (x.is_zero() || y.is_zero()) continue;
    for (auto conv : {Convention::Min, Convention::Max}) {
      SemiringMap nu{k, conv};
      auto p = tropicalize(ValuedPolynomial(k, 2, {{{1, 0}, a1}, {{0, 1}, b1}, {{0, 0}, c1}}), nu);
      auto q = tropicalize(ValuedPolynomial(k, 2, {{{1, 0}, a2}, {{0, 1}, b2}, {{0, 0}, c2}}), nu);
      auto hp = hyp(p), hq = hyp(q);
      if (!is_transverse(hp, hq)) continue;
      ++checked;
      QVector w{valuate(k, x), valuate(k, y)};
      if (conv == Convention::Max) w = scale(w, -1);
      CHECK(points_of(stable_intersection(hp, hq)) == std::set<QVector>{w});
    }
  }
  CHECK(checked > 10);
}
