#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "tropical/rootcount.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using namespace tropical;
using testing_support::Rng;

namespace {

const SemiringMap kMinT{ValuedField::tadic(), Convention::Min};

RationalPolytope random_lattice_polytope(Rng& rng, std::size_t n, std::size_t max_points, long range = 2) {
  QMatrix pts;
  auto count = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_points)));
  for (std::size_t k = 0; k < count; ++k) {
    QVector p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rng.integer(0, range));
    pts.push_back(p);
  }
  return convex_hull(pts);
}

RationalPolytope unit_simplex(std::size_t n) {
  QMatrix pts{QVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  return convex_hull(pts);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Precondition;
}

}  // namespace

TEST_CASE("verify_support") {
  auto k = ValuedField::trivial();
  auto u = ValuedPolynomial::variable(k, 2, 0), v = ValuedPolynomial::variable(k, 2, 1);
  auto q = u.pow(2) + v.pow(2);
  HorizontalSystem s{k, {"u", "v"}, {u, v, q}, {{1, 0, 1}, {0, 0, 0}}, {{0, 1}, {0, 1}}, {}, {u * q, ValuedPolynomial::constant(k, 2, Scalar(1))}};
  CHECK(verify_support(s));
  s.support[0] = u * q + v;
  CHECK_FALSE(verify_support(s));

  HorizontalSystem single{k, {"u"}, {ValuedPolynomial::variable(k, 1, 0)}, {{2}}, {{0}}, {}, {ValuedPolynomial::variable(k, 1, 0).pow(3)}};
  CHECK_FALSE(verify_support(single));
  single.support[0] = ValuedPolynomial::variable(k, 1, 0).pow(2);
  CHECK(verify_support(single));

  // negative exponents are checked by cross-multiplication
  HorizontalSystem laurent{k, {"u", "v"}, {u, q}, {{-1, 1}}, {{0}, {0}}, {}, {u + ValuedPolynomial::monomial(k, {-1, 2})}};
  CHECK(verify_support(laurent));

  single.support.clear();
  CHECK(code_of([&] { verify_support(single); }) == ErrorCode::Precondition);
  single.base[0] = ValuedPolynomial(k, 1, {});
  CHECK(code_of([&] { single.validate(); }) == ErrorCode::ZeroInput);
}

TEST_CASE("transversality of line arrangements") {
  CHECK(is_tropically_transverse(fixtures::transverse_lines(), kMinT).verdict);
  CHECK_FALSE(is_tropically_transverse(fixtures::transverse_lines(), kMinT).witness.has_value());

  auto concurrent = is_tropically_transverse(fixtures::concurrent_lines(), kMinT);
  CHECK_FALSE(concurrent.verdict);
  REQUIRE(concurrent.witness.has_value());
  // three edges meet in the plane: summand dimensions 1 + 1 + 1 over a 2-cell
  CHECK(concurrent.witness->deficit == 1);
  CHECK(concurrent.witness->cell.summand_dims == std::vector<int>{1, 1, 1});
  CHECK(concurrent.witness->cell.dim == 2);

  auto shared = is_tropically_transverse(fixtures::ray_sharing_lines(), kMinT);
  CHECK_FALSE(shared.verdict);
  REQUIRE(shared.witness.has_value());
  CHECK(shared.witness->deficit >= 1);
  CHECK(shared.witness->summand_points.size() == 2);

  CHECK(code_of([] { is_tropically_transverse({}, kMinT); }) == ErrorCode::EmptyInput);
}

TEST_CASE("transversality invariances") {
  auto k = ValuedField::tadic();
  for (auto base : {fixtures::transverse_lines(), fixtures::concurrent_lines(), fixtures::ray_sharing_lines()}) {
    bool verdict = is_tropically_transverse(base, kMinT).verdict;
    std::reverse(base.begin(), base.end());
    CHECK(is_tropically_transverse(base, kMinT).verdict == verdict);
    std::rotate(base.begin(), base.begin() + 1, base.end());
    CHECK(is_tropically_transverse(base, kMinT).verdict == verdict);
    base.push_back(fixtures::polynomial(k, 2, {{{2, 1}, "t"}}));
    base.push_back(fixtures::polynomial(k, 2, {{{0, 0}, "3"}}));
    CHECK(is_tropically_transverse(base, kMinT).verdict == verdict);
  }
  // a single non-monomial element is always transverse
  CHECK(is_tropically_transverse({fixtures::curve_f()}, kMinT).verdict);
}

TEST_CASE("modification of the oscillator") {
  auto s = nonlinear_resonator_system(1, 2);
  CHECK(verify_support(s));
  CHECK(s.support_size() == 5);
  CHECK(s.parameters == std::vector<std::string>{"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"});

  auto full = build_modification(s, false);
  CHECK(full.f_hat.size() == 2);
  CHECK(full.g_hat.size() == 5);
  CHECK(full.h_hat.size() == 3);
  CHECK(full.variables.size() == 10);
  CHECK(full.variables.front() == "x1");
  for (const auto& g : full.g_hat) CHECK(g.terms().size() == 2);
  for (const auto& f : full.f_hat)
    for (const auto& [e, c] : f.terms()) CHECK(std::accumulate(e.begin(), e.end(), 0L) == 1);

  auto simple = build_modification(s, true);
  CHECK(simple.equations().size() == 5);
  CHECK(simple.variables == std::vector<std::string>{"x1", "x2", "y3", "z4", "z5"});
  const auto k = ValuedField::trivial();
  auto var = [&](std::size_t i) { return ValuedPolynomial::variable(k, 5, i); };
  auto one = ValuedPolynomial::constant(k, 5, Scalar(1));
  // f1 = 1 + x1 + x2 + z4, f2 = 1 + x1 + x2 + z5, g = w - (x1^2 + x2^2), p = z4 - x1 w, q = z5 - x2 w
  CHECK(simple.f_hat[0] == one + var(0) + var(1) + var(3));
  CHECK(simple.f_hat[1] == one + var(0) + var(1) + var(4));
  CHECK(simple.h_hat == std::vector<ValuedPolynomial>{var(2) - (var(0).pow(2) + var(1).pow(2))});
  CHECK(simple.g_hat == std::vector<ValuedPolynomial>{var(3) - var(0) * var(2), var(4) - var(1) * var(2)});
}

TEST_CASE("modification of a monomial-only system") {
  auto k = ValuedField::trivial();
  auto x = ValuedPolynomial::variable(k, 1, 0);
  HorizontalSystem s{k, {"x"}, {x}, {{0}, {1}, {3}}, {{0, 1, 2}}, {}, {}};
  auto m = build_modification(s, true);
  CHECK(m.g_hat.empty());
  CHECK(m.h_hat.empty());
  REQUIRE(m.f_hat.size() == 1);
  CHECK(m.f_hat[0] == ValuedPolynomial::constant(k, 1, Scalar(1)) + x + x.pow(3));
  CHECK(generic_root_count(s).count == 3);
}

TEST_CASE("mixed volume fixtures") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(mixed_volume(std::vector<RationalPolytope>(n, unit_simplex(n))) == 1);
  auto square = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(mixed_volume({square, square}) == 2);
  CHECK(mixed_volume({convex_hull({{0, 0}, {1, 0}}), convex_hull({{0, 0}, {0, 1}})}) == 1);
  // parallel segments span nothing
  CHECK(mixed_volume({convex_hull({{0, 0}, {1, 0}}), convex_hull({{0, 0}, {2, 0}})}) == 0);
  CHECK(mixed_volume({convex_hull({{0, 0}}), square}) == 0);
  CHECK(code_of([&] { mixed_volume({square}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { mixed_volume({square, convex_hull({{Rational(1, 2), 0}, {0, 1}})}); }) == ErrorCode::Precondition);
}

TEST_CASE("mixed volume against the inclusion-exclusion oracle") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    std::vector<RationalPolytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(random_lattice_polytope(rng, n, 6));
    Integer mv = mixed_volume(ps, static_cast<std::uint64_t>(t));
    CHECK(from_integer(mv) == oracles::inclusion_exclusion_mv(ps));
    // symmetry and lifting independence
    std::reverse(ps.begin(), ps.end());
    CHECK(mixed_volume(ps, static_cast<std::uint64_t>(t + 1000)) == mv);
  }
}

TEST_CASE("mixed volume diagonal and multilinearity") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = t < 12 ? 2 : 3;
    auto p = random_lattice_polytope(rng, n, 6);
    CHECK(from_integer(mixed_volume(std::vector<RationalPolytope>(n, p))) == normalized_volume(p));
    auto a = random_lattice_polytope(rng, n, 4), b = random_lattice_polytope(rng, n, 4);
    std::vector<RationalPolytope> rest;
    for (std::size_t i = 1; i < n; ++i) rest.push_back(random_lattice_polytope(rng, n, 5));
    auto with = [&](const RationalPolytope& first) {
      std::vector<RationalPolytope> ps{first};
      ps.insert(ps.end(), rest.begin(), rest.end());
      return mixed_volume(ps);
    };
    CHECK(with(minkowski_sum(a, b)) == with(a) + with(b));
  }
}

TEST_CASE("generic root counts") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(generic_root_count(fixtures::dense_system(n, 1)).count == 1);
  CHECK(generic_root_count(fixtures::dense_system(2, 2)).count == 4);
  CHECK(generic_root_count(fixtures::dense_system(3, 2)).count == 8);
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) CHECK(generic_root_count(nonlinear_resonator_system(n, m)).count == 2 * m * n + 1);
}

TEST_CASE("root count preconditions") {
  auto s = fixtures::dense_system(2, 1);
  s.equations.pop_back();
  CHECK(code_of([&] { generic_root_count(s); }) == ErrorCode::NonSquare);

  HorizontalSystem bad;
  bad.field = ValuedField::tadic();
  bad.variables = {"x", "y"};
  bad.base = fixtures::concurrent_lines();
  bad.beta = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}};
  bad.equations = {{0, 1}, {0, 2}};
  CHECK(code_of([&] { generic_root_count(bad); }) == ErrorCode::NotTransverse);

  CHECK(code_of([] { nonlinear_resonator_system(0, 2); }) == ErrorCode::Precondition);
  auto osc = nonlinear_resonator_system(1, 1);
  osc.support[3] = osc.support[4];
  CHECK(code_of([&] { build_modification(osc, true); }) == ErrorCode::Precondition);
}

TEST_CASE("simplification and seeds do not change the count") {
  std::vector<HorizontalSystem> systems{fixtures::dense_system(2, 2), nonlinear_resonator_system(1, 2),
                                        nonlinear_resonator_system(2, 1)};
  HorizontalSystem lines;
  lines.field = ValuedField::tadic();
  lines.variables = {"x", "y"};
  lines.base = fixtures::transverse_lines();
  lines.beta = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  lines.equations = {{0, 1, 4}, {2, 3, 4}};
  systems.push_back(lines);
  for (const auto& s : systems) {
    Integer base = generic_root_count(s).count;
    CHECK(generic_root_count(s, {false}).count == base);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      RootCountOptions o;
      o.seed = seed;
      CHECK(generic_root_count(s, o).count == base);
    }
  }
}

TEST_CASE("root count agrees with the intersection number") {
  RootCountOptions o;
  o.check_intersection = true;
  for (const auto& s : {fixtures::dense_system(2, 1), fixtures::dense_system(2, 2), nonlinear_resonator_system(1, 1)}) {
    auto r = generic_root_count(s, o);
    REQUIRE(r.intersection_number.has_value());
    CHECK(*r.intersection_number == r.count);
  }
}

TEST_CASE("lattice indices in the oscillator bound") {
  for (auto [n, m] : {std::pair{1L, 2L}, std::pair{2L, 2L}, std::pair{2L, 3L}}) {
    auto pairs = fixtures::oscillator_span_pairs(n, m);
    std::vector<Integer> got;
    for (const auto& pair : pairs) {
      auto idx = lattice::lattice_index(pair);
      REQUIRE(idx.has_value());
      got.push_back(*idx);
    }
    CHECK(got == std::vector<Integer>{m * n, m * n, 1});
    CHECK(got[0] + got[1] + got[2] == generic_root_count(nonlinear_resonator_system(n, m)).count);
  }
}
