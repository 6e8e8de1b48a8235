#include "tropical/intersection.hpp"

#include "tropical/lattice.hpp"
#include "tropical/linalg.hpp"
#include "tropical/lp.hpp"

#include <random>

namespace tropical {

PerturbationVector PerturbationVector::user(QVector v) {
  if (is_zero(v)) fail(ErrorCode::Precondition, "perturbation vector must be nonzero");
  return {std::move(v), Provenance::User, 0};
}

PerturbationVector PerturbationVector::seeded(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(1, 1000000);
  Integer p = 1000003 + static_cast<long>(seed % 100000);
  QVector v;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    long a = num(gen);
    Rational q(gen() % 2 ? a : -a, p);
    q.canonicalize();
    v.push_back(q);
  }
  return {std::move(v), Provenance::Seeded, seed};
}

namespace {

struct Displacement {
  bool meets = false;      // cell1 meets cell2 + eps v for all small eps > 0
  bool interior = false;   // ... in the relative interiors of both
};

// LP in (x, s): cell1 and cell2 + eps v with every inequality tightened by s.
Displacement displaced_meet(const Polyhedron& c1, const Polyhedron& c2, const QVector& v) {
  const std::size_t n = c1.ambient_dim();
  QMatrix ineq, eq;
  std::vector<EpsRational> ineq_rhs, eq_rhs;
  auto lift = [&](const QVector& a, bool slack) {
    QVector r = a;
    r.push_back(slack ? 1 : 0);
    return r;
  };
  for (std::size_t i = 0; i < c1.ineq_a().size(); ++i) {
    ineq.push_back(lift(c1.ineq_a()[i], true));
    ineq_rhs.emplace_back(c1.ineq_b()[i]);
  }
  for (std::size_t i = 0; i < c2.ineq_a().size(); ++i) {
    ineq.push_back(lift(c2.ineq_a()[i], true));
    ineq_rhs.emplace_back(c2.ineq_b()[i], dot(c2.ineq_a()[i], v));
  }
  QVector cap(n + 1, 0);
  cap[n] = 1;
  ineq.push_back(cap);
  ineq_rhs.emplace_back(1);
  for (std::size_t i = 0; i < c1.eq_a().size(); ++i) {
    eq.push_back(lift(c1.eq_a()[i], false));
    eq_rhs.emplace_back(c1.eq_b()[i]);
  }
  for (std::size_t i = 0; i < c2.eq_a().size(); ++i) {
    eq.push_back(lift(c2.eq_a()[i], false));
    eq_rhs.emplace_back(c2.eq_b()[i], dot(c2.eq_a()[i], v));
  }
  auto r = lp::maximize<EpsRational>(cap, ineq, ineq_rhs, eq, eq_rhs, n + 1);
  if (r.status != lp::Status::Optimal) return {};
  return {r.value.sign() >= 0, r.value.sign() > 0};
}

struct NonGeneric {};

// Basis of the linear span of a cell, scaled to integer vectors.
QMatrix integral_span(const Polyhedron& c) {
  QMatrix out;
  for (const auto& g : c.linear_span()) out.push_back(primitive_rational(g));
  return out;
}

WeightedComplex stable_intersection_once(const WeightedComplex& a, const WeightedComplex& b, const QVector& v) {
  const std::size_t n = a.ambient_dim;
  WeightedComplex out{n, {}, {}};
  if (a.empty() || b.empty()) return out;
  const int target = a.dim() + b.dim() - static_cast<int>(n);
  if (target < 0) return out;
  std::vector<QMatrix> spans_b;
  for (const auto& c : b.cells) spans_b.push_back(integral_span(c));
  std::vector<WeightedPiece> pieces;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const QMatrix span_a = integral_span(a.cells[i]);
    for (std::size_t j = 0; j < b.cells.size(); ++j) {
      QMatrix both = span_a;
      both.insert(both.end(), spans_b[j].begin(), spans_b[j].end());
      const bool spanning = linalg::rank(both, n) == n;
      Displacement d = displaced_meet(a.cells[i], b.cells[j], v);
      if (!spanning) {
        if (d.meets) throw NonGeneric{};
        continue;
      }
      if (!d.meets) continue;
      if (!d.interior) throw NonGeneric{};
      Polyhedron s = a.cells[i].intersect(b.cells[j]);
      if (s.dim() != target) continue;
      auto index = lattice::lattice_index({{n, span_a}, {n, spans_b[j]}});
      pieces.push_back({std::move(s), a.weights[i] * b.weights[j] * *index});
    }
  }
  for (auto& p : common_refinement(pieces)) out.add(std::move(p.cell), std::move(p.weight));
  return out;
}

void require_balanced(const WeightedComplex& c) {
  if (!check_balancing(c).balanced) fail(ErrorCode::Precondition, "stable intersection needs balanced complexes");
}

}  // namespace

WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b,
                                    const PerturbationVector& v) {
  if (a.ambient_dim != b.ambient_dim) fail(ErrorCode::DimensionMismatch, "complexes in different ambient spaces");
  if (v.v.size() != a.ambient_dim) fail(ErrorCode::DimensionMismatch, "perturbation vector of the wrong length");
  require_balanced(a);
  require_balanced(b);
  PerturbationVector current = v;
  for (int attempt = 0;; ++attempt) {
    try {
      return stable_intersection_once(a, b, current.v);
    } catch (const NonGeneric&) {
      if (current.provenance == PerturbationVector::Provenance::User || attempt + 1 >= kPerturbationRetries)
        fail(ErrorCode::NonGenericPerturbation, "perturbation vector is not generic");
      current = PerturbationVector::seeded(a.ambient_dim, current.seed + 1);
    }
  }
}

WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b, std::uint64_t seed) {
  return stable_intersection(a, b, PerturbationVector::seeded(a.ambient_dim, seed));
}

Integer intersection_number(const std::vector<WeightedComplex>& complexes, std::uint64_t seed) {
  if (complexes.empty()) fail(ErrorCode::EmptyInput, "no complexes to intersect");
  const std::size_t n = complexes.front().ambient_dim;
  for (const auto& c : complexes)
    if (c.ambient_dim != n) fail(ErrorCode::DimensionMismatch, "complexes in different ambient spaces");
  for (const auto& c : complexes)
    if (c.empty()) return 0;
  std::size_t codim = 0;
  for (const auto& c : complexes) codim += n - static_cast<std::size_t>(c.dim());
  if (codim != n) fail(ErrorCode::NonComplementary, "codimensions do not add up to the ambient dimension");
  WeightedComplex acc = complexes.front();
  for (std::size_t i = 1; i < complexes.size(); ++i) {
    acc = stable_intersection(acc, complexes[i], seed + i - 1);
    if (acc.empty()) return 0;
  }
  Integer total = 0;
  for (const auto& w : acc.weights) total += w;
  return total;
}

bool is_transverse(const WeightedComplex& a, const WeightedComplex& b) {
  if (a.ambient_dim != b.ambient_dim) fail(ErrorCode::DimensionMismatch, "complexes in different ambient spaces");
  if (a.empty() || b.empty()) return true;
  const int target = a.dim() + b.dim() - static_cast<int>(a.ambient_dim);
  for (const auto& c1 : a.cells)
    for (const auto& c2 : b.cells) {
      Polyhedron s = c1.intersect(c2);
      if (s.empty()) continue;
      if (s.dim() != target) return false;
      QVector p = s.relative_interior_point();
      if (!c1.relative_interior_contains(p) || !c2.relative_interior_contains(p)) return false;
    }
  return true;
}

}  // namespace tropical
