#include "tropical/complex.hpp"

#include "tropical/lattice.hpp"
#include "tropical/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropical {

bool WeightedComplex::pure() const {
  for (const auto& c : cells)
    if (c.dim() != cells.front().dim()) return false;
  return true;
}

int WeightedComplex::dim() const {
  if (cells.empty()) return -1;
  if (!pure()) fail(ErrorCode::NonPure, "complex is not pure");
  return cells.front().dim();
}

void WeightedComplex::add(Polyhedron cell, Integer weight) {
  if (cell.ambient_dim() != ambient_dim) fail(ErrorCode::DimensionMismatch, "cell in the wrong ambient space");
  cells.push_back(std::move(cell));
  weights.push_back(std::move(weight));
}

VerticesAndRays vertices_and_rays(const WeightedComplex& c) {
  VerticesAndRays out;
  std::set<QVector, decltype(&lex_less)> verts(&lex_less), rays(&lex_less);
  QMatrix lin;
  for (const auto& cell : c.cells) {
    verts.insert(cell.vertices().begin(), cell.vertices().end());
    rays.insert(cell.rays().begin(), cell.rays().end());
    lin.insert(lin.end(), cell.lineality().begin(), cell.lineality().end());
  }
  out.vertices.assign(verts.begin(), verts.end());
  out.rays.assign(rays.begin(), rays.end());
  out.lineality = linalg::row_basis(lin, c.ambient_dim);
  for (const auto& cell : c.cells) {
    std::vector<std::size_t> idx;
    for (const auto& v : cell.vertices())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(out.vertices.begin(), out.vertices.end(), v, lex_less) - out.vertices.begin()));
    for (const auto& r : cell.rays())
      idx.push_back(out.vertices.size() +
                    static_cast<std::size_t>(
                        std::lower_bound(out.rays.begin(), out.rays.end(), r, lex_less) - out.rays.begin()));
    std::sort(idx.begin(), idx.end());
    out.cells.push_back(std::move(idx));
  }
  return out;
}

QVector primitive_normal(const Polyhedron& cell, std::size_t facet_index) {
  const std::size_t n = cell.ambient_dim();
  const QVector& a = cell.ineq_a().at(facet_index);
  ZMatrix basis = lattice::saturate({n, cell.linear_span()});
  // Extended gcd of the values of a on the lattice basis.
  Integer g = 0;
  ZVector coeff(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Integer v = 0;
    for (std::size_t i = 0; i < n; ++i) v += a[i].get_num() * basis[j][i];
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (std::size_t k = 0; k < j; ++k) coeff[k] *= s;
    coeff[j] = t;
    g = ng;
  }
  if (g == 0) fail(ErrorCode::Precondition, "facet normal vanishes on the cell");
  QVector u(n, 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) u[i] -= from_integer(coeff[j] * basis[j][i]);
  return u;
}

namespace {

using HullKey = std::pair<QMatrix, QVector>;

HullKey hull_key(const Polyhedron& p) { return {p.eq_a(), p.eq_b()}; }

// Side information of a polyhedron relative to the hyperplane a.x = b.
std::pair<bool, bool> sides(const Polyhedron& p, const QVector& a, const Rational& b) {
  bool below = false, above = false;
  for (const auto& v : p.vertices()) {
    int s = cmp(dot(a, v), b);
    below |= s < 0;
    above |= s > 0;
  }
  for (const auto& r : p.rays()) {
    int s = sgn(dot(a, r));
    below |= s < 0;
    above |= s > 0;
  }
  for (const auto& l : p.lineality())
    if (sgn(dot(a, l)) != 0) below = above = true;
  return {below, above};
}

std::vector<Polyhedron> split(const Polyhedron& p, const QVector& a, const Rational& b) {
  auto [below, above] = sides(p, a, b);
  if (!(below && above)) return {p};
  const std::size_t n = p.ambient_dim();
  return {p.intersect(Polyhedron::from_h(n, {a}, {b})),
          p.intersect(Polyhedron::from_h(n, {scale(a, -1)}, {Rational(-b)}))};
}

}  // namespace

std::vector<WeightedPiece> common_refinement(const std::vector<WeightedPiece>& pieces) {
  std::map<HullKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!pieces[i].cell.empty()) groups[hull_key(pieces[i].cell)].push_back(i);
  std::vector<WeightedPiece> out;
  for (const auto& [key, members] : groups) {
    std::set<std::pair<QVector, Rational>> hyperplanes;
    for (auto i : members) {
      const auto& c = pieces[i].cell;
      for (std::size_t f = 0; f < c.ineq_a().size(); ++f) {
        QVector a = c.ineq_a()[f];
        Rational b = c.ineq_b()[f];
        auto first = std::find_if(a.begin(), a.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (first != a.end() && sgn(*first) < 0) {
          a = scale(a, -1);
          b = -b;
        }
        hyperplanes.emplace(std::move(a), std::move(b));
      }
    }
    std::map<Polyhedron, Integer> atoms;
    for (auto i : members) {
      std::vector<Polyhedron> parts{pieces[i].cell};
      for (const auto& [a, b] : hyperplanes) {
        std::vector<Polyhedron> next;
        for (const auto& p : parts)
          for (auto& q : split(p, a, b)) next.push_back(std::move(q));
        parts = std::move(next);
      }
      for (auto& p : parts) atoms[std::move(p)] += pieces[i].weight;
    }
    for (auto& [cell, w] : atoms)
      if (w != 0) out.push_back({cell, w});
  }
  return out;
}

bool equal_up_to_refinement(const WeightedComplex& a, const WeightedComplex& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.ambient_dim != b.ambient_dim || a.dim() != b.dim()) return false;
  std::vector<WeightedPiece> pieces;
  for (std::size_t i = 0; i < a.cells.size(); ++i) pieces.push_back({a.cells[i], a.weights[i]});
  for (std::size_t i = 0; i < b.cells.size(); ++i) pieces.push_back({b.cells[i], -b.weights[i]});
  return common_refinement(pieces).empty();
}

Integer multiplicity_at(const WeightedComplex& c, const QVector& x) {
  Integer m = 0;
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    if (c.cells[i].contains(x)) m += c.weights[i];
  return m;
}

BalancingReport check_balancing(const WeightedComplex& c) {
  BalancingReport report;
  if (c.empty()) return report;
  const int k = c.dim();
  if (k <= 0) return report;
  struct Ridge {
    Polyhedron face;
    QVector weighted_normal;
  };
  std::map<HullKey, std::vector<Ridge>> groups;
  for (std::size_t s = 0; s < c.cells.size(); ++s) {
    const auto& cell = c.cells[s];
    for (std::size_t f = 0; f < cell.ineq_a().size(); ++f) {
      Polyhedron face = cell.facet(f);
      QVector u = scale(primitive_normal(cell, f), from_integer(c.weights[s]));
      groups[hull_key(face)].push_back({std::move(face), std::move(u)});
    }
  }
  for (const auto& [key, ridges] : groups) {
    std::vector<WeightedPiece> pieces;
    for (const auto& r : ridges) pieces.push_back({r.face, 1});
    for (const auto& atom : common_refinement(pieces)) {
      QVector p = atom.cell.relative_interior_point();
      QVector sum(c.ambient_dim, 0);
      for (const auto& r : ridges)
        if (r.face.contains(p)) sum = add(sum, r.weighted_normal);
      for (const auto& row : atom.cell.eq_a())
        if (sgn(dot(row, sum)) != 0) {
          report.balanced = false;
          report.violation = atom.cell;
          report.defect = sum;
          return report;
        }
    }
  }
  return report;
}

}  // namespace tropical
