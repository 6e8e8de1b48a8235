#include "tropical/subdivision.hpp"

#include "tropical/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tropical {

namespace {

std::size_t check_points(const QMatrix& points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "empty point list");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) fail(ErrorCode::DimensionMismatch, "points of different dimensions");
  return n;
}

QMatrix differences(const QMatrix& points) {
  QMatrix d;
  for (std::size_t i = 1; i < points.size(); ++i) d.push_back(sub(points[i], points[0]));
  return d;
}

}  // namespace

RationalPolytope convex_hull(const QMatrix& points) {
  const std::size_t n = check_points(points);
  return {n, Polyhedron::from_v(n, points).vertices()};
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_dim != q.ambient_dim) fail(ErrorCode::DimensionMismatch, "Minkowski sum of polytopes in different spaces");
  QMatrix sums;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(add(a, b));
  return convex_hull(sums);
}

int affine_dim(const QMatrix& points) {
  if (points.empty()) return -1;
  return static_cast<int>(linalg::rank(differences(points), points.front().size()));
}

std::vector<std::size_t> affine_chart(const QMatrix& points) {
  const std::size_t n = check_points(points);
  return linalg::rref(differences(points), n).pivots;
}

QMatrix restrict_columns(const QMatrix& points, const std::vector<std::size_t>& cols) {
  QMatrix out;
  out.reserve(points.size());
  for (const auto& p : points) {
    QVector q;
    q.reserve(cols.size());
    for (auto c : cols) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

Rational simplex_volume(const QMatrix& pts) {
  return abs(linalg::determinant(differences(pts)));
}

namespace {

// Sum of simplex volumes of a regular triangulation of full-dimensional
// points in R^d; cells that are not simplices are triangulated again with
// a fresh lifting.
Rational triangulated_volume(const QMatrix& pts, std::uint64_t seed, int depth) {
  const std::size_t d = pts.front().size();
  if (pts.size() == d + 1) return simplex_volume(pts);
  if (depth > 40) fail(ErrorCode::DegenerateLifting, "could not find a generic lifting for a triangulation");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(0, 1000000);
  LiftedConfiguration c{pts, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) c.heights.push_back(dist(gen));
  auto tri = regular_subdivision(c, Orientation::Lower);
  Rational total = 0;
  for (const auto& cell : tri.cells) {
    QMatrix cp;
    for (auto i : cell) cp.push_back(pts[i]);
    total += triangulated_volume(cp, seed * 6364136223846793005ULL + 1442695040888963407ULL, depth + 1);
  }
  return total;
}

}  // namespace

Rational normalized_volume(const RationalPolytope& p) {
  if (p.vertices.empty()) return 0;
  if (affine_dim(p.vertices) < static_cast<int>(p.ambient_dim)) return 0;
  if (p.ambient_dim == 0) return 1;
  return triangulated_volume(p.vertices, 0x5eed, 0);
}

RegularSubdivision regular_subdivision(const LiftedConfiguration& c, Orientation o) {
  check_points(c.points);
  if (c.heights.size() != c.points.size()) fail(ErrorCode::DimensionMismatch, "one height per point required");
  const auto cols = affine_chart(c.points);
  const QMatrix q = restrict_columns(c.points, cols);
  const std::size_t d = cols.size();
  const std::size_t dd = d + 2;
  QMatrix gens;
  for (std::size_t k = 0; k < q.size(); ++k) {
    QVector g;
    g.reserve(dd);
    g.push_back(1);
    g.insert(g.end(), q[k].begin(), q[k].end());
    g.push_back(c.heights[k]);
    gens.push_back(std::move(g));
  }
  QVector vertical(dd, 0);
  vertical[dd - 1] = o == Orientation::Lower ? 1 : -1;
  QMatrix all = gens;
  all.push_back(vertical);
  ConeGenerators facets = cone_facets(all, {}, dd);
  RegularSubdivision out{c, o, {}};
  for (const auto& y : facets.rays) {
    int s = sgn(y[dd - 1]);
    if ((o == Orientation::Lower && s <= 0) || (o == Orientation::Upper && s >= 0)) continue;
    Cell cell;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (sgn(dot(y, gens[k])) == 0) cell.push_back(k);
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

std::vector<Cell> subdivision_edges(const RegularSubdivision& s) {
  const auto cols = affine_chart(s.configuration.points);
  const QMatrix q = restrict_columns(s.configuration.points, cols);
  const std::size_t d = cols.size();
  std::set<Cell> edges;
  for (const auto& cell : s.cells) {
    QMatrix pts;
    for (auto i : cell) pts.push_back(q[i]);
    Polyhedron p = Polyhedron::from_v(d, pts);
    const auto& verts = p.vertices();
    auto tight = [&](const QVector& x, std::size_t f) { return dot(p.ineq_a()[f], x) == p.ineq_b()[f]; };
    for (std::size_t u = 0; u < verts.size(); ++u)
      for (std::size_t v = u + 1; v < verts.size(); ++v) {
        std::vector<std::size_t> common;
        for (std::size_t f = 0; f < p.ineq_a().size(); ++f)
          if (tight(verts[u], f) && tight(verts[v], f)) common.push_back(f);
        auto on_face = [&](const QVector& x) {
          return std::all_of(common.begin(), common.end(), [&](std::size_t f) { return tight(x, f); });
        };
        std::size_t face_vertices = 0;
        for (const auto& w : verts)
          if (on_face(w)) ++face_vertices;
        if (face_vertices != 2) continue;
        Cell e;
        for (auto i : cell)
          if (on_face(q[i])) e.push_back(i);
        edges.insert(std::move(e));
      }
  }
  return {edges.begin(), edges.end()};
}

std::vector<MixedCell> mixed_subdivision(const std::vector<LiftedConfiguration>& configs, Orientation o) {
  if (configs.empty()) fail(ErrorCode::EmptyInput, "no configurations");
  const std::size_t n = check_points(configs.front().points);
  const std::size_t r = configs.size();
  LiftedConfiguration cayley;
  std::vector<std::size_t> owner, local;
  for (std::size_t i = 0; i < r; ++i) {
    if (check_points(configs[i].points) != n) fail(ErrorCode::DimensionMismatch, "configurations in different dimensions");
    if (configs[i].heights.size() != configs[i].points.size())
      fail(ErrorCode::DimensionMismatch, "one height per point required");
    for (std::size_t k = 0; k < configs[i].points.size(); ++k) {
      QVector p = configs[i].points[k];
      p.resize(n + r, 0);
      p[n + i] = 1;
      cayley.points.push_back(std::move(p));
      cayley.heights.push_back(configs[i].heights[k]);
      owner.push_back(i);
      local.push_back(k);
    }
  }
  auto cay = regular_subdivision(cayley, o);
  std::vector<MixedCell> out;
  for (const auto& cell : cay.cells) {
    MixedCell mc;
    mc.summands.resize(r);
    for (auto k : cell) mc.summands[owner[k]].push_back(local[k]);
    QMatrix dirs;
    for (std::size_t i = 0; i < r; ++i) {
      QMatrix pts;
      for (auto k : mc.summands[i]) pts.push_back(configs[i].points[k]);
      mc.summand_dims.push_back(affine_dim(pts));
      for (std::size_t j = 1; j < pts.size(); ++j) dirs.push_back(sub(pts[j], pts[0]));
    }
    mc.dim = static_cast<int>(linalg::rank(dirs, n));
    out.push_back(std::move(mc));
  }
  std::sort(out.begin(), out.end(), [](const MixedCell& a, const MixedCell& b) { return a.summands < b.summands; });
  return out;
}

RationalPolytope mixed_cell_polytope(const std::vector<LiftedConfiguration>& configs, const MixedCell& c) {
  RationalPolytope acc;
  bool first = true;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    QMatrix pts;
    for (auto k : c.summands[i]) pts.push_back(configs[i].points[k]);
    RationalPolytope h = convex_hull(pts);
    acc = first ? h : minkowski_sum(acc, h);
    first = false;
  }
  return acc;
}

}  // namespace tropical
