#include "tropical/rootcount.hpp"

#include "tropical/hypersurface.hpp"
#include "tropical/linalg.hpp"
#include "tropical/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace tropical {

void HorizontalSystem::validate() const {
  const std::size_t n = n_vars();
  if (n == 0) fail(ErrorCode::EmptyInput, "system without variables");
  if (base.empty()) fail(ErrorCode::EmptyInput, "empty base");
  for (const auto& b : base) {
    if (b.arity() != n) fail(ErrorCode::ArityMismatch, "base element in the wrong number of variables");
    if (!(b.field() == field)) fail(ErrorCode::FieldMismatch, "base element over another field");
    if (b.is_zero()) fail(ErrorCode::ZeroInput, "zero base element");
  }
  for (const auto& row : beta)
    if (row.size() != base.size()) fail(ErrorCode::DimensionMismatch, "beta row length differs from the base size");
  std::size_t uses = 0;
  for (const auto& eq : equations) {
    if (eq.empty()) fail(ErrorCode::EmptyInput, "equation without support elements");
    for (auto j : eq)
      if (j >= support_size()) fail(ErrorCode::DimensionMismatch, "support index out of range");
    uses += eq.size();
  }
  std::vector<bool> used(support_size(), false);
  for (const auto& eq : equations)
    for (auto j : eq) used[j] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    fail(ErrorCode::DimensionMismatch, "support element used by no equation");
  if (!parameters.empty() && parameters.size() != uses)
    fail(ErrorCode::DimensionMismatch, "one parameter name per support use required");
  if (!support.empty()) {
    if (support.size() != support_size()) fail(ErrorCode::DimensionMismatch, "explicit support has the wrong length");
    for (const auto& s : support)
      if (s.arity() != n) fail(ErrorCode::ArityMismatch, "support element in the wrong number of variables");
  }
}

std::pair<ValuedPolynomial, ValuedPolynomial> HorizontalSystem::support_fraction(std::size_t j) const {
  const std::size_t n = n_vars();
  ValuedPolynomial num = ValuedPolynomial::constant(field, n, Scalar(1));
  ValuedPolynomial den = num;
  for (std::size_t l = 0; l < base.size(); ++l) {
    long e = beta.at(j)[l];
    if (e > 0) num = num * base[l].pow(static_cast<unsigned long>(e));
    if (e < 0) den = den * base[l].pow(static_cast<unsigned long>(-e));
  }
  return {num, den};
}

bool verify_support(const HorizontalSystem& s) {
  s.validate();
  if (s.support.empty()) fail(ErrorCode::Precondition, "no explicit support to verify");
  for (std::size_t j = 0; j < s.support_size(); ++j) {
    auto [num, den] = s.support_fraction(j);
    if (!(s.support[j] * den == num)) return false;
  }
  return true;
}

namespace {

QMatrix exponent_points(const ValuedPolynomial& f) {
  QMatrix pts;
  for (const auto& e : f.support()) pts.push_back(QVector(e.begin(), e.end()));
  return pts;
}

}  // namespace

TransversalityCertificate is_tropically_transverse(const std::vector<ValuedPolynomial>& base, const SemiringMap& map) {
  if (base.empty()) fail(ErrorCode::EmptyInput, "empty base");
  for (const auto& b : base)
    if (b.is_zero()) fail(ErrorCode::ZeroInput, "zero base element");
  std::vector<std::size_t> used;
  std::vector<LiftedConfiguration> configs;
  for (std::size_t l = 0; l < base.size(); ++l) {
    if (base[l].terms().size() < 2) continue;
    auto trop = tropicalize(base[l], map);
    configs.push_back({exponent_points(base[l]), trop.coefficients()});
    used.push_back(l);
  }
  TransversalityCertificate cert;
  if (configs.size() < 2) return cert;
  auto o = map.convention == Convention::Min ? Orientation::Lower : Orientation::Upper;
  for (const auto& cell : mixed_subdivision(configs, o)) {
    int total = std::accumulate(cell.summand_dims.begin(), cell.summand_dims.end(), 0);
    if (total == cell.dim) continue;
    TransversalityWitness w{used, cell, {}, total - cell.dim};
    for (std::size_t i = 0; i < configs.size(); ++i) {
      QMatrix pts;
      for (auto k : cell.summands[i]) pts.push_back(configs[i].points[k]);
      w.summand_points.push_back(std::move(pts));
    }
    cert.verdict = false;
    cert.witness = std::move(w);
    return cert;
  }
  return cert;
}

std::vector<ValuedPolynomial> ModifiedSystem::equations() const {
  std::vector<ValuedPolynomial> out = f_hat;
  out.insert(out.end(), g_hat.begin(), g_hat.end());
  out.insert(out.end(), h_hat.begin(), h_hat.end());
  return out;
}

ModifiedSystem build_modification(const HorizontalSystem& s, bool simplify) {
  s.validate();
  if (!s.support.empty() && !verify_support(s)) fail(ErrorCode::Precondition, "explicit support does not match the base");
  const std::size_t n = s.n_vars(), r = s.base.size(), m = s.support_size();
  const ValuedField& k = s.field;
  ModifiedSystem out;
  out.variables = s.variables;

  // y variables: every base element, or only the non-monomial ones when simplifying.
  std::vector<std::optional<std::size_t>> y_of(r);
  std::vector<std::size_t> y_base;
  for (std::size_t l = 0; l < r; ++l)
    if (!simplify || !s.base[l].is_monomial()) {
      y_of[l] = y_base.size();
      y_base.push_back(l);
    }

  // Each support element becomes x^gamma * c * y^delta with monomial factors substituted.
  struct Reduced {
    Exponent gamma;  // in x
    Scalar coeff;
    Exponent delta;  // in y
  };
  std::vector<Reduced> reduced(m);
  for (std::size_t j = 0; j < m; ++j) {
    Reduced red{Exponent(n, 0), Scalar(1), Exponent(y_base.size(), 0)};
    for (std::size_t l = 0; l < r; ++l) {
      long e = s.beta[j][l];
      if (e == 0) continue;
      if (y_of[l]) {
        red.delta[*y_of[l]] += e;
      } else {
        const auto& [alpha, c] = *s.base[l].terms().begin();
        for (std::size_t i = 0; i < n; ++i) red.gamma[i] += e * alpha[i];
        red.coeff = red.coeff * c.pow(e);
      }
    }
    reduced[j] = std::move(red);
  }

  // z variables: one per support element, or per distinct non-monomial row when simplifying.
  std::vector<std::optional<std::size_t>> z_of(m);
  std::vector<std::size_t> z_rep;
  std::map<std::pair<Exponent, Exponent>, std::size_t> seen;
  for (std::size_t j = 0; j < m; ++j) {
    if (simplify) {
      if (std::all_of(reduced[j].delta.begin(), reduced[j].delta.end(), [](long e) { return e == 0; })) continue;
      auto key = std::make_pair(reduced[j].gamma, reduced[j].delta);
      auto it = seen.find(key);
      if (it != seen.end()) {
        z_of[j] = it->second;
        continue;
      }
      seen.emplace(key, z_rep.size());
    }
    z_of[j] = z_rep.size();
    z_rep.push_back(j);
  }

  const std::size_t ny = y_base.size(), nz = z_rep.size(), total = n + ny + nz;
  for (std::size_t l : y_base) out.variables.push_back("y" + std::to_string(l + 1));
  for (std::size_t j : z_rep) out.variables.push_back("z" + std::to_string(j + 1));
  auto unit = [&](std::size_t var) {
    Exponent e(total, 0);
    e[var] = 1;
    return e;
  };

  for (const auto& eq : s.equations) {
    std::map<Exponent, Scalar> terms;
    for (auto j : eq) {
      Exponent e = z_of[j] ? unit(n + ny + *z_of[j]) : reduced[j].gamma;
      e.resize(total, 0);
      terms[e] = Scalar(1);
    }
    out.f_hat.emplace_back(k, total, std::move(terms));
  }
  for (std::size_t j : z_rep) {
    const Reduced& red = reduced[j];
    Exponent mono = red.gamma;
    mono.resize(total, 0);
    for (std::size_t t = 0; t < ny; ++t) mono[n + t] = red.delta[t];
    auto z = ValuedPolynomial::monomial(k, unit(n + ny + *z_of[j]));
    out.g_hat.push_back(z - ValuedPolynomial::monomial(k, mono, red.coeff));
  }
  for (std::size_t t = 0; t < ny; ++t) {
    auto y = ValuedPolynomial::monomial(k, unit(n + t));
    out.h_hat.push_back(y - s.base[y_base[t]].extended(total));
  }
  return out;
}

namespace {

struct LiftedPolytope {
  QMatrix points;
  QVector heights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // lower edges of the lifted points
};

// Constraints in w for "a and b minimize <p, w> + h(p) over the points".
void edge_constraints(const LiftedPolytope& p, std::size_t a, std::size_t b, QMatrix& ineq, QVector& ineq_rhs,
                      QMatrix& eq, QVector& eq_rhs) {
  for (std::size_t c = 0; c < p.points.size(); ++c) {
    if (c == a || c == b) continue;
    ineq.push_back(sub(p.points[a], p.points[c]));
    ineq_rhs.push_back(p.heights[c] - p.heights[a]);
  }
  eq.push_back(sub(p.points[a], p.points[b]));
  eq_rhs.push_back(p.heights[b] - p.heights[a]);
}

struct Degenerate {};

class MixedCellSearch {
 public:
  explicit MixedCellSearch(std::vector<LiftedPolytope> ps) : ps_(std::move(ps)), n_(ps_.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return ps_[x].edges.size() < ps_[y].edges.size(); });
  }

  Integer run() {
    dfs(0);
    return total_;
  }

 private:
  void dfs(std::size_t depth) {
    if (depth == n_) {
      finish();
      return;
    }
    const LiftedPolytope& p = ps_[order_[depth]];
    for (const auto& [a, b] : p.edges) {
      QVector dir = sub(p.points[b], p.points[a]);
      dirs_.push_back(dir);
      if (linalg::rank(dirs_, n_) == dirs_.size()) {
        const std::size_t ni = ineq_.size(), ne = eq_.size();
        edge_constraints(p, a, b, ineq_, ineq_rhs_, eq_, eq_rhs_);
        if (lp::feasible<Rational>(ineq_, ineq_rhs_, eq_, eq_rhs_, n_)) {
          chosen_.emplace_back(a, b);
          dfs(depth + 1);
          chosen_.pop_back();
        }
        ineq_.resize(ni);
        ineq_rhs_.resize(ni);
        eq_.resize(ne);
        eq_rhs_.resize(ne);
      }
      dirs_.pop_back();
    }
  }

  // A complete choice fixes w; the lifting is generic iff no other point ties.
  void finish() {
    auto w = linalg::solve(eq_, eq_rhs_, n_);
    if (!w) throw Degenerate{};
    for (std::size_t d = 0; d < n_; ++d) {
      const LiftedPolytope& p = ps_[order_[d]];
      auto [a, b] = chosen_[d];
      Rational best = dot(p.points[a], *w) + p.heights[a];
      for (std::size_t c = 0; c < p.points.size(); ++c)
        if (c != a && c != b && dot(p.points[c], *w) + p.heights[c] == best) throw Degenerate{};
    }
    Rational det = abs(linalg::determinant(dirs_));
    if (det.get_den() != 1) fail(ErrorCode::Precondition, "mixed volume needs lattice polytopes");
    total_ += det.get_num();
  }

  std::vector<LiftedPolytope> ps_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  QMatrix dirs_, ineq_, eq_;
  QVector ineq_rhs_, eq_rhs_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  Integer total_ = 0;
};

Integer mixed_volume_once(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed) {
  const std::size_t n = polytopes.size();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(0, 1L << 20);
  std::vector<LiftedPolytope> lifted;
  for (const auto& poly : polytopes) {
    LiftedPolytope p{poly.vertices, {}, {}};
    for (std::size_t i = 0; i < p.points.size(); ++i) p.heights.push_back(dist(gen));
    for (std::size_t a = 0; a < p.points.size(); ++a)
      for (std::size_t b = a + 1; b < p.points.size(); ++b) {
        QMatrix ineq, eq;
        QVector ineq_rhs, eq_rhs;
        edge_constraints(p, a, b, ineq, ineq_rhs, eq, eq_rhs);
        if (lp::feasible<Rational>(ineq, ineq_rhs, eq, eq_rhs, n)) p.edges.emplace_back(a, b);
      }
    if (p.edges.empty()) return 0;
    lifted.push_back(std::move(p));
  }
  return MixedCellSearch(std::move(lifted)).run();
}

}  // namespace

Integer mixed_volume(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed) {
  const std::size_t n = polytopes.size();
  for (const auto& p : polytopes) {
    if (p.ambient_dim != n) fail(ErrorCode::DimensionMismatch, "mixed volume needs n polytopes in R^n");
    if (p.vertices.empty()) fail(ErrorCode::EmptyInput, "empty polytope");
    for (const auto& v : p.vertices)
      if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); })) fail(ErrorCode::Precondition, "mixed volume needs lattice polytopes");
  }
  if (n == 0) return 1;
  QMatrix dirs;
  for (const auto& p : polytopes)
    for (const auto& v : p.vertices) dirs.push_back(sub(v, p.vertices.front()));
  if (linalg::rank(dirs, n) < n) return 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return mixed_volume_once(polytopes, seed + static_cast<std::uint64_t>(attempt));
    } catch (const Degenerate&) {
    }
  }
  fail(ErrorCode::DegenerateLifting, "no generic lifting found for the mixed volume");
}

RootCount generic_root_count(const HorizontalSystem& s, const RootCountOptions& options) {
  s.validate();
  if (s.equations.size() != s.n_vars()) fail(ErrorCode::NonSquare, "number of equations differs from number of variables");
  SemiringMap map{s.field, options.convention};
  auto cert = is_tropically_transverse(s.base, map);
  if (!cert.verdict)
    fail(ErrorCode::NotTransverse, "the base is not tropically transverse (deficit " +
                                       std::to_string(cert.witness->deficit) + ")");
  ModifiedSystem mod = build_modification(s, options.simplify);
  const auto eqs = mod.equations();
  std::vector<RationalPolytope> polytopes;
  for (const auto& e : eqs) polytopes.push_back(convex_hull(exponent_points(e)));
  RootCount out{mixed_volume(polytopes, options.seed), std::nullopt, eqs.size()};
  if (options.check_intersection) {
    std::vector<WeightedComplex> hs;
    for (const auto& e : eqs) hs.push_back(tropical_hypersurface(tropicalize(e, map)).complex);
    out.intersection_number = intersection_number(hs, options.seed);
  }
  return out;
}

HorizontalSystem nonlinear_resonator_system(long n, long m) {
  if (n < 1 || m < 1) fail(ErrorCode::Precondition, "oscillator sizes must be positive");
  const auto k = ValuedField::trivial();
  HorizontalSystem s;
  s.field = k;
  s.variables = {"x1", "x2"};
  auto x1 = ValuedPolynomial::variable(k, 2, 0);
  auto x2 = ValuedPolynomial::variable(k, 2, 1);
  auto w = x1.pow(static_cast<unsigned long>(m)) + x2.pow(static_cast<unsigned long>(m));
  s.base = {x1, x2, w};
  auto add_support = [&](std::vector<long> beta, ValuedPolynomial poly) {
    s.beta.push_back(std::move(beta));
    s.support.push_back(std::move(poly));
    return s.beta.size() - 1;
  };
  std::vector<std::size_t> eq1, eq2;
  for (auto j : {add_support({0, 0, 0}, ValuedPolynomial::constant(k, 2, Scalar(1))), add_support({1, 0, 0}, x1),
                 add_support({0, 1, 0}, x2)}) {
    eq1.push_back(j);
    eq2.push_back(j);
  }
  for (long i = 1; i <= n; ++i) {
    eq1.push_back(add_support({1, 0, i}, x1 * w.pow(static_cast<unsigned long>(i))));
    eq2.push_back(add_support({0, 1, i}, x2 * w.pow(static_cast<unsigned long>(i))));
  }
  s.equations = {eq1, eq2};
  for (std::size_t i = 0; i < eq1.size(); ++i) s.parameters.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < eq2.size(); ++i) s.parameters.push_back("b" + std::to_string(i));
  return s;
}

}  // namespace tropical
