#include "tropical/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace tropical::io {

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::Parse, "at " + path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

std::string decode_string(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_error(path, "expected a string");
  return j.get<std::string>();
}

std::size_t decode_index(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 0) parse_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

long decode_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_error(path, "expected an integer");
  return j.get<long>();
}

std::vector<long> decode_longs(const Json& j, const std::string& path) {
  std::vector<long> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(decode_long(j[i], at(path, i)));
  return out;
}

std::vector<std::size_t> decode_indices(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(decode_index(j[i], at(path, i)));
  return out;
}

std::vector<std::string> decode_names(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(decode_string(j[i], at(path, i)));
    if (!seen.insert(out.back()).second) parse_error(at(path, i), "duplicate name \"" + out.back() + "\"");
  }
  return out;
}

template <class F>
auto rethrow_at(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse && std::string(e.what()).rfind("at ", 0) == 0) throw;
    parse_error(path, e.what());
  }
}

Json encode_exponent(const Exponent& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

Exponent decode_exponent(const Json& j, std::size_t arity, const std::string& path) {
  auto e = decode_longs(j, path);
  if (e.size() != arity)
    parse_error(path, "exponent has " + std::to_string(e.size()) + " entries, expected " + std::to_string(arity));
  return e;
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }
Json encode(const Integer& z) { return to_string(z); }

Json encode(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const QMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(encode(r));
  return out;
}

Json encode(const ValuedField& k) {
  switch (k.kind) {
    case ValuedField::Kind::TrivialQ: return "Q";
    case ValuedField::Kind::TadicQT: return "Q(t)";
    case ValuedField::Kind::PadicQ: return Json{{"Qp", to_string(k.p)}};
  }
  return nullptr;
}

Json encode(Convention c) { return to_string(c); }

Json encode(const TropicalPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", encode(c)}, {"monomial", encode_exponent(e)}});
  return {{"convention", encode(f.convention())}, {"arity", f.arity()}, {"terms", terms}};
}

Json encode(const ValuedPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", to_string(c)}, {"monomial", encode_exponent(e)}});
  return terms;
}

Json encode(const Polyhedron& p) {
  return {{"ambient_dim", p.ambient_dim()},
          {"empty", p.empty()},
          {"vertices", encode(p.vertices())},
          {"rays", encode(p.rays())},
          {"lineality", encode(p.lineality())}};
}

Json encode(const WeightedComplex& c) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    cells.push_back({{"cell", encode(c.cells[i])}, {"weight", encode(c.weights[i])}});
  return {{"ambient_dim", c.ambient_dim}, {"cells", cells}};
}

Json encode(const MixedCell& c) {
  Json summands = Json::array();
  for (const auto& s : c.summands) summands.push_back(s);
  return {{"summands", summands}, {"summand_dims", c.summand_dims}, {"dim", c.dim}};
}

Json encode(const TransversalityCertificate& c) {
  Json out{{"transverse", c.verdict}};
  if (c.witness) {
    Json points = Json::array();
    for (const auto& m : c.witness->summand_points) points.push_back(encode(m));
    out["witness"] = {{"base_indices", c.witness->base_indices},
                      {"cell", encode(c.witness->cell)},
                      {"summand_points", points},
                      {"deficit", c.witness->deficit}};
  }
  return out;
}

Json encode(const HorizontalSystem& s) { return serialize_system_file(system_file(s)); }

Json encode(const RootCount& r) {
  Json out{{"root_count", encode(r.count)}, {"modified_equations", r.modified_equations}};
  if (r.intersection_number) out["intersection_number"] = encode(*r.intersection_number);
  return out;
}

Rational decode_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return rethrow_at(path, [&] { return parse_rational(decode_string(j, path)); });
}

Integer decode_integer(const Json& j, const std::string& path) {
  Rational q = decode_rational(j, path);
  if (q.get_den() != 1) parse_error(path, "expected an integer");
  return q.get_num();
}

QVector decode_vector(const Json& j, const std::string& path) {
  QVector out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(decode_rational(j[i], at(path, i)));
  return out;
}

QMatrix decode_matrix(const Json& j, const std::string& path) {
  QMatrix out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(decode_vector(j[i], at(path, i)));
  return out;
}

ValuedField decode_field(const Json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "Q") return ValuedField::trivial();
    if (s == "Q(t)") return ValuedField::tadic();
    parse_error(path, "unknown field \"" + s + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Qp")) {
    Integer p = decode_integer(j["Qp"], at(path, "Qp"));
    return rethrow_at(path, [&] { return ValuedField::padic(p); });
  }
  parse_error(path, "expected \"Q\", \"Q(t)\" or {\"Qp\": p}");
}

Convention decode_convention(const Json& j, const std::string& path) {
  return rethrow_at(path, [&] { return parse_convention(decode_string(j, path)); });
}

TropicalPolynomial decode_tropical_polynomial(const Json& j, const std::string& path) {
  Convention c = decode_convention(member(j, "convention", path), at(path, "convention"));
  std::size_t arity = decode_index(member(j, "arity", path), at(path, "arity"));
  const std::string tp = at(path, "terms");
  const Json& terms = array(member(j, "terms", path), tp);
  std::map<Exponent, Rational> m;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto e = decode_exponent(member(terms[i], "monomial", at(tp, i)), arity, at(at(tp, i), "monomial"));
    m[e] = decode_rational(member(terms[i], "coeff", at(tp, i)), at(at(tp, i), "coeff"));
  }
  return rethrow_at(path, [&] { return TropicalPolynomial(c, arity, m); });
}

ValuedPolynomial decode_polynomial(const Json& j, const ValuedField& k, std::size_t arity, const std::string& path) {
  ValuedPolynomial f = ValuedPolynomial::constant(k, arity, Scalar(0));
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string tp = at(path, i);
    auto e = decode_exponent(member(j[i], "monomial", tp), arity, at(tp, "monomial"));
    const std::string cp = at(tp, "coeff");
    Scalar c = rethrow_at(cp, [&] { return parse_scalar(decode_string(member(j[i], "coeff", tp), cp), k); });
    f = f + ValuedPolynomial::monomial(k, e, c);
  }
  return f;
}

Polyhedron decode_polyhedron(const Json& j, const std::string& path) {
  std::size_t n = decode_index(member(j, "ambient_dim", path), at(path, "ambient_dim"));
  if (j.contains("empty") && j["empty"].is_boolean() && j["empty"].get<bool>()) return Polyhedron::empty_set(n);
  auto v = decode_matrix(member(j, "vertices", path), at(path, "vertices"));
  auto r = j.contains("rays") ? decode_matrix(j["rays"], at(path, "rays")) : QMatrix{};
  auto l = j.contains("lineality") ? decode_matrix(j["lineality"], at(path, "lineality")) : QMatrix{};
  return rethrow_at(path, [&] { return Polyhedron::from_v(n, v, r, l); });
}

WeightedComplex decode_complex(const Json& j, const std::string& path) {
  WeightedComplex c{decode_index(member(j, "ambient_dim", path), at(path, "ambient_dim")), {}, {}};
  const std::string cp = at(path, "cells");
  const Json& cells = array(member(j, "cells", path), cp);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto p = decode_polyhedron(member(cells[i], "cell", at(cp, i)), at(at(cp, i), "cell"));
    auto w = decode_integer(member(cells[i], "weight", at(cp, i)), at(at(cp, i), "weight"));
    rethrow_at(at(cp, i), [&] {
      c.add(p, w);
      return 0;
    });
  }
  return c;
}

MixedCell decode_mixed_cell(const Json& j, const std::string& path) {
  MixedCell c;
  const std::string sp = at(path, "summands");
  const Json& s = array(member(j, "summands", path), sp);
  for (std::size_t i = 0; i < s.size(); ++i) c.summands.push_back(decode_indices(s[i], at(sp, i)));
  for (auto d : decode_longs(member(j, "summand_dims", path), at(path, "summand_dims")))
    c.summand_dims.push_back(static_cast<int>(d));
  c.dim = static_cast<int>(decode_long(member(j, "dim", path), at(path, "dim")));
  return c;
}

TransversalityCertificate decode_certificate(const Json& j, const std::string& path) {
  TransversalityCertificate c;
  const Json& v = member(j, "transverse", path);
  if (!v.is_boolean()) parse_error(at(path, "transverse"), "expected a boolean");
  c.verdict = v.get<bool>();
  if (j.contains("witness")) {
    const std::string wp = at(path, "witness");
    const Json& w = j["witness"];
    TransversalityWitness wit;
    wit.base_indices = decode_indices(member(w, "base_indices", wp), at(wp, "base_indices"));
    wit.cell = decode_mixed_cell(member(w, "cell", wp), at(wp, "cell"));
    const std::string pp = at(wp, "summand_points");
    const Json& pts = array(member(w, "summand_points", wp), pp);
    for (std::size_t i = 0; i < pts.size(); ++i) wit.summand_points.push_back(decode_matrix(pts[i], at(pp, i)));
    wit.deficit = static_cast<int>(decode_long(member(w, "deficit", wp), at(wp, "deficit")));
    c.witness = std::move(wit);
  }
  if (c.verdict == c.witness.has_value()) parse_error(path, "a witness is present exactly when not transverse");
  return c;
}

HorizontalSystem decode_horizontal_system(const Json& j, const std::string& path) {
  auto f = parse_system_file(j);
  if (!f.horizontal) parse_error(path, "missing key \"base\"");
  return *f.horizontal;
}

RootCount decode_root_count(const Json& j, const std::string& path) {
  RootCount r{decode_integer(member(j, "root_count", path), at(path, "root_count")), std::nullopt,
              decode_index(member(j, "modified_equations", path), at(path, "modified_equations"))};
  if (j.contains("intersection_number"))
    r.intersection_number = decode_integer(j["intersection_number"], at(path, "intersection_number"));
  return r;
}

SystemFile parse_system_file(const Json& j) {
  const std::string root = "$";
  if (!j.is_object()) parse_error(root, "expected an object");
  SystemFile f;
  f.field = decode_field(member(j, "field", root), "$.field");
  if (j.contains("convention")) f.convention = decode_convention(j["convention"], "$.convention");
  f.variables = decode_names(member(j, "variables", root), "$.variables");
  if (f.variables.empty()) parse_error("$.variables", "no variables");
  const std::size_t n = f.variables.size();
  if (j.contains("parameters")) f.parameters = decode_names(j["parameters"], "$.parameters");
  auto polys = [&](const char* key) {
    std::vector<ValuedPolynomial> out;
    const std::string p = at(root, key);
    const Json& a = array(j[key], p);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(decode_polynomial(a[i], f.field, n, at(p, i)));
    return out;
  };
  if (j.contains("polynomials")) f.polynomials = polys("polynomials");
  if (!j.contains("base")) {
    if (f.polynomials.empty()) parse_error(root, "expected \"polynomials\" or \"base\"");
    return f;
  }
  HorizontalSystem s;
  s.field = f.field;
  s.variables = f.variables;
  s.parameters = f.parameters;
  s.base = polys("base");
  const Json& beta = array(member(j, "beta", root), "$.beta");
  for (std::size_t i = 0; i < beta.size(); ++i) s.beta.push_back(decode_longs(beta[i], at("$.beta", i)));
  // "partition": index lists per equation, or one equation index per support element
  const Json& part = array(member(j, "partition", root), "$.partition");
  if (!part.empty() && part[0].is_array()) {
    for (std::size_t i = 0; i < part.size(); ++i) s.equations.push_back(decode_indices(part[i], at("$.partition", i)));
  } else {
    for (std::size_t jdx = 0; jdx < part.size(); ++jdx) {
      std::size_t eq = decode_index(part[jdx], at("$.partition", jdx));
      if (s.equations.size() <= eq) s.equations.resize(eq + 1);
      s.equations[eq].push_back(jdx);
    }
  }
  if (j.contains("support")) s.support = polys("support");
  rethrow_at(root, [&] {
    s.validate();
    return 0;
  });
  f.horizontal = std::move(s);
  return f;
}

SystemFile read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, path.string() + ": " + e.what());
  }
  return parse_system_file(j);
}

Json serialize_system_file(const SystemFile& f) {
  Json out{{"field", encode(f.field)}, {"convention", encode(f.convention)}, {"variables", f.variables}};
  if (!f.parameters.empty()) out["parameters"] = f.parameters;
  auto polys = [](const std::vector<ValuedPolynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(encode(p));
    return a;
  };
  if (!f.polynomials.empty()) out["polynomials"] = polys(f.polynomials);
  if (f.horizontal) {
    const auto& s = *f.horizontal;
    out["base"] = polys(s.base);
    out["beta"] = s.beta;
    Json part = Json::array();
    for (const auto& eq : s.equations) part.push_back(eq);
    out["partition"] = part;
    if (!s.support.empty()) out["support"] = polys(s.support);
  }
  return out;
}

SystemFile system_file(const HorizontalSystem& s, Convention c) {
  SystemFile f;
  f.field = s.field;
  f.convention = c;
  f.variables = s.variables;
  f.parameters = s.parameters;
  f.horizontal = s;
  return f;
}

namespace {

struct Box {
  double xmin, ymin, xmax, ymax;
};

Box plot_box(const QMatrix& points, const PlotSpec& spec) {
  if (spec.box) {
    const auto& b = *spec.box;
    if (!(b[0] < b[2] && b[1] < b[3])) fail(ErrorCode::Precondition, "empty plot box");
    return {b[0].get_d(), b[1].get_d(), b[2].get_d(), b[3].get_d()};
  }
  if (points.empty()) return {-1, -1, 1, 1};
  Rational xmin = points[0][0], xmax = xmin, ymin = points[0][1], ymax = ymin;
  for (const auto& p : points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  Rational mx = (xmax - xmin) / 5, my = (ymax - ymin) / 5;
  Rational pad = std::max({mx, my, Rational(1)});
  if (sgn(mx) == 0) mx = pad;
  if (sgn(my) == 0) my = pad;
  return {Rational(xmin - mx).get_d(), Rational(ymin - my).get_d(), Rational(xmax + mx).get_d(),
          Rational(ymax + my).get_d()};
}

class Canvas {
 public:
  Canvas(const Box& b, double width) : b_(b), w_(width) {
    h_ = width * (b.ymax - b.ymin) / (b.xmax - b.xmin);
    out_ << std::fixed << std::setprecision(2);
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_ << "\" viewBox=\"0 0 "
         << w_ << ' ' << h_ << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  double px(double x) const { return (x - b_.xmin) / (b_.xmax - b_.xmin) * w_; }
  double py(double y) const { return (b_.ymax - y) / (b_.ymax - b_.ymin) * h_; }
  void line(double x0, double y0, double x1, double y1, double width) {
    out_ << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y1)
         << "\" stroke=\"black\" stroke-width=\"" << width << "\"/>\n";
  }
  void dot(double x, double y, bool hollow) {
    out_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\"" << (hollow ? "white" : "black")
         << "\" stroke=\"black\"/>\n";
  }
  void label(double x, double y, const std::string& text) {
    out_ << "<text x=\"" << px(x) + 4 << "\" y=\"" << py(y) - 4 << "\" font-size=\"14\" font-family=\"sans-serif\">"
         << text << "</text>\n";
  }
  // Largest t >= 0 with p + t d inside the box.
  double exit_time(double x, double y, double dx, double dy) const {
    double t = 1e300;
    if (dx > 0) t = std::min(t, (b_.xmax - x) / dx);
    if (dx < 0) t = std::min(t, (b_.xmin - x) / dx);
    if (dy > 0) t = std::min(t, (b_.ymax - y) / dy);
    if (dy < 0) t = std::min(t, (b_.ymin - y) / dy);
    return std::max(t, 0.0);
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Box b_;
  double w_, h_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const WeightedComplex& c, const PlotSpec& spec) {
  if (c.ambient_dim != 2) fail(ErrorCode::DimensionMismatch, "plots need ambient dimension 2");
  auto vr = vertices_and_rays(c);
  Canvas canvas(plot_box(vr.vertices, spec), spec.width);
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const auto& cell = c.cells[i];
    if (cell.vertices().empty()) continue;
    const QVector& v = cell.vertices()[0];
    double x0 = v[0].get_d(), y0 = v[1].get_d(), x1 = x0, y1 = y0;
    if (cell.vertices().size() == 2) {
      x1 = cell.vertices()[1][0].get_d();
      y1 = cell.vertices()[1][1].get_d();
    } else if (!cell.rays().empty()) {
      double dx = cell.rays()[0][0].get_d(), dy = cell.rays()[0][1].get_d();
      double t = canvas.exit_time(x0, y0, dx, dy);
      x1 = x0 + t * dx;
      y1 = y0 + t * dy;
    } else if (!cell.lineality().empty()) {
      double dx = cell.lineality()[0][0].get_d(), dy = cell.lineality()[0][1].get_d();
      double tf = canvas.exit_time(x0, y0, dx, dy), tb = canvas.exit_time(x0, y0, -dx, -dy);
      x1 = x0 + tf * dx;
      y1 = y0 + tf * dy;
      x0 -= tb * dx;
      y0 -= tb * dy;
    }
    double width = c.weights[i] > 1 ? 3.0 : 1.5;
    canvas.line(x0, y0, x1, y1, width);
    if (spec.label_multiplicities && c.weights[i] > 1)
      canvas.label((x0 + x1) / 2, (y0 + y1) / 2, to_string(c.weights[i]));
  }
  for (const auto& v : vr.vertices) canvas.dot(v[0].get_d(), v[1].get_d(), c.dim() == 0);
  return canvas.finish();
}

std::string render_subdivision_svg(const RegularSubdivision& s, const PlotSpec& spec) {
  const auto& pts = s.configuration.points;
  if (pts.empty() || pts[0].size() != 2) fail(ErrorCode::DimensionMismatch, "plots need ambient dimension 2");
  Canvas canvas(plot_box(pts, spec), spec.width);
  for (const auto& edge : subdivision_edges(s)) {
    // edges list all their collinear points; draw between the extreme ones
    QVector lo = pts[edge.front()], hi = lo;
    for (auto k : edge) {
      if (lex_less(pts[k], lo)) lo = pts[k];
      if (lex_less(hi, pts[k])) hi = pts[k];
    }
    canvas.line(lo[0].get_d(), lo[1].get_d(), hi[0].get_d(), hi[1].get_d(), 1.5);
  }
  for (const auto& p : pts) canvas.dot(p[0].get_d(), p[1].get_d(), false);
  return canvas.finish();
}

}  // namespace tropical::io
