#include "tropical/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tropical;
using io::Json;

namespace {

enum Exit { Ok = 0, Other = 1, ParseFailure = 2, Usage = 3, NotTransverse = 4 };

struct Globals {
  std::string field;
  std::string convention;
  std::uint64_t seed = kDefaultPerturbationSeed;
  bool seed_given = false;
  bool json = false;
};

ValuedField field_from_flag(const std::string& s) {
  if (s.rfind("Qp:", 0) == 0) return io::decode_field(Json{{"Qp", s.substr(3)}}, "--field");
  return io::decode_field(Json(s), "--field");
}

io::SystemFile load(const std::string& path, const Globals& g) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
  // flags override the document
  if (!g.field.empty()) j["field"] = io::encode(field_from_flag(g.field));
  if (!g.convention.empty()) j["convention"] = g.convention;
  return io::parse_system_file(j);
}

const ValuedPolynomial& pick(const io::SystemFile& f, std::size_t index) {
  if (index >= f.polynomials.size())
    fail(ErrorCode::Precondition, "polynomial index " + std::to_string(index) + " out of range (" +
                                      std::to_string(f.polynomials.size()) + " polynomials)");
  return f.polynomials[index];
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string points_text(const WeightedComplex& c) {
  std::string out;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const auto& cell = c.cells[i];
    out += cell.dim() == 0 ? "point (" : "cell of dimension " + std::to_string(cell.dim()) + " through (";
    const QVector p = cell.dim() == 0 ? cell.vertices().front() : cell.relative_interior_point();
    for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + to_string(p[k]);
    out += ") multiplicity " + to_string(c.weights[i]) + "\n";
  }
  return out;
}

Integer total_weight(const WeightedComplex& c) {
  Integer t = 0;
  for (const auto& w : c.weights) t += w;
  return t;
}

Json complex_summary(const WeightedComplex& c) {
  auto vr = vertices_and_rays(c);
  Json cells = Json::array();
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    cells.push_back({{"indices", vr.cells[i]}, {"weight", io::encode(c.weights[i])}});
  return {{"ambient_dim", c.ambient_dim},
          {"dim", c.dim()},
          {"vertices", io::encode(vr.vertices)},
          {"rays", io::encode(vr.rays)},
          {"lineality", io::encode(vr.lineality)},
          {"maximal_cells", cells},
          {"balanced", check_balancing(c).balanced}};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact tropical geometry: hypersurfaces, stable intersections and generic root counts"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Override the field: Q, Q(t) or Qp:<prime>");
  app.add_option("--convention", g.convention, "Override the convention: min or max")
      ->check(CLI::IsMember({"min", "max"}));
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for perturbations and liftings");
  app.add_flag("--json", g.json, "Machine-readable JSON output");

  std::string input, input_b, svg, subdivision_svg, out;
  std::size_t index = 0, index_b = 1;
  long n = 0, m = 0;
  std::string simplify = "on";
  const CLI::Validator positive(
      [](std::string& v) {
        long x = 0;
        return CLI::detail::lexical_cast(v, x) && x > 0 ? std::string() : "must be a positive integer";
      },
      "POSITIVE");
  bool check_intersection = false;

  auto* trop = app.add_subcommand("tropicalize", "Tropicalize one polynomial of a system file");
  trop->add_option("input", input, "System file")->required();
  trop->add_option("--index", index, "Polynomial index");

  auto* hyp = app.add_subcommand("hypersurface", "Tropical hypersurface of one polynomial");
  hyp->add_option("input", input, "System file")->required();
  hyp->add_option("--index", index, "Polynomial index");
  hyp->add_option("--svg", svg, "Write an SVG of the curve (plane curves only)");
  hyp->add_option("--subdivision-svg", subdivision_svg, "Write an SVG of the dual subdivision");

  auto* stab = app.add_subcommand("stable-intersection", "Stable intersection of two hypersurfaces");
  stab->add_option("input", input, "System file for the first polynomial")->required();
  stab->add_option("input_b", input_b, "System file for the second polynomial (default: the first file)");
  stab->add_option("--index-a", index, "Polynomial index in the first file");
  stab->add_option("--index-b", index_b, "Polynomial index in the second file (default 1, or 0 with two files)");

  auto* trans = app.add_subcommand("transversal", "Tropical transversality of a base");
  trans->add_option("input", input, "System file; uses \"base\" or else \"polynomials\"")->required();

  auto* root = app.add_subcommand("root-count", "Generic root count of a horizontal system");
  root->add_option("input", input, "System file with base, beta and partition")->required();
  root->add_option("--simplify", simplify, "Simplify the modification")->check(CLI::IsMember({"on", "off"}));
  root->add_flag("--check-intersection", check_intersection, "Cross-check with the tropical intersection number");

  auto* osc = app.add_subcommand("oscillator", "Write the oscillator system file");
  osc->add_option("--n", n, "Number of nonlinear terms")->required()->check(positive);
  osc->add_option("--m", m, "Degree parameter")->required()->check(positive);
  osc->add_option("--out", out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }
  g.seed_given = seed_opt->count() > 0;

  if (*trop) {
    auto f = load(input, g);
    auto t = tropicalize(pick(f, index), f.semiring_map());
    std::string text;
    for (const auto& [e, c] : t.terms()) text += to_string(c) + " " + monomial_text(e, f.variables) + "\n";
    Json j = io::encode(t);
    j["variables"] = f.variables;
    emit(g, j, text);
  } else if (*hyp) {
    auto f = load(input, g);
    auto h = tropical_hypersurface(tropicalize(pick(f, index), f.semiring_map()));
    if (!svg.empty()) std::ofstream(svg) << io::render_svg(h.complex);
    if (!subdivision_svg.empty()) std::ofstream(subdivision_svg) << io::render_subdivision_svg(h.dual);
    Json j = complex_summary(h.complex);
    auto vr = vertices_and_rays(h.complex);
    std::string text = std::to_string(vr.vertices.size()) + " vertices, " + std::to_string(vr.rays.size()) +
                       " rays, " + std::to_string(h.complex.cells.size()) + " maximal cells\n";
    for (const auto& v : vr.vertices) text += "vertex " + io::encode(v).dump() + "\n";
    emit(g, j, text);
  } else if (*stab) {
    auto fa = load(input, g);
    auto fb = input_b.empty() ? fa : load(input_b, g);
    if (!input_b.empty() && stab->get_option("--index-b")->count() == 0) index_b = 0;
    auto map = fa.semiring_map();
    if (!(fb.semiring_map().field == map.field) || fb.convention != fa.convention)
      fail(ErrorCode::Precondition, "both inputs must share field and convention");
    auto ha = tropical_hypersurface(tropicalize(pick(fa, index), map)).complex;
    auto hb = tropical_hypersurface(tropicalize(pick(fb, index_b), map)).complex;
    auto s = stable_intersection(ha, hb, g.seed);
    Json cells = Json::array();
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      const auto& c = s.cells[i];
      Json e{{"weight", io::encode(s.weights[i])}};
      if (c.dim() == 0)
        e["point"] = io::encode(c.vertices().front());
      else
        e["cell"] = io::encode(c);
      cells.push_back(e);
    }
    Json j{{"dim", s.dim()}, {"cells", cells}, {"total_multiplicity", io::encode(total_weight(s))}};
    emit(g, j, points_text(s) + "total multiplicity " + to_string(total_weight(s)) + "\n");
  } else if (*trans) {
    auto f = load(input, g);
    const auto& base = f.horizontal ? f.horizontal->base : f.polynomials;
    auto cert = is_tropically_transverse(base, f.semiring_map());
    std::string text = cert.verdict ? "transverse\n"
                                    : "not transverse (deficit " + std::to_string(cert.witness->deficit) + ")\n";
    emit(g, io::encode(cert), text);
  } else if (*root) {
    auto f = load(input, g);
    if (!f.horizontal) fail(ErrorCode::Precondition, "root-count needs a horizontal system (base, beta, partition)");
    RootCountOptions o;
    o.simplify = simplify == "on";
    o.check_intersection = check_intersection;
    o.convention = f.convention;
    if (g.seed_given) o.seed = g.seed;
    try {
      auto r = generic_root_count(*f.horizontal, o);
      std::string text = to_string(r.count) + "\n";
      if (r.intersection_number) text += "intersection number " + to_string(*r.intersection_number) + "\n";
      emit(g, io::encode(r), text);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotTransverse) throw;
      auto cert = is_tropically_transverse(f.horizontal->base, f.semiring_map());
      Json j{{"error", to_string(e.code())}, {"message", e.what()}, {"certificate", io::encode(cert)}};
      if (g.json) std::cout << j.dump() << "\n";
      std::cerr << "error: " << e.what() << "\n";
      return NotTransverse;
    }
  } else if (*osc) {
    auto s = nonlinear_resonator_system(n, m);
    std::string doc = io::serialize_system_file(io::system_file(s)).dump(2) + "\n";
    if (out.empty()) {
      std::cout << doc;
    } else {
      std::ofstream file(out);
      if (!file) fail(ErrorCode::Precondition, "cannot write " + out);
      file << doc;
    }
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Parse: return ParseFailure;
      case ErrorCode::NotTransverse: return NotTransverse;
      case ErrorCode::Precondition:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::ArityMismatch:
      case ErrorCode::NonSquare:
      case ErrorCode::EmptyInput:
      case ErrorCode::ZeroInput:
      case ErrorCode::FieldMismatch:
      case ErrorCode::ConventionMismatch:
      case ErrorCode::NonComplementary: return Usage;
      default: return Other;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Other;
  }
}
