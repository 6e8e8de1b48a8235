#pragma once

#include "tropical/hypersurface.hpp"
#include "tropical/rootcount.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>

namespace tropical::io {

using Json = nlohmann::ordered_json;

// Encoders. Every number is written as an exact rational string.
Json encode(const Rational& q);
Json encode(const Integer& z);
Json encode(const QVector& v);
Json encode(const QMatrix& m);
Json encode(const ValuedField& k);
Json encode(Convention c);
Json encode(const TropicalPolynomial& f);
Json encode(const ValuedPolynomial& f);  // term list of {"coeff", "monomial"}
Json encode(const Polyhedron& p);
Json encode(const WeightedComplex& c);
Json encode(const MixedCell& c);
Json encode(const TransversalityCertificate& c);
Json encode(const HorizontalSystem& s);
Json encode(const RootCount& r);

// Decoders; malformed input raises Parse with the offending JSON path.
Rational decode_rational(const Json& j, const std::string& path = "$");
Integer decode_integer(const Json& j, const std::string& path = "$");
QVector decode_vector(const Json& j, const std::string& path = "$");
QMatrix decode_matrix(const Json& j, const std::string& path = "$");
ValuedField decode_field(const Json& j, const std::string& path = "$");
Convention decode_convention(const Json& j, const std::string& path = "$");
TropicalPolynomial decode_tropical_polynomial(const Json& j, const std::string& path = "$");
ValuedPolynomial decode_polynomial(const Json& j, const ValuedField& k, std::size_t arity,
                                   const std::string& path = "$");
Polyhedron decode_polyhedron(const Json& j, const std::string& path = "$");
WeightedComplex decode_complex(const Json& j, const std::string& path = "$");
MixedCell decode_mixed_cell(const Json& j, const std::string& path = "$");
TransversalityCertificate decode_certificate(const Json& j, const std::string& path = "$");
HorizontalSystem decode_horizontal_system(const Json& j, const std::string& path = "$");
RootCount decode_root_count(const Json& j, const std::string& path = "$");

/// Input document of the command-line tool. A file describes a horizontal
/// system when it carries "base".
struct SystemFile {
  ValuedField field;
  Convention convention = Convention::Min;
  std::vector<std::string> variables;
  std::vector<std::string> parameters;
  std::vector<ValuedPolynomial> polynomials;
  std::optional<HorizontalSystem> horizontal;

  SemiringMap semiring_map() const { return {field, convention}; }
};

SystemFile parse_system_file(const Json& j);
SystemFile read_system_file(const std::filesystem::path& path);
Json serialize_system_file(const SystemFile& f);
SystemFile system_file(const HorizontalSystem& s, Convention c = Convention::Min);

/// Rendering options for 2-D pictures. Without a box, the vertices' bounding
/// box grown by a 20% margin is used.
struct PlotSpec {
  std::optional<std::array<Rational, 4>> box;  // xmin, ymin, xmax, ymax
  double width = 480;
  bool label_multiplicities = true;
};

/// SVG of a weighted complex in R^2; rays and lines are clipped at the box.
/// DimensionMismatch for other ambient dimensions.
std::string render_svg(const WeightedComplex& c, const PlotSpec& spec = {});
/// SVG of the regular subdivision dual to a plane curve.
std::string render_subdivision_svg(const RegularSubdivision& s, const PlotSpec& spec = {});

}  // namespace tropical::io
