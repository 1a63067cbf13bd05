#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropwall/groebner.hpp"
#include "tropwall/nok.hpp"
#include "tropwall/polyhedra.hpp"
#include "tropwall/tropical.hpp"

namespace tropwall {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Integers are written as JSON numbers when they fit in 64 bits, all other
/// rationals as "p/q" strings. Readers accept both.
json to_json(const Rational& q);
json to_json(const Vector& v);
json to_json(const Matrix& m);
Rational rational_from_json(const json& j);
Vector vector_from_json(const json& j);
Matrix matrix_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const Cone& c);
Cone cone_from_json(const json& j);
json to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

/// {"format_version", "ambient", "lineality", "rays", "maximal_cones"}; rays
/// are the union of the cone rays, maximal_cones lists ray indices.
json to_json(const Fan& f);
Fan fan_from_json(const json& j);

json to_json(const std::vector<Polynomial>& polys);

/// Fan JSON plus one record per cone: initial ideal, flags, weight.
json to_json(const TropicalVariety& t);
json to_json(const GroebnerFan& g);

/// Ideal text: generators separated by newlines, commas or semicolons.
/// Lines starting with '#' are comments; a line "ring: a,b,c" fixes the
/// variables. Otherwise `ring_names` is used, or the identifiers in order of
/// appearance.
Ideal read_ideal(const std::string& text, const std::vector<std::string>& ring_names = {}, bool laurent = false);

/// Coordinates modulo a lineality space: points are reduced modulo the
/// lineality and the pivot coordinates of its echelon basis are dropped.
struct PlotData {
  std::vector<std::size_t> coordinates;  // kept ambient coordinates
  Matrix points;
  std::vector<std::vector<std::size_t>> cells;  // indices into points
};

/// Rays of the maximal cones of a fan mod lineality; fails above dimension 3.
PlotData plot_fan(const Fan& fan);
/// Vertices of a polytope with its constant coordinates dropped.
PlotData plot_body(const Polytope& body);
json to_json(const PlotData& p);

}  // namespace tropwall
