#include "tropwall/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(to_string(q));
}

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(to_json(r));
  return a;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  Matrix m;
  for (const auto& r : j) m.push_back(vector_from_json(r));
  for (const auto& r : m)
    if (r.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
  return m;
}

IntMatrix int_matrix_from_json(const json& j) {
  IntMatrix out;
  for (const auto& r : matrix_from_json(j)) out.push_back(to_int_vector(r));
  return out;
}

json to_json(const Cone& c) {
  return json{{"ambient", c.ambient()}, {"rays", to_json(c.rays())}, {"lineality", to_json(c.lineality())}};
}

Cone cone_from_json(const json& j) {
  return Cone::from_rays(matrix_from_json(j.at("rays")), matrix_from_json(j.at("lineality")),
                         j.at("ambient").get<std::size_t>());
}

json to_json(const Polytope& p) { return json{{"ambient", p.ambient()}, {"vertices", to_json(p.vertices())}}; }

Polytope polytope_from_json(const json& j) { return Polytope::from_vertices(matrix_from_json(j.at("vertices"))); }

json to_json(const Fan& f) {
  Matrix rays;
  for (const auto& c : f.cones) rays.insert(rays.end(), c.rays().begin(), c.rays().end());
  rays = sorted_unique(rays);
  json cones = json::array();
  for (const auto& c : f.cones) {
    json idx = json::array();
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    cones.push_back(idx);
  }
  return json{{"format_version", kFormatVersion},
              {"ambient", f.ambient},
              {"lineality", to_json(f.lineality)},
              {"rays", to_json(rays)},
              {"maximal_cones", cones}};
}

Fan fan_from_json(const json& j) {
  Fan f;
  f.ambient = j.at("ambient").get<std::size_t>();
  f.lineality = matrix_from_json(j.at("lineality"));
  Matrix rays = matrix_from_json(j.at("rays"));
  for (const auto& idx : j.at("maximal_cones")) {
    Matrix r;
    for (const auto& i : idx) r.push_back(rays.at(i.get<std::size_t>()));
    f.cones.push_back(Cone::from_rays(r, f.lineality, f.ambient));
  }
  return f;
}

json to_json(const std::vector<Polynomial>& polys) {
  json a = json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

namespace {

const char* flag(Primality p) {
  switch (p) {
    case Primality::Prime:
      return "yes";
    case Primality::NotPrime:
      return "no";
    default:
      return "unknown";
  }
}

json cone_record(std::size_t id, const GroebnerCone& c, const Matrix& rays) {
  json idx = json::array();
  for (const auto& r : c.cone.rays())
    idx.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
  return json{{"id", id},
              {"dim", c.cone.dim()},
              {"rays", idx},
              {"maximal", c.maximal},
              {"weight", to_json(c.weight)},
              {"initial_ideal", to_json(c.initial.generators())},
              {"prime", flag(c.prime)},
              {"monomial_free", c.monomial_free}};
}

json with_records(json base, const std::vector<GroebnerCone>& cones) {
  Matrix rays = matrix_from_json(base["rays"]);
  json recs = json::array();
  for (std::size_t i = 0; i < cones.size(); ++i) recs.push_back(cone_record(i, cones[i], rays));
  base["cones"] = recs;
  return base;
}

}  // namespace

json to_json(const TropicalVariety& t) {
  // Rays of all cones, so that lower-dimensional cones can be indexed too.
  Fan all{t.ambient, t.lineality, {}};
  for (const auto& c : t.cones) all.cones.push_back(c.cone);
  json j = to_json(all);
  json maxc = json::array();
  for (std::size_t i = 0; i < t.cones.size(); ++i)
    if (t.cones[i].maximal) maxc.push_back(j["maximal_cones"][i]);
  j["maximal_cones"] = maxc;
  j = with_records(j, t.cones);
  j["f_vector"] = t.f_vector;
  j["complete"] = t.complete;
  return j;
}

json to_json(const GroebnerFan& g) {
  json j = with_records(to_json(g.fan()), g.cones);
  j["complete"] = g.complete;
  return j;
}

Ideal read_ideal(const std::string& text, const std::vector<std::string>& ring_names, bool laurent) {
  std::vector<std::string> names = ring_names;
  std::string body;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line.compare(start, 5, "ring:") == 0) {
      names.clear();
      std::string list = line.substr(start + 5);
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream ls(list);
      for (std::string v; ls >> v;) names.push_back(v);
      continue;
    }
    body += line + "\n";
  }
  if (names.empty()) names = collect_identifiers(body);
  RingPtr R = make_ring(names, laurent);
  std::vector<Polynomial> gens;
  for (auto& g : parse_polynomial_list(body, R))
    if (!g.is_zero()) gens.push_back(std::move(g));
  return Ideal(R, gens);
}

namespace {

// Coordinates on which the rows are injective: pivots of their echelon form.
std::vector<std::size_t> chart(const Matrix& rows) {
  if (rows.empty()) return {};
  Matrix m = rows;
  return rref(m);
}

}  // namespace

PlotData plot_fan(const Fan& fan) {
  Matrix L = fan.lineality;
  std::vector<std::size_t> lp = L.empty() ? std::vector<std::size_t>{} : rref(L);
  Matrix rays;
  for (const auto& c : fan.cones) rays.insert(rays.end(), c.rays().begin(), c.rays().end());
  rays = sorted_unique(rays);
  Matrix reduced;
  for (const auto& r : rays) reduced.push_back(L.empty() ? r : reduce_modulo(L, lp, r));

  PlotData p;
  for (std::size_t i = 0; i < fan.ambient; ++i)
    if (std::find(lp.begin(), lp.end(), i) == lp.end()) p.coordinates.push_back(i);
  if (p.coordinates.size() > 3) {
    p.coordinates = chart(reduced);
    if (p.coordinates.size() > 3) throw std::domain_error("fan has dimension above 3 modulo its lineality");
  }
  for (const auto& r : reduced) {
    Vector pt;
    for (auto c : p.coordinates) pt.push_back(r[c]);
    p.points.push_back(pt);
  }
  for (const auto& c : fan.cones) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    p.cells.push_back(idx);
  }
  return p;
}

PlotData plot_body(const Polytope& body) {
  const Matrix& V = body.vertices();
  if (V.empty()) throw std::invalid_argument("empty polytope");
  Matrix diffs;
  for (std::size_t i = 1; i < V.size(); ++i) diffs.push_back(V[i] - V[0]);
  PlotData p;
  p.coordinates = chart(diffs);
  if (p.coordinates.size() > 3) throw std::domain_error("body has dimension above 3");
  if (p.coordinates.empty()) p.coordinates.push_back(body.ambient() - 1);
  std::vector<std::size_t> all;
  for (const auto& v : V) {
    Vector pt;
    for (auto c : p.coordinates) pt.push_back(v[c]);
    all.push_back(p.points.size());
    p.points.push_back(pt);
  }
  p.cells.push_back(all);
  return p;
}

json to_json(const PlotData& p) {
  return json{{"format_version", kFormatVersion},
              {"coordinates", p.coordinates},
              {"points", to_json(p.points)},
              {"cells", p.cells}};
}

}  // namespace tropwall
