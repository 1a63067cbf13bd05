#include "tropwall/tropical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace tropwall {

namespace {

// Homogeneous model of the ideal. For non-homogeneous input J = I^h lives in
// one more variable (the first) and cones of I are slices v0 = 0.
struct Model {
  Ideal base;
  Ideal J;
  bool sliced;
  std::size_t n;
};

Model prepare(const Ideal& ideal) {
  Ideal c = clear_monomials(ideal);
  std::size_t n = c.ring()->arity();
  if (c.is_homogeneous()) return Model{c, c, false, n};
  return Model{c, homogenize(c), true, n};
}

Vector lift(const Model& m, const Vector& w) {
  if (w.size() != m.n) throw std::invalid_argument("weight length does not match ring");
  if (!m.sliced) return w;
  Vector out{Rational(0)};
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Matrix slice(const Model& m, const Matrix& rows) {
  if (!m.sliced) return rows;
  Matrix out;
  for (const auto& r : rows) out.emplace_back(r.begin() + 1, r.end());
  return out;
}

Vector negated(const Vector& w) { return Rational(-1) * w; }

MonomialOrder weight_order(const Vector& w) {
  return MonomialOrder(MonomialOrder::Base::GrevLex, {MonomialOrder::integer_row(negated(w))});
}

Vector exponent_difference(const Monomial& a, const Monomial& b) {
  Vector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Closure of the cone of weights whose refined order marks the same leading
// terms as `gb`; with a weight, terms tied with the leading one give equations.
Cone marked_cone(const Model& m, const GroebnerBasis& gb, const Vector* w) {
  Matrix ineq, eq;
  for (const auto& g : gb.elements) {
    Monomial lead = leading_monomial(g, gb.order);
    for (const auto& [mono, c] : g.terms()) {
      if (mono == lead) continue;
      Vector d = exponent_difference(mono, lead);
      if (w && sgn(dot(*w, d)) == 0)
        eq.push_back(d);
      else
        ineq.push_back(d);
    }
  }
  return Cone::from_inequalities(slice(m, ineq), slice(m, eq), m.n);
}

Cone full_cone(const GroebnerBasis& gb, std::size_t N) {
  Matrix ineq;
  for (const auto& g : gb.elements) {
    Monomial lead = leading_monomial(g, gb.order);
    for (const auto& [mono, c] : g.terms())
      if (mono != lead) ineq.push_back(exponent_difference(mono, lead));
  }
  return Cone::from_inequalities(ineq, {}, N);
}

Ideal initial_from_gb(const Model& m, const GroebnerBasis& gb, const Vector& wJ) {
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements) {
    Polynomial in = initial_form_weight(g, wJ);
    gens.push_back(m.sliced ? dehomogenize(in, m.base.ring()) : in);
  }
  return Ideal(m.base.ring(), gens);
}

bool visibly_has_monomial(const GroebnerBasis& gb, const Vector& wJ) {
  for (const auto& g : gb.elements)
    if (initial_form_weight(g, wJ).size() == 1) return true;
  return false;
}

GroebnerCone make_cone(const Model& m, Cone cone, const Vector& w, bool maximal, bool flags = true) {
  Vector wJ = lift(m, w);
  GroebnerBasis gb = buchberger(m.J, weight_order(wJ));
  Ideal in = initial_from_gb(m, gb, wJ);
  GroebnerCone out{std::move(cone), w, in};
  out.maximal = maximal;
  if (flags) {
    out.monomial_free = !visibly_has_monomial(gb, wJ) && !contains_monomial(in);
    out.prime = is_prime_binomial(in);
  }
  return out;
}

}  // namespace

Ideal clear_monomials(const Ideal& ideal) {
  if (!ideal.ring()->laurent) return ideal;
  RingPtr plain = with_laurent(ideal.ring(), false);
  std::vector<std::size_t> id(plain->arity());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.strip_monomial_content().rename(plain, id));
  return Ideal(plain, gens);
}

GroebnerCone groebner_cone(const Ideal& ideal, const Vector& w) {
  Model m = prepare(ideal);
  Vector wJ = lift(m, w);
  GroebnerBasis gb = buchberger(m.J, weight_order(wJ));
  Cone c = marked_cone(m, gb, &wJ);
  GroebnerCone out{c, w, initial_from_gb(m, gb, wJ)};
  out.monomial_free = !visibly_has_monomial(gb, wJ) && !contains_monomial(out.initial);
  out.prime = is_prime_binomial(out.initial);
  out.maximal = c.dim() == m.n;
  return out;
}

Matrix lineality_space(const Ideal& ideal) {
  Model m = prepare(ideal);
  Vector zero(m.J.ring()->arity(), Rational(0));
  GroebnerBasis gb = buchberger(m.J, weight_order(zero));
  return marked_cone(m, gb, &zero).lineality();
}

Fan GroebnerFan::fan() const {
  Fan f{ambient, lineality, {}};
  for (const auto& c : cones) f.cones.push_back(c.cone);
  return f;
}

GroebnerFan groebner_fan(const Ideal& ideal, std::size_t budget) {
  Model m = prepare(ideal);
  const std::size_t N = m.J.ring()->arity();
  GroebnerFan out;
  out.ambient = m.n;

  std::map<std::string, Cone> seen;
  std::deque<Cone> queue;
  Cone start = full_cone(buchberger(m.J, MonomialOrder(MonomialOrder::Base::GrevLex)), N);
  seen.emplace(start.key(), start);
  queue.push_back(start);
  while (!queue.empty()) {
    Cone c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
      Cone facet = c.face_from_facets({i});
      Vector p = facet.relative_interior_point();
      // Weight p - eps * a for the inner normal a of the facet.
      MonomialOrder flip(MonomialOrder::Base::GrevLex,
                         {MonomialOrder::integer_row(negated(p)), MonomialOrder::integer_row(c.facets()[i])});
      Cone next = full_cone(buchberger(m.J, flip), N);
      std::string k = next.key();
      if (seen.count(k)) continue;
      if (seen.size() >= budget) {
        out.complete = false;
        queue.clear();
        break;
      }
      seen.emplace(k, next);
      queue.push_back(next);
    }
  }

  std::vector<Cone> cones;
  for (const auto& [k, c] : seen) {
    Cone s = m.sliced ? Cone::from_inequalities(slice(m, c.facets()), slice(m, c.equations()), m.n) : c;
    cones.push_back(s);
  }
  std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) { return a.key() < b.key(); });
  for (auto& c : cones) {
    Vector w = c.relative_interior_point();
    out.cones.push_back(make_cone(m, c, w, true));
  }
  if (!out.cones.empty()) out.lineality = out.cones[0].cone.lineality();
  return out;
}

std::vector<Cone> principal_groebner_fan(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton fan of zero");
  const std::size_t n = f.ring()->arity();
  Matrix pts;
  for (const auto& [m, c] : f.terms()) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m[i];
    pts.push_back(v);
  }
  Polytope newton = Polytope::from_vertices(pts);
  std::vector<Cone> out;
  for (const auto& v : newton.vertices()) {
    Matrix ineq;
    for (const auto& u : newton.vertices())
      if (u != v) ineq.push_back(u - v);
    out.push_back(Cone::from_inequalities(ineq, {}, n));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) { return a.key() < b.key(); });
  return out;
}

std::vector<const GroebnerCone*> TropicalVariety::maximal_cones() const {
  std::vector<const GroebnerCone*> out;
  for (const auto& c : cones)
    if (c.maximal) out.push_back(&c);
  return out;
}

Fan TropicalVariety::fan() const {
  Fan f{ambient, lineality, {}};
  for (const auto* c : maximal_cones()) f.cones.push_back(c->cone);
  return f;
}

TropicalVariety tropicalize(const Ideal& ideal, std::size_t budget) {
  Model m = prepare(ideal);
  GroebnerFan gf = groebner_fan(ideal, budget);
  TropicalVariety out;
  out.ambient = m.n;
  out.complete = gf.complete;
  out.lineality = lineality_space(ideal);

  // Face lattice of the Gröbner fan, deduplicated by canonical key.
  std::map<std::string, Cone> faces;
  std::map<std::string, std::vector<std::string>> children;
  std::function<void(const Cone&)> walk = [&](const Cone& c) {
    std::string k = c.key();
    if (faces.count(k)) return;
    faces.emplace(k, c);
    auto& kids = children[k];
    if (c.dim() == c.lineality_dim()) return;
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
      Cone f = c.face_from_facets({i});
      kids.push_back(f.key());
      walk(f);
    }
  };
  for (const auto& gc : gf.cones) walk(gc.cone);

  std::vector<std::string> order;
  for (const auto& [k, c] : faces) order.push_back(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) { return faces.at(a).dim() > faces.at(b).dim(); });

  // Faces of a monomial-free cone are monomial-free, so tests run top-down.
  std::map<std::string, bool> free;
  std::function<void(const std::string&)> mark = [&](const std::string& k) {
    auto it = free.find(k);
    if (it != free.end() && it->second) return;
    free[k] = true;
    for (const auto& c : children[k]) mark(c);
  };
  for (const auto& k : order) {
    if (free.count(k) && free[k]) continue;
    const Cone& c = faces.at(k);
    Vector wJ = lift(m, c.relative_interior_point());
    GroebnerBasis gb = buchberger(m.J, weight_order(wJ));
    bool ok = !visibly_has_monomial(gb, wJ) && !contains_monomial(initial_from_gb(m, gb, wJ));
    if (ok)
      mark(k);
    else
      free[k] = false;
  }

  std::vector<std::string> trop;
  for (const auto& k : order)
    if (free[k]) trop.push_back(k);
  std::sort(trop.begin(), trop.end(), [&](const std::string& a, const std::string& b) {
    std::size_t da = faces.at(a).dim(), db = faces.at(b).dim();
    return da != db ? da < db : a < b;
  });
  for (const auto& k : trop) {
    const Cone& c = faces.at(k);
    bool maximal = true;
    for (const auto& o : trop)
      if (o != k && faces.at(o).dim() == c.dim() + 1 && faces.at(o).contains(c)) {
        maximal = false;
        break;
      }
    GroebnerCone gc = make_cone(m, c, c.relative_interior_point(), maximal, false);
    gc.monomial_free = true;
    gc.prime = is_prime_binomial(gc.initial);
    out.cones.push_back(std::move(gc));
  }
  std::size_t lin = out.lineality.size();
  for (const auto& c : out.cones) {
    if (c.cone.dim() <= lin) continue;
    std::size_t idx = c.cone.dim() - lin - 1;
    if (out.f_vector.size() <= idx) out.f_vector.resize(idx + 1, 0);
    ++out.f_vector[idx];
  }
  return out;
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::Yes:
      return "yes";
    case Certainty::No:
      return "no";
    default:
      return "unknown";
  }
}

ToricPrime toric_associated_prime(const Ideal& initial) {
  Ideal base = clear_monomials(initial);
  Ideal sat = saturate_by_variables(base);
  GroebnerBasis gb = buchberger(sat, MonomialOrder(MonomialOrder::Base::GrevLex));
  Ideal reduced(sat.ring(), gb.elements);
  if (is_unit_ideal(reduced)) return ToricPrime{reduced, Certainty::No};
  bool binomial = std::all_of(gb.elements.begin(), gb.elements.end(), [](const Polynomial& g) { return g.size() <= 2; });
  if (!binomial) return ToricPrime{reduced, Certainty::Unknown};
  switch (is_prime_binomial(reduced)) {
    case Primality::Prime:
      return ToricPrime{reduced, Certainty::Yes};
    case Primality::NotPrime:
      return ToricPrime{reduced, Certainty::No};
    default:
      return ToricPrime{reduced, Certainty::Unknown};
  }
}

}  // namespace tropwall
