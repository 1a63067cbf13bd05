#include "tropwall/wallcross.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

namespace {

Vector head(const Vector& v, std::size_t k) { return Vector(v.begin(), v.begin() + static_cast<long>(k)); }

// Row (b, a', a_d) of a body in Q^d, split off the last coordinate.
struct Split {
  Rational b;
  Vector a;
  Rational ad;
};

Split split(const Vector& row) {
  Split s{row[0], Vector(row.begin() + 1, row.end() - 1), row.back()};
  return s;
}

Matrix append_row(Matrix m, const Vector& v) {
  m.push_back(v);
  return m;
}

std::vector<Affine> unique_forms(std::vector<Affine> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Rows (c, a) of the inequality f - g >= 0.
Vector difference_row(const Affine& f, const Affine& g) {
  Vector row{f.c - g.c};
  Vector a = f.a - g.a;
  row.insert(row.end(), a.begin(), a.end());
  return row;
}

}  // namespace

WallSetup wall_setup_from_matrices(const WeightMatrix& M, const Vector& w1, const Vector& w2) {
  if (M.d() == 0) throw std::invalid_argument("empty wall matrix");
  if (w1.size() != M.ambient() || w2.size() != M.ambient())
    throw std::invalid_argument("last rows do not match the wall matrix");
  WallSetup s;
  s.M = M;
  s.M1 = WeightMatrix(append_row(M.rows, w1));
  s.M2 = WeightMatrix(append_row(M.rows, w2));
  s.body = no_body(s.M);
  s.body1 = no_body(s.M1);
  s.body2 = no_body(s.M2);
  s.d = s.M1.d();
  return s;
}

WallSetup wall_setup(const GroebnerCone& c1, const GroebnerCone& c2, const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("wall crossing needs a homogeneous ideal");
  if (c1.cone == c2.cone) throw std::invalid_argument("the two cones coincide");
  if (!c1.maximal || !c2.maximal) throw std::invalid_argument("cones must be maximal");
  if (c1.prime != Primality::Prime || c2.prime != Primality::Prime) throw std::invalid_argument("cones must be prime");
  auto common = common_face(c1.cone, c2.cone);
  if (!are_adjacent(c1.cone, c2.cone) || !common) throw std::invalid_argument("cones are not adjacent");

  const std::size_t n = c1.cone.ambient();
  Matrix span = common->lineality();
  span.insert(span.end(), common->rays().begin(), common->rays().end());
  Matrix rows{Vector(n, Rational(1))};
  if (!in_span(span, rows[0])) throw std::invalid_argument("all-ones vector is not in the span of the wall");
  for (const auto& v : span)
    if (rank(append_row(rows, v)) > rows.size()) rows.push_back(v);
  if (rows.size() != common->dim()) throw std::invalid_argument("rows fail to span the wall");

  WallSetup s = wall_setup_from_matrices(WeightMatrix(rows), c1.cone.relative_interior_point(),
                                         c2.cone.relative_interior_point());
  s.c1 = c1;
  s.c2 = c2;
  s.common = *common;
  return s;
}

WallSetup wall_setup(const TropicalVariety& trop, std::size_t i1, std::size_t i2, const Ideal& I) {
  if (i1 >= trop.cones.size() || i2 >= trop.cones.size()) throw std::out_of_range("cone index");
  if (i1 == i2) throw std::invalid_argument("the two cones coincide");
  return wall_setup(trop.cones[i1], trop.cones[i2], I);
}

Interval fiber_interval(const Polytope& body, const Vector& xi) {
  if (body.empty() || xi.size() + 1 != body.ambient()) throw std::invalid_argument("fiber point has the wrong size");
  std::optional<Rational> lo, hi;
  for (const auto& row : body.equations()) {
    Split e = split(row);
    Rational r = e.b + dot(e.a, xi);
    if (sgn(e.ad) == 0) {
      if (r != 0) throw std::domain_error("point outside the projection");
      continue;
    }
    Rational h = -r / e.ad;
    if (lo && *lo != h) throw std::domain_error("point outside the projection");
    lo = hi = h;
  }
  for (const auto& row : body.facets()) {
    Split f = split(row);
    Rational r = f.b + dot(f.a, xi);
    if (sgn(f.ad) == 0) {
      if (r < 0) throw std::domain_error("point outside the projection");
    } else if (sgn(f.ad) > 0) {
      Rational h = -r / f.ad;
      if (!lo || h > *lo) lo = h;
    } else {
      Rational h = r / -f.ad;
      if (!hi || h < *hi) hi = h;
    }
  }
  if (!lo || !hi || *lo > *hi) throw std::domain_error("point outside the projection");
  return {*lo, *hi};
}

Envelope envelope(const Polytope& body) {
  Envelope env;
  for (const auto& row : body.equations()) {
    Split e = split(row);
    if (sgn(e.ad) == 0) continue;
    Affine f{Rational(-1) / e.ad * e.a, -e.b / e.ad};
    env.lower = env.upper = {f};
    return env;
  }
  for (const auto& row : body.facets()) {
    Split f = split(row);
    if (sgn(f.ad) > 0) env.lower.push_back({Rational(-1) / f.ad * f.a, -f.b / f.ad});
    if (sgn(f.ad) < 0) env.upper.push_back({Rational(-1) / f.ad * f.a, -f.b / f.ad});
  }
  env.lower = unique_forms(env.lower);
  env.upper = unique_forms(env.upper);
  return env;
}

std::vector<EnvelopeCell> envelope_cells(const WallSetup& s) {
  const std::size_t m = s.d - 1;
  Envelope e1 = envelope(s.body1), e2 = envelope(s.body2);
  std::vector<EnvelopeCell> cells;
  // Choose one active form per envelope; the region where all four are
  // active is cut out by linear inequalities inside Delta.
  auto active = [](const std::vector<Affine>& forms, std::size_t j, bool is_max, Matrix& rows) {
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (k != j) rows.push_back(is_max ? difference_row(forms[j], forms[k]) : difference_row(forms[k], forms[j]));
  };
  for (std::size_t a = 0; a < e1.lower.size(); ++a)
    for (std::size_t b = 0; b < e1.upper.size(); ++b)
      for (std::size_t c = 0; c < e2.lower.size(); ++c)
        for (std::size_t d = 0; d < e2.upper.size(); ++d) {
          Matrix rows = s.body.facets();
          active(e1.lower, a, true, rows);
          active(e1.upper, b, false, rows);
          active(e2.lower, c, true, rows);
          active(e2.upper, d, false, rows);
          Polytope cell = Polytope::from_inequalities(rows, s.body.equations(), m);
          if (cell.empty() || cell.dim() != s.body.dim()) continue;
          cells.push_back({cell, e1.lower[a], e1.upper[b], e2.lower[c], e2.upper[d]});
        }
  return cells;
}

KappaCertificate certify_kappa(const WallSetup& s) {
  KappaCertificate cert;
  Vector center(s.d - 1, Rational(0));
  const Matrix& verts = s.body.vertices();
  for (const auto& v : verts) center = center + v;
  center = Rational(1, static_cast<long>(verts.size())) * center;
  Rational l1 = fiber_interval(s.body1, center).length();
  Rational l2 = fiber_interval(s.body2, center).length();
  if (sgn(l1) == 0 || sgn(l2) == 0) throw std::domain_error("fibers are degenerate");
  cert.kappa = l2 / l1;

  cert.cells = envelope_cells(s);
  Matrix all;
  for (const auto& cell : cert.cells) {
    for (const auto& v : cell.domain.vertices()) {
      all.push_back(v);
      // The cell forms must agree with the fibers, and the ratio must hold.
      Interval f1 = fiber_interval(s.body1, v), f2 = fiber_interval(s.body2, v);
      if (f1.lo != cell.phi1(v) || f1.hi != cell.psi1(v) || f2.lo != cell.phi2(v) || f2.hi != cell.psi2(v))
        cert.constant = false;
      if (f2.length() != cert.kappa * f1.length()) cert.constant = false;
    }
  }
  cert.vertices = sorted_unique(all);
  if (cert.cells.empty()) cert.constant = false;
  return cert;
}

Rational kappa(const WallSetup& s) {
  KappaCertificate c = certify_kappa(s);
  if (!c.constant) throw std::runtime_error("fiber ratio is not constant");
  return c.kappa;
}

bool projections_agree(const WallSetup& s) {
  std::vector<std::size_t> keep(s.d - 1);
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return s.body1.project(keep) == s.body && s.body2.project(keep) == s.body;
}

namespace {

Vector apply_map(const WallSetup& s, const Rational& k, const Vector& q, bool forward, bool flip) {
  if (q.size() != s.d) throw std::invalid_argument("point has the wrong size");
  const Polytope& src = forward ? s.body1 : s.body2;
  const Polytope& dst = forward ? s.body2 : s.body1;
  if (!src.contains(q)) throw std::domain_error("point is not in the source body");
  const Rational r = forward ? k : Rational(1) / k;
  Vector x = head(q, s.d - 1);
  Interval from = fiber_interval(src, x), to = fiber_interval(dst, x);
  Vector out = x;
  const Rational offset = r * (q.back() - from.lo);
  out.push_back(flip ? Rational(to.hi - offset) : Rational(offset + to.lo));
  return out;
}

}  // namespace

Vector shift_map(const WallSetup& s, const Rational& k, const Vector& q, bool forward) {
  return apply_map(s, k, q, forward, false);
}

Vector flip_map(const WallSetup& s, const Rational& k, const Vector& q, bool forward) {
  return apply_map(s, k, q, forward, true);
}

}  // namespace tropwall
