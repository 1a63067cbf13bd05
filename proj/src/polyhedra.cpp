#include "tropwall/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

namespace {

using Bits = std::vector<bool>;

struct Ray {
  Vector v;
  Bits tight;
};

// Canonical representatives of `rows` modulo span(basis).
Matrix reduce_rows(const Matrix& rows, const Matrix& basis) {
  Matrix b = basis;
  auto piv = rref(b);
  Matrix out;
  for (const auto& r : rows) {
    Vector v = primitive(reduce_modulo(b, piv, r));
    if (!is_zero(v)) out.push_back(v);
  }
  return sorted_unique(out);
}

}  // namespace

Matrix sorted_unique(Matrix rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

DDResult double_description(const Matrix& inequalities, const Matrix& equations, std::size_t n) {
  for (const auto& r : inequalities)
    if (r.size() != n) throw std::invalid_argument("double description: dimension mismatch");
  for (const auto& r : equations)
    if (r.size() != n) throw std::invalid_argument("double description: dimension mismatch");

  Matrix lin;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, Rational(0));
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<Ray> rays;
  const std::size_t m = inequalities.size();

  // Removes the part of the lineality not orthogonal to a. Returns the
  // pivot vector (with a.l > 0) or nullopt when a vanishes on the lineality.
  auto cut_lineality = [&](const Vector& a) -> std::optional<Vector> {
    std::size_t k = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (sgn(dot(a, lin[i])) != 0) {
        k = i;
        break;
      }
    if (k == lin.size()) return std::nullopt;
    Vector piv = lin[k];
    Rational ap = dot(a, piv);
    if (sgn(ap) < 0) {
      piv = Rational(-1) * piv;
      ap = -ap;
    }
    lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(k));
    for (auto& l : lin) {
      Rational al = dot(a, l);
      if (sgn(al) != 0) l = primitive(l - (al / ap) * piv);
    }
    for (auto& r : rays) {
      Rational ar = dot(a, r.v);
      if (sgn(ar) != 0) r.v = primitive(r.v - (ar / ap) * piv);
    }
    return primitive(piv);
  };

  for (const auto& e : equations) cut_lineality(e);

  for (std::size_t k = 0; k < m; ++k) {
    const Vector& a = inequalities[k];
    if (auto piv = cut_lineality(a)) {
      for (auto& r : rays) r.tight[k] = true;
      Bits t(m, false);
      for (std::size_t j = 0; j < k; ++j) t[j] = true;
      rays.push_back({*piv, t});
      continue;
    }
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = sgn(val[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zero) rays[i].tight[k] = true;
      continue;
    }
    std::vector<Ray> next;
    for (auto i : pos) next.push_back(rays[i]);
    for (auto i : zero) {
      next.push_back(rays[i]);
      next.back().tight[k] = true;
    }
    for (auto p : pos)
      for (auto q : neg) {
        Bits common(m, false);
        for (std::size_t j = 0; j < k; ++j) common[j] = rays[p].tight[j] && rays[q].tight[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool superset = true;
          for (std::size_t j = 0; j < k && superset; ++j)
            if (common[j] && !rays[r].tight[j]) superset = false;
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        Vector v = primitive(val[p] * rays[q].v - val[q] * rays[p].v);
        common[k] = true;
        next.push_back({v, common});
      }
    rays = std::move(next);
  }

  DDResult out;
  for (auto& r : rays) out.rays.push_back(r.v);
  out.lineality = lin;
  return out;
}

void Cone::canonicalize_from_dd(const DDResult& primal, const DDResult& dual) {
  lineality_ = span_basis(primal.lineality);
  rays_ = reduce_rows(primal.rays, primal.lineality);
  equations_ = span_basis(dual.lineality);
  facets_ = reduce_rows(dual.rays, dual.lineality);
}

Cone Cone::from_rays(const Matrix& rays, const Matrix& lineality, std::size_t ambient) {
  Cone c;
  c.n_ = ambient;
  DDResult dual = double_description(rays, lineality, ambient);
  DDResult primal = double_description(dual.rays, dual.lineality, ambient);
  c.canonicalize_from_dd(primal, dual);
  return c;
}

Cone Cone::from_inequalities(const Matrix& inequalities, const Matrix& equations, std::size_t ambient) {
  Cone c;
  c.n_ = ambient;
  DDResult primal = double_description(inequalities, equations, ambient);
  DDResult dual = double_description(primal.rays, primal.lineality, ambient);
  c.canonicalize_from_dd(primal, dual);
  return c;
}

Cone Cone::full_space(std::size_t ambient) { return from_inequalities({}, {}, ambient); }

bool Cone::contains(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("cone membership: dimension mismatch");
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) < 0) return false;
  return true;
}

bool Cone::contains_relint(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("cone membership: dimension mismatch");
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) <= 0) return false;
  return true;
}

bool Cone::contains(const Cone& o) const {
  for (const auto& r : o.rays_)
    if (!contains(r)) return false;
  for (const auto& l : o.lineality_)
    if (!contains(l) || !contains(Rational(-1) * l)) return false;
  return true;
}

Vector Cone::relative_interior_point() const {
  Vector p(n_, Rational(0));
  for (const auto& r : rays_) p = p + r;
  for (const auto& l : lineality_) p = p + l;
  return p;
}

std::optional<Cone> Cone::face(const Vector& w) const {
  if (w.size() != n_) throw std::invalid_argument("face: dimension mismatch");
  for (const auto& l : lineality_)
    if (sgn(dot(w, l)) != 0) return std::nullopt;
  Matrix keep;
  for (const auto& r : rays_) {
    int s = sgn(dot(w, r));
    if (s > 0) return std::nullopt;
    if (s == 0) keep.push_back(r);
  }
  return from_rays(keep, lineality_, n_);
}

Cone Cone::face_from_facets(const std::vector<std::size_t>& ids) const {
  Matrix eq = equations_;
  for (auto i : ids) eq.push_back(facets_.at(i));
  return from_inequalities(facets_, eq, n_);
}

Cone Cone::face_containing(const Vector& p) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (sgn(dot(facets_[i], p)) == 0) ids.push_back(i);
  return face_from_facets(ids);
}

bool Cone::is_face(const Cone& f) const {
  if (f.n_ != n_ || !contains(f)) return false;
  return face_containing(f.relative_interior_point()) == f;
}

Cone Cone::intersect(const Cone& o) const {
  if (o.n_ != n_) throw std::invalid_argument("intersect: dimension mismatch");
  Matrix ineq = facets_, eq = equations_;
  ineq.insert(ineq.end(), o.facets_.begin(), o.facets_.end());
  eq.insert(eq.end(), o.equations_.begin(), o.equations_.end());
  return from_inequalities(ineq, eq, n_);
}

Cone Cone::project(const std::vector<std::size_t>& keep) const {
  auto proj = [&](const Matrix& rows) {
    Matrix out;
    for (const auto& r : rows) {
      Vector v;
      for (auto k : keep) v.push_back(r.at(k));
      out.push_back(v);
    }
    return out;
  };
  return from_rays(proj(rays_), proj(lineality_), keep.size());
}

bool Cone::operator==(const Cone& o) const {
  return n_ == o.n_ && rays_ == o.rays_ && lineality_ == o.lineality_;
}

std::string Cone::key() const {
  std::string k = "R";
  for (const auto& r : rays_) k += to_string(r);
  k += "L";
  for (const auto& l : lineality_) k += to_string(l);
  return k;
}

Polytope Polytope::from_vertices(const Matrix& points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  Polytope p;
  p.n_ = points[0].size();
  Matrix hom;
  for (const auto& v : points) {
    if (v.size() != p.n_) throw std::invalid_argument("polytope points differ in dimension");
    Vector h{Rational(1)};
    h.insert(h.end(), v.begin(), v.end());
    hom.push_back(h);
  }
  p.cone_ = Cone::from_rays(hom, {}, p.n_ + 1);
  for (const auto& r : p.cone_.rays()) p.vertices_.push_back(Vector((1 / r[0]) * Vector(r.begin() + 1, r.end())));
  p.vertices_ = sorted_unique(p.vertices_);
  return p;
}

Polytope Polytope::from_inequalities(const Matrix& inequalities, const Matrix& equations, std::size_t ambient) {
  Polytope p;
  p.n_ = ambient;
  Matrix ineq = inequalities;
  Vector e0(ambient + 1, Rational(0));
  e0[0] = 1;
  ineq.push_back(e0);
  p.cone_ = Cone::from_inequalities(ineq, equations, ambient + 1);
  if (p.cone_.lineality_dim() > 0) throw std::invalid_argument("polyhedron is unbounded");
  for (const auto& r : p.cone_.rays()) {
    if (sgn(r[0]) == 0) throw std::invalid_argument("polyhedron is unbounded");
    p.vertices_.push_back((1 / r[0]) * Vector(r.begin() + 1, r.end()));
  }
  p.vertices_ = sorted_unique(p.vertices_);
  return p;
}

bool Polytope::contains(const Vector& x) const {
  if (x.size() != n_) throw std::invalid_argument("polytope membership: dimension mismatch");
  if (vertices_.empty()) return false;
  Vector h{Rational(1)};
  h.insert(h.end(), x.begin(), x.end());
  return cone_.contains(h);
}

Polytope Polytope::face(const Vector& w) const {
  if (vertices_.empty()) return *this;
  Rational best = dot(w, vertices_[0]);
  for (const auto& v : vertices_) best = std::max(best, dot(w, v));
  Matrix keep;
  for (const auto& v : vertices_)
    if (dot(w, v) == best) keep.push_back(v);
  return from_vertices(keep);
}

Polytope Polytope::project(const std::vector<std::size_t>& keep) const {
  Matrix pts;
  for (const auto& v : vertices_) {
    Vector q;
    for (auto k : keep) q.push_back(v.at(k));
    pts.push_back(q);
  }
  return from_vertices(pts);
}

Polytope Polytope::dilate(const Rational& r) const {
  Matrix pts;
  for (const auto& v : vertices_) pts.push_back(r * v);
  return from_vertices(pts);
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (x.get_den() != 1) return false;
  return true;
}

std::vector<Vector> Polytope::lattice_points(const Lattice* lattice) const {
  std::vector<Vector> out;
  if (vertices_.empty()) return out;
  std::vector<Integer> lo(n_), hi(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational a = vertices_[0][i], b = vertices_[0][i];
    for (const auto& v : vertices_) {
      a = std::min(a, v[i]);
      b = std::max(b, v[i]);
    }
    mpz_cdiv_q(lo[i].get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(hi[i].get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (lo[i] > hi[i]) return out;
  }
  std::vector<Integer> cur = lo;
  while (true) {
    Vector x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = Rational(cur[i]);
    if (contains(x)) {
      if (!lattice || lattice->contains(cur)) out.push_back(x);
    }
    std::size_t i = n_;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
    if (n_ == 0) return out;
  }
}

LpResult Polytope::optimize(const Vector& w, bool maximize) const {
  Matrix A, E;
  Vector b, f;
  for (const auto& row : cone_.facets()) {
    A.push_back(Rational(-1) * Vector(row.begin() + 1, row.end()));
    b.push_back(row[0]);
  }
  for (const auto& row : cone_.equations()) {
    E.push_back(Vector(row.begin() + 1, row.end()));
    f.push_back(-row[0]);
  }
  return lp_optimize(w, A, b, E, f, maximize);
}

FanCheck verify_fan(const Fan& fan) {
  FanCheck out;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.cones[i].ambient() != fan.ambient) {
      out.ok = false;
      out.violations.push_back("cone " + std::to_string(i) + " has the wrong ambient dimension");
      continue;
    }
    for (const auto& l : fan.lineality)
      if (!fan.cones[i].contains(l) || !fan.cones[i].contains(Rational(-1) * l)) {
        out.ok = false;
        out.violations.push_back("cone " + std::to_string(i) + " misses the lineality space");
        break;
      }
  }
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      if (fan.cones[i].ambient() != fan.ambient || fan.cones[j].ambient() != fan.ambient) continue;
      Cone c = fan.cones[i].intersect(fan.cones[j]);
      if (!fan.cones[i].is_face(c) || !fan.cones[j].is_face(c)) {
        out.ok = false;
        out.violations.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) +
                                 " meet outside a common face");
      }
    }
  return out;
}

std::optional<Cone> common_face(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("common face: dimension mismatch");
  Cone c = a.intersect(b);
  if (a.is_face(c) && b.is_face(c)) return c;
  return std::nullopt;
}

bool are_adjacent(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("adjacency: dimension mismatch");
  if (a.dim() != b.dim() || a.dim() == 0) return false;
  auto c = common_face(a, b);
  return c && c->dim() + 1 == a.dim();
}

bool projection_meets_relint(const Cone& lifted, const std::vector<std::size_t>& keep, const Cone& target) {
  const std::size_t N = lifted.ambient();
  if (keep.size() != target.ambient()) throw std::invalid_argument("projection: dimension mismatch");
  auto pull = [&](const Vector& g) {
    Vector v(N, Rational(0));
    for (std::size_t i = 0; i < keep.size(); ++i) v.at(keep[i]) += g[i];
    return v;
  };
  Matrix A, E;
  Vector b, f;
  for (const auto& r : lifted.facets()) {
    A.push_back(Rational(-1) * r);
    b.push_back(0);
  }
  for (const auto& r : lifted.equations()) {
    E.push_back(r);
    f.push_back(0);
  }
  // Strict positivity on the target facets, scaled to >= 1 (cones are scale invariant).
  for (const auto& g : target.facets()) {
    A.push_back(Rational(-1) * pull(g));
    b.push_back(-1);
  }
  for (const auto& e : target.equations()) {
    E.push_back(pull(e));
    f.push_back(0);
  }
  return lp_feasible_point(N, A, b, E, f).has_value();
}

}  // namespace tropwall
