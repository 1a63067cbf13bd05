#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropwall/lattice.hpp"
#include "tropwall/lp.hpp"
#include "tropwall/rational.hpp"

namespace tropwall {

/// Result of a double description conversion.
struct DDResult {
  Matrix rays;       // extreme rays modulo the lineality
  Matrix lineality;  // basis
};

/// Rays and lineality of {x : A x >= 0, E x = 0} in R^n.
DDResult double_description(const Matrix& inequalities, const Matrix& equations, std::size_t n);

/// Rational polyhedral cone. Both representations are computed on
/// construction and kept in canonical form:
///  - lineality: reduced echelon basis scaled to primitive integer rows;
///  - rays: reduced modulo the lineality, primitive, sorted;
///  - equations: same canonical basis for the orthogonal complement of the span;
///  - facets: primitive inner normals reduced modulo the equations, sorted.
class Cone {
 public:
  static Cone from_rays(const Matrix& rays, const Matrix& lineality, std::size_t ambient);
  static Cone from_inequalities(const Matrix& inequalities, const Matrix& equations, std::size_t ambient);
  static Cone full_space(std::size_t ambient);

  std::size_t ambient() const { return n_; }
  const Matrix& rays() const { return rays_; }
  const Matrix& lineality() const { return lineality_; }
  const Matrix& facets() const { return facets_; }
  const Matrix& equations() const { return equations_; }
  std::size_t dim() const { return n_ - equations_.size(); }
  std::size_t lineality_dim() const { return lineality_.size(); }

  bool contains(const Vector& v) const;
  /// Strictly inside every facet inequality and on the span.
  bool contains_relint(const Vector& v) const;
  bool contains(const Cone& other) const;
  /// Sum of rays plus sum of lineality basis vectors.
  Vector relative_interior_point() const;

  /// Face maximizing w; empty optional when w is unbounded above on the cone.
  std::optional<Cone> face(const Vector& w) const;
  /// Smallest face containing the point.
  Cone face_containing(const Vector& p) const;
  /// Face cut out by the given facets (indices into facets()).
  Cone face_from_facets(const std::vector<std::size_t>& facet_ids) const;
  bool is_face(const Cone& f) const;
  Cone intersect(const Cone& o) const;
  Cone project(const std::vector<std::size_t>& keep) const;

  bool operator==(const Cone& o) const;
  bool operator!=(const Cone& o) const { return !(*this == o); }
  /// Stable text key of the canonical V-representation.
  std::string key() const;

 private:
  void canonicalize_from_dd(const DDResult& primal, const DDResult& dual);
  std::size_t n_ = 0;
  Matrix rays_, lineality_, facets_, equations_;
};

/// Convex hull of finitely many rational points, stored through the
/// homogenized cone over {1} x P.
class Polytope {
 public:
  static Polytope from_vertices(const Matrix& points);
  /// Rows (b, a) meaning b + a.x >= 0, respectively = 0.
  static Polytope from_inequalities(const Matrix& inequalities, const Matrix& equations, std::size_t ambient);

  std::size_t ambient() const { return n_; }
  bool empty() const { return vertices_.empty(); }
  const Matrix& vertices() const { return vertices_; }
  /// Rows (b, a) as above, canonical.
  const Matrix& facets() const { return cone_.facets(); }
  const Matrix& equations() const { return cone_.equations(); }
  int dim() const { return static_cast<int>(cone_.dim()) - 1; }

  bool contains(const Vector& x) const;
  Polytope face(const Vector& w) const;
  Polytope project(const std::vector<std::size_t>& keep) const;
  Polytope dilate(const Rational& r) const;
  bool is_lattice() const;

  /// Integer points, optionally restricted to a sublattice.
  std::vector<Vector> lattice_points(const Lattice* lattice = nullptr) const;

  /// Optimum of w.x over P.
  LpResult optimize(const Vector& w, bool maximize = true) const;

  bool operator==(const Polytope& o) const { return n_ == o.n_ && vertices_ == o.vertices_; }

 private:
  std::size_t n_ = 0;
  Cone cone_;
  Matrix vertices_;
};

/// Finite collection of cones (maximal cones; faces implied) sharing a lineality.
struct Fan {
  std::size_t ambient = 0;
  Matrix lineality;
  std::vector<Cone> cones;
};

struct FanCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

FanCheck verify_fan(const Fan& fan);

bool are_adjacent(const Cone& a, const Cone& b);
/// Intersection when it is a face of both cones.
std::optional<Cone> common_face(const Cone& a, const Cone& b);

/// True iff the image of `lifted` under the coordinate projection meets the
/// relative interior of `target`. Decided by one exact LP.
bool projection_meets_relint(const Cone& lifted, const std::vector<std::size_t>& keep, const Cone& target);

/// Sorted unique rows.
Matrix sorted_unique(Matrix rows);

}  // namespace tropwall
