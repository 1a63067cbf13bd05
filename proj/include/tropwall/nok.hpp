#pragma once

#include <map>
#include <vector>

#include "tropwall/groebner.hpp"
#include "tropwall/polyhedra.hpp"

namespace tropwall {

/// Rows u_1..u_d of a weight matrix. When u_1 is all-ones the homogeneous
/// convention applies: values are compared lexicographically with the first
/// coordinate reversed, so higher degree means smaller value.
struct WeightMatrix {
  Matrix rows;
  bool homogeneous = false;

  WeightMatrix() = default;
  explicit WeightMatrix(Matrix rows);

  std::size_t d() const { return rows.size(); }
  std::size_t ambient() const { return rows.empty() ? 0 : rows[0].size(); }
  Vector column(std::size_t j) const;
  Matrix columns() const;
  Vector apply(const Monomial& m) const;
  /// Same rows with the last one dropped.
  WeightMatrix drop_last() const;
};

/// Negative when a is smaller than b in the value order.
int compare_values(const Vector& a, const Vector& b, bool first_reversed);

/// Internal order whose leading term is the term of minimal value.
MonomialOrder valuation_order(const WeightMatrix& M);

/// min { M alpha : c_alpha != 0 } in the value order; throws on zero.
Vector weight_valuation(const WeightMatrix& M, const Polynomial& f);

/// Value of the class of f in R/I: the weight valuation of the normal form
/// modulo a Gröbner basis for valuation_order(M). Laurent ideals are replaced
/// by their polynomial-ring copy. Throws std::domain_error when f is in I.
Vector weight_quasivaluation(const WeightMatrix& M, const Ideal& I, const Polynomial& f);

struct ValueSemigroup {
  Matrix generators;              // columns of M
  std::vector<Matrix> by_degree;  // values of classes of degree exactly r
  Matrix elements() const;        // union, sorted
};

/// Values of all classes of degree at most `bound`, read off from the
/// standard monomials of the M-refined order.
ValueSemigroup value_semigroup_elements(const WeightMatrix& M, const Ideal& I, int bound);

/// Dimension of every leaf F_{>=v} / F_{>v} with degree at most `bound`.
std::map<Vector, std::size_t> leaf_dimensions(const WeightMatrix& M, const Ideal& I, int bound);

Cone no_cone(const WeightMatrix& M);
/// Columns rescaled into {x_1 = 1} and their convex hull. Needs a positive
/// first row.
Polytope no_body(const WeightMatrix& M);

/// Bounded check: values of degree <= bound are sums of values of B, and
/// products of B of degree <= bound span R/I up to that degree.
bool check_khovanskii(const std::vector<Polynomial>& B, const WeightMatrix& M, const Ideal& I, int bound);

/// Bounded check for a set of monomials: per degree the count matches the
/// Hilbert function, the values are pairwise distinct and the classes are
/// independent.
bool check_adapted_basis(const std::vector<Polynomial>& B, const WeightMatrix& M, const Ideal& I, int bound);

/// Standard monomials of I for valuation_order(M) up to the degree bound.
std::vector<Monomial> valuation_standard_monomials(const WeightMatrix& M, const Ideal& I, int bound);

}  // namespace tropwall
