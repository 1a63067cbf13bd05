#pragma once

#include <string>
#include <vector>

#include "tropwall/lattice.hpp"
#include "tropwall/polyhedra.hpp"
#include "tropwall/polynomial.hpp"

namespace tropwall {

/// Matrix A with Q = conv(columns) and the column lattice ZA.
struct ToricData {
  IntMatrix A;
  Polytope Q;
  Lattice lattice;
};

ToricData toric_data(const IntMatrix& A);

/// Columns of a row-major matrix, as rational points.
Matrix columns(const IntMatrix& A);

/// Ring x1..xn.
RingPtr default_ring(std::size_t n);

/// Kernel of x^u -> t^{Au}: binomials of a kernel lattice basis, then
/// saturated by the product of the variables. `ring` defaults to x1..xn.
Ideal toric_ideal(const IntMatrix& A, RingPtr ring = nullptr);

/// Univariate polynomial in r with exact coefficients, constant term first.
struct EhrhartPolynomial {
  std::vector<Rational> coefficients;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational operator()(const Rational& r) const;
  /// degree! times the leading coefficient.
  Integer normalized_volume() const;
  std::string to_string(const std::string& var = "r") const;
};

/// Interpolates r -> |L cap rQ| at r = 0..dim Q. L is Z^n when no lattice is
/// given. Throws std::invalid_argument when some vertex lies outside L.
EhrhartPolynomial ehrhart_polynomial(const Polytope& Q, const Lattice* lattice = nullptr);

/// Every lattice point of kP is a sum of k lattice points of P, for k <= k_max.
bool is_normal(const Polytope& P, int k_max, const Lattice* lattice = nullptr);

struct HilbertEhrhart {
  bool equal = false;
  bool normal = false;  // bounded normality check with k_max = degree_bound
  std::vector<Integer> hilbert;
  std::vector<Integer> ehrhart;
};

/// Compares dim_r of R/I_A (standard monomials) with E_Q(r) for r <= bound.
/// Requires the all-ones vector in the row space of A.
HilbertEhrhart hilbert_equals_ehrhart(const IntMatrix& A, int degree_bound);

/// Equality of ideals after some substitution x_i -> +-x_i.
bool ideals_equal_up_to_signs(const Ideal& a, const Ideal& b);

}  // namespace tropwall
