#pragma once

#include <optional>

#include "tropwall/rational.hpp"

namespace tropwall {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  Vector point;
};

/// Exact two-phase simplex with Bland's rule over free variables.
/// Maximizes (or minimizes) c.x subject to A x <= b and E x = f.
LpResult lp_optimize(const Vector& c, const Matrix& A, const Vector& b, const Matrix& E = {},
                     const Vector& f = {}, bool maximize = true);

/// Some point with A x <= b and E x = f, if any.
std::optional<Vector> lp_feasible_point(std::size_t n, const Matrix& A, const Vector& b,
                                        const Matrix& E = {}, const Vector& f = {});

}  // namespace tropwall
