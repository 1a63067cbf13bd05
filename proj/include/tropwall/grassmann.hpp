#pragma once

#include <vector>

#include "tropwall/polynomial.hpp"
#include "tropwall/rational.hpp"

namespace tropwall {

/// Sorted k-subsets of {1..n} (1-based) in lex order.
std::vector<std::vector<int>> subsets(int n, int k);

/// Ring of Plücker variables p_I named by concatenated digits ("p126").
/// Names are unambiguous only for n <= 9.
RingPtr plucker_ring(int k, int n);

/// Exchange relations p_I p_J - sum_j p_{I(i->j)} p_{J(j->i)} over all ordered
/// pairs I != J and every exchanged index i of I, the last index first; zero
/// relations and scalar duplicates removed. For k = 2 the choice of i does not
/// matter; for k >= 3 the last index alone misses some quadrics.
Ideal plucker_ideal(int k, int n);

/// Maximal minors of a full-rank k x n matrix in lex subset order.
Vector plucker_coords(const Matrix& M);

Rational determinant(Matrix m);

}  // namespace tropwall
