#pragma once

#include <optional>
#include <vector>

#include "tropwall/rational.hpp"

namespace tropwall {

/// Reduced row echelon form in place. Returns pivot column indices.
/// Zero rows are dropped.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column. `cols` is required
/// when m has no rows.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Some x with m x = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool in_span(const Matrix& basis, const Vector& v);

Matrix transpose(const Matrix& m, std::size_t cols = 0);

/// Reduced echelon basis of the span, rows scaled to primitive integers.
Matrix span_basis(Matrix rows);

/// Subtracts the multiples of the RREF rows of `basis` that clear v's
/// entries in the basis pivot columns. Gives a canonical representative
/// of v modulo span(basis).
Vector reduce_modulo(const Matrix& basis_rref, const std::vector<std::size_t>& pivots,
                     const Vector& v);

}  // namespace tropwall
