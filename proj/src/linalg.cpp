#include "tropwall/linalg.hpp"

#include <stdexcept>

namespace tropwall {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  auto piv = rref(a);
  std::vector<int> is_pivot(cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) is_pivot[piv[i]] = static_cast<int>(i);
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f] >= 0) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(v);
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (m.empty()) return Vector{};
  const std::size_t cols = m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

bool in_span(const Matrix& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v);
  return solve(transpose(basis, v.size()), v).has_value();
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  if (!m.empty()) cols = m[0].size();
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Matrix span_basis(Matrix rows) {
  rref(rows);
  for (auto& r : rows) r = primitive(r);
  return rows;
}

Vector reduce_modulo(const Matrix& basis_rref, const std::vector<std::size_t>& pivots,
                     const Vector& v) {
  Vector r = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational f = r[pivots[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * basis_rref[i][j];
  }
  return r;
}

}  // namespace tropwall
