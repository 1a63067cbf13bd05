#include "tropwall/lattice.hpp"

#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

namespace {

bool row_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Integer row echelon form by extended gcd row operations. `companion`
// receives the same operations, so with companion = I it records the
// unimodular transform.
void echelon(IntMatrix& m, IntMatrix* companion) {
  if (m.empty()) return;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Integer a = m[r][c], b = m[i][c];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      auto combine = [&](IntVector& x, IntVector& y) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          Integer xr = s * x[j] + t * y[j];
          Integer yr = -bg * x[j] + ag * y[j];
          x[j] = xr;
          y[j] = yr;
        }
      };
      combine(m[r], m[i]);
      if (companion) combine((*companion)[r], (*companion)[i]);
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (auto& x : m[r]) x = -x;
      if (companion)
        for (auto& x : (*companion)[r]) x = -x;
    }
    ++r;
  }
}

}  // namespace

IntVector to_int_vector(const Vector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::domain_error("vector is not integral: " + to_string(v));
    r[i] = v[i].get_num();
  }
  return r;
}

Vector to_vector(const IntVector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  echelon(rows, nullptr);
  IntMatrix out;
  for (auto& r : rows)
    if (!row_zero(r)) out.push_back(r);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t p = 0;
    while (out[i][p] == 0) ++p;
    for (std::size_t k = 0; k < i; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out[k][p].get_mpz_t(), out[i][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < out[k].size(); ++j) out[k][j] -= q * out[i][j];
    }
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t n) {
  // Row-reduce A^T while tracking the unimodular transform; transform rows
  // belonging to zero rows of the reduced A^T span the kernel.
  IntMatrix at(n, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) at[j][i] = a[i][j];
  IntMatrix u(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (!a.empty()) echelon(at, &u);
  IntMatrix ker;
  for (std::size_t i = 0; i < n; ++i)
    if (a.empty() || row_zero(at[i])) ker.push_back(u[i]);
  return hermite_normal_form(ker);
}

IntMatrix saturation(const IntMatrix& rows, std::size_t n) {
  Matrix q;
  for (const auto& r : rows) q.push_back(to_vector(r));
  Matrix perp = nullspace(q, n);
  IntMatrix perp_int;
  for (auto& v : perp) perp_int.push_back(to_int_vector(primitive(v)));
  return integer_kernel(perp_int, n);
}

bool is_saturated(const IntMatrix& rows, std::size_t n) {
  return hermite_normal_form(rows) == hermite_normal_form(saturation(rows, n));
}

Lattice::Lattice(const IntMatrix& generators, std::size_t n)
    : n_(n), basis_(hermite_normal_form(generators)) {}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("lattice membership: dimension mismatch");
  IntVector r = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    for (std::size_t j = 0; j < p; ++j)
      if (r[j] != 0) return false;
    if (r[p] % b[p] != 0) return false;
    Integer q = r[p] / b[p];
    for (std::size_t j = 0; j < n_; ++j) r[j] -= q * b[j];
  }
  return row_zero(r);
}

}  // namespace tropwall
