#include "tropwall/lp.hpp"

#include <stdexcept>

namespace tropwall {

namespace {

struct Tableau {
  // rows_[0..m-1] constraints, last entry of each row is the right-hand side;
  // obj is the reduced-cost row with the negated objective value at the end.
  Matrix rows;
  Vector obj;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of variables

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    auto eliminate = [&](Vector& row) {
      if (sgn(row[c]) == 0) return;
      Rational f = row[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(rows[r][j]) != 0) row[j] -= f * rows[r][j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(obj);
    basis[r] = c;
  }

  // Minimizes over columns < allowed. Returns false when unbounded.
  bool run(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (sgn(obj[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_optimize(const Vector& c, const Matrix& A, const Vector& b, const Matrix& E, const Vector& f,
                     bool maximize) {
  const std::size_t n = c.size();
  if (A.size() != b.size() || E.size() != f.size()) throw std::invalid_argument("lp: dimension mismatch");
  for (const auto& r : A)
    if (r.size() != n) throw std::invalid_argument("lp: dimension mismatch");
  for (const auto& r : E)
    if (r.size() != n) throw std::invalid_argument("lp: dimension mismatch");

  const std::size_t mi = A.size(), m = A.size() + E.size();
  // Columns: u (n), v (n), slacks (mi), artificials (m).
  const std::size_t art0 = 2 * n + mi, cols = art0 + m;
  Tableau t;
  t.cols = cols;
  t.rows.assign(m, Vector(cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& a = i < mi ? A[i] : E[i - mi];
    Rational rhs = i < mi ? b[i] : f[i - mi];
    Vector& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (i < mi) row[2 * n + i] = 1;
    row[cols] = rhs;
    if (sgn(rhs) < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }
  // Phase one: minimize the sum of artificials.
  t.obj.assign(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < art0 || j == cols) t.obj[j] -= t.rows[i][j];
  t.run(art0);
  LpResult res;
  if (sgn(t.obj[cols]) != 0) return res;  // positive infeasibility remains

  // Drive remaining artificials out of the basis or drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t c2 = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (sgn(t.rows[i][j]) != 0) {
        c2 = j;
        break;
      }
    if (c2 < art0) {
      t.pivot(i, c2);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase two.
  Vector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = maximize ? Rational(-c[j]) : c[j];
    cost[n + j] = -cost[j];
  }
  t.obj.assign(cols + 1, Rational(0));
  for (std::size_t j = 0; j < cols; ++j) t.obj[j] = cost[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Rational cb = cost[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j <= cols; ++j) t.obj[j] -= cb * t.rows[i][j];
  }
  if (!t.run(art0)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  Vector z(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) z[t.basis[i]] = t.rows[i][cols];
  res.status = LpResult::Status::Optimal;
  res.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) res.point[j] = z[j] - z[n + j];
  res.value = dot(c, res.point);
  return res;
}

std::optional<Vector> lp_feasible_point(std::size_t n, const Matrix& A, const Vector& b, const Matrix& E,
                                        const Vector& f) {
  auto r = lp_optimize(Vector(n, Rational(0)), A, b, E, f, true);
  if (r.status == LpResult::Status::Optimal) return r.point;
  return std::nullopt;
}

}  // namespace tropwall
