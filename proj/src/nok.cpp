#include "tropwall/nok.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tropwall/linalg.hpp"
#include "tropwall/tropical.hpp"

namespace tropwall {

namespace {

Ideal polynomial_copy(const Ideal& I) { return I.ring()->laurent ? clear_monomials(I) : I; }

Polynomial into(const Polynomial& f, const RingPtr& R) {
  if (*f.ring() == *R) return f;
  if (f.ring()->names != R->names) throw RingMismatch();
  Polynomial g(R);
  for (const auto& [m, c] : f.terms()) {
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative exponent in a polynomial-ring valuation");
    g.add_term(m, c);
  }
  return g;
}

// All monomials in n variables of total degree exactly r.
void monomials_of_degree(std::size_t n, int r, std::vector<Monomial>& out) {
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (n == 0) {
      if (left == 0) out.push_back(m);
      return;
    }
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      m[i] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, r);
}

GroebnerBasis valuation_gb(const WeightMatrix& M, const Ideal& J) {
  if (M.ambient() != J.ring()->arity()) throw std::invalid_argument("weight matrix and ring differ in size");
  return buchberger(J, valuation_order(M));
}

std::size_t rank_of(const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::size_t> col;
  for (const auto& f : polys)
    for (const auto& [m, c] : f.terms()) col.emplace(m, col.size());
  Matrix rows;
  for (const auto& f : polys) {
    Vector r(col.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) r[col.at(m)] = c;
    rows.push_back(std::move(r));
  }
  return rows.empty() ? 0 : rank(rows);
}

}  // namespace

WeightMatrix::WeightMatrix(Matrix r) : rows(std::move(r)) {
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) throw std::invalid_argument("ragged weight matrix");
  homogeneous = !rows.empty() && std::all_of(rows[0].begin(), rows[0].end(), [](const Rational& x) { return x == 1; });
}

Vector WeightMatrix::column(std::size_t j) const {
  Vector c;
  for (const auto& r : rows) c.push_back(r.at(j));
  return c;
}

Matrix WeightMatrix::columns() const {
  Matrix out;
  for (std::size_t j = 0; j < ambient(); ++j) out.push_back(column(j));
  return out;
}

Vector WeightMatrix::apply(const Monomial& m) const {
  Vector v(d(), Rational(0));
  for (std::size_t i = 0; i < d(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) v[i] += rows[i][j] * m[j];
  return v;
}

WeightMatrix WeightMatrix::drop_last() const {
  Matrix r = rows;
  if (!r.empty()) r.pop_back();
  return WeightMatrix(r);
}

int compare_values(const Vector& a, const Vector& b, bool first_reversed) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return (i == 0 && first_reversed) ? -c : c;
  }
  return 0;
}

MonomialOrder valuation_order(const WeightMatrix& M) {
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < M.d(); ++i) {
    const bool flip = !(i == 0 && M.homogeneous);
    rows.push_back(MonomialOrder::integer_row(flip ? Rational(-1) * M.rows[i] : M.rows[i]));
  }
  return MonomialOrder(MonomialOrder::Base::GrevLex, rows);
}

Vector weight_valuation(const WeightMatrix& M, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  std::optional<Vector> best;
  for (const auto& [m, c] : f.terms()) {
    Vector v = M.apply(m);
    if (!best || compare_values(v, *best, M.homogeneous) < 0) best = v;
  }
  return *best;
}

Vector weight_quasivaluation(const WeightMatrix& M, const Ideal& I, const Polynomial& f) {
  Ideal J = polynomial_copy(I);
  Polynomial nf = normal_form(into(f, J.ring()), valuation_gb(M, J));
  if (nf.is_zero()) throw std::domain_error("class of zero has no value");
  return weight_valuation(M, nf);
}

std::vector<Monomial> valuation_standard_monomials(const WeightMatrix& M, const Ideal& I, int bound) {
  Ideal J = polynomial_copy(I);
  auto lead = valuation_gb(M, J).leading_monomials();
  std::vector<Monomial> out;
  for (int r = 0; r <= bound; ++r) {
    std::vector<Monomial> all;
    monomials_of_degree(J.ring()->arity(), r, all);
    for (const auto& m : all)
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); })) out.push_back(m);
  }
  return out;
}

Matrix ValueSemigroup::elements() const {
  Matrix all;
  for (const auto& d : by_degree) all.insert(all.end(), d.begin(), d.end());
  return sorted_unique(all);
}

ValueSemigroup value_semigroup_elements(const WeightMatrix& M, const Ideal& I, int bound) {
  ValueSemigroup s;
  s.generators = M.columns();
  s.by_degree.assign(static_cast<std::size_t>(std::max(bound, 0) + 1), Matrix{});
  if (bound < 0) return s;
  for (const auto& m : valuation_standard_monomials(M, I, bound))
    s.by_degree[static_cast<std::size_t>(total_degree(m))].push_back(M.apply(m));
  for (auto& d : s.by_degree) d = sorted_unique(d);
  return s;
}

std::map<Vector, std::size_t> leaf_dimensions(const WeightMatrix& M, const Ideal& I, int bound) {
  // Standard monomials form an adapted basis, so the leaf over v has one
  // basis vector per standard monomial of value v.
  std::map<Vector, std::size_t> dims;
  for (const auto& m : valuation_standard_monomials(M, I, bound)) ++dims[M.apply(m)];
  return dims;
}

Cone no_cone(const WeightMatrix& M) { return Cone::from_rays(M.columns(), {}, M.d()); }

Polytope no_body(const WeightMatrix& M) {
  if (M.d() == 0) throw std::invalid_argument("empty weight matrix");
  Matrix pts;
  for (auto c : M.columns()) {
    if (sgn(c[0]) <= 0) throw std::invalid_argument("first row of the weight matrix must be positive");
    pts.push_back(Rational(1) / c[0] * c);
  }
  return Polytope::from_vertices(pts);
}

bool check_khovanskii(const std::vector<Polynomial>& B, const WeightMatrix& M, const Ideal& I, int bound) {
  Ideal J = polynomial_copy(I);
  GroebnerBasis gb = valuation_gb(M, J);
  std::vector<Polynomial> basis;
  std::vector<Vector> values;
  std::vector<int> degs;
  for (const auto& b : B) {
    Polynomial p = into(b, J.ring());
    Polynomial nf = normal_form(p, gb);
    if (nf.is_zero()) return false;
    if (p.degree() < 1) continue;  // constants add nothing
    basis.push_back(p);
    values.push_back(weight_valuation(M, nf));
    degs.push_back(p.degree());
  }
  // Products of B of degree <= bound and the sums of their values.
  std::set<Vector> sums;
  std::vector<Polynomial> products;
  std::function<void(std::size_t, int, const Polynomial&, const Vector&)> rec =
      [&](std::size_t i, int deg, const Polynomial& prod, const Vector& val) {
        if (i == basis.size()) {
          sums.insert(val);
          products.push_back(normal_form(prod, gb));
          return;
        }
        Polynomial p = prod;
        Vector v = val;
        for (int d = deg; d <= bound; d += degs[i]) {
          rec(i + 1, d, p, v);
          p = p * basis[i];
          v = v + values[i];
        }
      };
  rec(0, 0, Polynomial(J.ring(), Rational(1)), Vector(M.d(), Rational(0)));

  for (const auto& v : value_semigroup_elements(M, J, bound).elements())
    if (!sums.count(v)) return false;
  return rank_of(products) == valuation_standard_monomials(M, J, bound).size();
}

bool check_adapted_basis(const std::vector<Polynomial>& B, const WeightMatrix& M, const Ideal& I, int bound) {
  Ideal J = polynomial_copy(I);
  GroebnerBasis gb = valuation_gb(M, J);
  const bool graded = J.is_homogeneous();
  auto std_monos = valuation_standard_monomials(M, J, bound);
  std::vector<std::size_t> hilbert(static_cast<std::size_t>(bound + 1), 0), count(hilbert.size(), 0);
  for (const auto& m : std_monos) ++hilbert[static_cast<std::size_t>(total_degree(m))];

  std::vector<Polynomial> nfs;
  std::set<Vector> seen;
  for (const auto& b : B) {
    if (b.size() != 1) return false;
    Polynomial p = into(b, J.ring());
    int deg = p.degree();
    if (deg > bound) continue;
    ++count[static_cast<std::size_t>(deg)];
    Polynomial nf = normal_form(p, gb);
    if (nf.is_zero()) return false;
    if (!seen.insert(weight_valuation(M, nf)).second) return false;
    nfs.push_back(nf);
  }
  if (graded) {
    if (count != hilbert) return false;
  } else if (nfs.size() != std_monos.size()) {
    return false;
  }
  return rank_of(nfs) == nfs.size();
}

}  // namespace tropwall
