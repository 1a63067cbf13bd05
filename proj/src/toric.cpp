#include "tropwall/toric.hpp"

#include <set>
#include <stdexcept>

#include "tropwall/groebner.hpp"
#include "tropwall/linalg.hpp"

namespace tropwall {

Matrix columns(const IntMatrix& A) {
  if (A.empty()) throw std::invalid_argument("empty matrix");
  const std::size_t n = A[0].size();
  Matrix cols(n, Vector(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != n) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = Rational(A[i][j]);
  }
  return cols;
}

ToricData toric_data(const IntMatrix& A) {
  Matrix cols = columns(A);
  IntMatrix gens;
  for (const auto& c : cols) gens.push_back(to_int_vector(c));
  return ToricData{A, Polytope::from_vertices(cols), Lattice(gens, A.size())};
}

RingPtr default_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(names);
}

Ideal toric_ideal(const IntMatrix& A, RingPtr ring) {
  Matrix cols = columns(A);
  const std::size_t n = cols.size();
  for (const auto& c : cols)
    if (is_zero(c)) throw std::invalid_argument("toric ideal: zero column");
  if (!ring) ring = default_ring(n);
  if (ring->arity() != n) throw std::invalid_argument("toric ideal: ring arity differs from column count");
  std::vector<Polynomial> gens;
  for (const auto& u : integer_kernel(A, n)) {
    Monomial plus(n, 0), minus(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int e = static_cast<int>(to_int64(u[i]));
      (e > 0 ? plus[i] : minus[i]) = e > 0 ? e : -e;
    }
    gens.push_back(Polynomial::monomial(ring, plus) - Polynomial::monomial(ring, minus));
  }
  Ideal lattice_ideal(ring, gens);
  if (lattice_ideal.is_zero()) return lattice_ideal;
  Ideal sat = saturate_by_variables(lattice_ideal);
  // Report the reduced grevlex basis so the output is canonical.
  return Ideal(ring, buchberger(sat, OrderDescriptor::grevlex()).elements);
}

Rational EhrhartPolynomial::operator()(const Rational& r) const {
  Rational v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * r + *it;
  return v;
}

Integer EhrhartPolynomial::normalized_volume() const {
  Rational v = coefficients.back();
  for (int k = 2; k <= degree(); ++k) v *= k;
  if (v.get_den() != 1) throw std::logic_error("normalized volume is not integral");
  return v.get_num();
}

std::string EhrhartPolynomial::to_string(const std::string& var) const {
  RingPtr ring = make_ring({var});
  Polynomial p(ring);
  for (std::size_t k = 0; k < coefficients.size(); ++k) p.add_term(Monomial{static_cast<int>(k)}, coefficients[k]);
  return p.to_string();
}

EhrhartPolynomial ehrhart_polynomial(const Polytope& Q, const Lattice* lattice) {
  if (Q.empty()) throw std::invalid_argument("ehrhart: empty polytope");
  for (const auto& v : Q.vertices()) {
    bool ok = true;
    for (const auto& x : v)
      if (x.get_den() != 1) ok = false;
    if (ok && lattice) ok = lattice->contains(to_int_vector(v));
    if (!ok) throw std::invalid_argument("ehrhart: vertex " + to_string(v) + " is not a lattice point");
  }
  const int q = Q.dim();
  Matrix vander;
  Vector counts;
  for (int r = 0; r <= q; ++r) {
    Vector row;
    Rational p = 1;
    for (int k = 0; k <= q; ++k) {
      row.push_back(p);
      p *= r;
    }
    vander.push_back(row);
    counts.push_back(Rational(static_cast<long>(Q.dilate(r).lattice_points(lattice).size())));
  }
  auto sol = solve(vander, counts);
  if (!sol) throw std::logic_error("ehrhart: interpolation failed");
  return EhrhartPolynomial{*sol};
}

bool is_normal(const Polytope& P, int k_max, const Lattice* lattice) {
  std::vector<Vector> base = P.lattice_points(lattice);
  std::set<Vector> sums(base.begin(), base.end());
  for (int k = 2; k <= k_max; ++k) {
    std::set<Vector> next;
    for (const auto& s : sums)
      for (const auto& b : base) next.insert(s + b);
    for (const auto& p : P.dilate(k).lattice_points(lattice))
      if (!next.count(p)) return false;
    sums = std::move(next);
  }
  return true;
}

HilbertEhrhart hilbert_equals_ehrhart(const IntMatrix& A, int degree_bound) {
  ToricData data = toric_data(A);
  Matrix rows;
  for (const auto& r : A) rows.push_back(to_vector(r));
  const std::size_t n = data.A[0].size();
  if (!in_span(rows, Vector(n, Rational(1))))
    throw std::invalid_argument("hilbert/ehrhart: the all-ones vector is not in the row space, I_A is not homogeneous");

  HilbertEhrhart out;
  out.normal = is_normal(data.Q, degree_bound, &data.lattice);
  Ideal I = toric_ideal(A);
  out.hilbert.assign(static_cast<std::size_t>(degree_bound) + 1, Integer(0));
  for (const auto& m : standard_monomials(I, OrderDescriptor::grevlex(), degree_bound))
    ++out.hilbert[static_cast<std::size_t>(total_degree(m))];
  EhrhartPolynomial e = ehrhart_polynomial(data.Q, &data.lattice);
  for (int r = 0; r <= degree_bound; ++r) {
    Rational v = e(r);
    out.ehrhart.push_back(v.get_num());
  }
  out.equal = out.hilbert == out.ehrhart;
  return out;
}

bool ideals_equal_up_to_signs(const Ideal& a, const Ideal& b) {
  if (a.ring()->arity() != b.ring()->arity()) return false;
  const std::size_t n = a.ring()->arity();
  if (n > 20) throw std::invalid_argument("sign search: too many variables");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) {
      Polynomial h(b.ring());
      for (const auto& [m, c] : g.terms()) {
        int odd = 0;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1ul) odd += m[i];
        h.add_term(m, odd % 2 ? Rational(-c) : c);
      }
      gens.push_back(h);
    }
    if (ideals_equal(Ideal(b.ring(), gens), b)) return true;
  }
  return false;
}

}  // namespace tropwall
