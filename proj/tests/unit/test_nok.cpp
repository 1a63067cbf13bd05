#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tropwall/grassmann.hpp"
#include "tropwall/linalg.hpp"
#include "tropwall/nok.hpp"
#include "tropwall/tropical.hpp"

using namespace tropwall;

namespace {

struct Quadric {
  RingPtr R = make_ring({"x", "y", "z"});
  Ideal I{R, {parse_polynomial("x^2 + x*y + x*z + z^2", R)}};
  WeightMatrix M{Matrix{{1, 1, 1}, {2, 0, 1}}};
};

Polynomial random_poly(std::mt19937& rng, const RingPtr& R, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg), nterms(1, 4);
  std::uniform_int_distribution<std::size_t> var(0, R->arity() - 1);
  Polynomial f(R);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(R->arity(), 0);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++m[var(rng)];
    f.add_term(m, coef(rng));
  }
  return f;
}

// Brute-force value oracle: the best minimum over many representatives
// f + h g of the class, with h ranging over small multipliers.
Vector best_over_representatives(const WeightMatrix& M, const Polynomial& f, const Polynomial& g,
                                 const std::vector<Polynomial>& multipliers) {
  Vector best = weight_valuation(M, f);
  for (const auto& h : multipliers) {
    Polynomial r = f + h * g;
    if (r.is_zero()) continue;
    Vector v = weight_valuation(M, r);
    if (compare_values(v, best, M.homogeneous) > 0) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("value order") {
  CHECK(compare_values(Vector{2, 0}, Vector{1, 5}, true) < 0);
  CHECK(compare_values(Vector{2, 0}, Vector{1, 5}, false) > 0);
  CHECK(compare_values(Vector{1, 1}, Vector{1, 2}, true) < 0);
  CHECK(compare_values(Vector{1, 1}, Vector{1, 1}, true) == 0);
}

TEST_CASE("quadric example values") {
  Quadric q;
  CHECK(q.M.homogeneous);
  CHECK(weight_quasivaluation(q.M, q.I, parse_polynomial("x", q.R)) == Vector{1, 2});
  CHECK(weight_quasivaluation(q.M, q.I, parse_polynomial("y", q.R)) == Vector{1, 0});
  CHECK(weight_quasivaluation(q.M, q.I, parse_polynomial("z", q.R)) == Vector{1, 1});
  CHECK(weight_quasivaluation(q.M, q.I, parse_polynomial("7", q.R)) == Vector{0, 0});
  CHECK(weight_quasivaluation(q.M, q.I, parse_polynomial("x*y", q.R)) == Vector{2, 2});
  // Unreduced polynomial: the smallest value among its terms.
  CHECK(weight_valuation(q.M, parse_polynomial("x*y + x*z", q.R)) == Vector{2, 2});
  CHECK_THROWS_AS(weight_quasivaluation(q.M, q.I, q.I.generators()[0]), std::domain_error);

  auto s1 = value_semigroup_elements(q.M, q.I, 1);
  CHECK(s1.by_degree[0] == Matrix{{0, 0}});
  CHECK(s1.by_degree[1] == Matrix{{1, 0}, {1, 1}, {1, 2}});
  auto s2 = value_semigroup_elements(q.M, q.I, 2);
  CHECK(s2.by_degree[2] == Matrix{{2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});
  CHECK(value_semigroup_elements(q.M, q.I, 0).elements() == Matrix{{0, 0}});

  Polytope body = no_body(q.M);
  CHECK(body.vertices() == Matrix{{1, 0}, {1, 2}});
  Cone cone = no_cone(q.M);
  CHECK(cone.rays() == Matrix{{1, 0}, {1, 2}});
  CHECK(no_body(WeightMatrix(Matrix{{1, 1}, {3, 3}})).vertices() == Matrix{{1, 3}});
}

TEST_CASE("quotient value is the best over representatives") {
  Quadric q;
  std::mt19937 rng(3);
  std::vector<Polynomial> mult;
  for (const char* h : {"1", "-1", "x", "y", "z", "-x", "-y", "-z", "x+y", "y-z", "2*z"}) mult.push_back(parse_polynomial(h, q.R));
  const Polynomial& g = q.I.generators()[0];
  for (int t = 0; t < 60; ++t) {
    Polynomial f = random_poly(rng, q.R, 3);
    if (contains(q.I, f)) continue;
    Vector v = weight_quasivaluation(q.M, q.I, f);
    // No representative beats the normal form.
    CHECK(compare_values(best_over_representatives(q.M, f, g, mult), v, true) <= 0);
  }
}

TEST_CASE("valuation axioms on the prime quadric cone") {
  Quadric q;
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 100) {
    Polynomial f = random_poly(rng, q.R, 3), g = random_poly(rng, q.R, 3);
    if (contains(q.I, f) || contains(q.I, g)) continue;
    Vector vf = weight_quasivaluation(q.M, q.I, f), vg = weight_quasivaluation(q.M, q.I, g);
    CHECK(weight_quasivaluation(q.M, q.I, f * g) == vf + vg);
    if (!contains(q.I, f + g)) {
      Vector vs = weight_quasivaluation(q.M, q.I, f + g);
      Vector lo = compare_values(vf, vg, true) <= 0 ? vf : vg;
      CHECK(compare_values(vs, lo, true) >= 0);
    }
    ++checked;
  }
}

TEST_CASE("strict quasi-valuation witness on a non-prime cone") {
  RingPtr R = make_ring({"x", "y"}, true);
  Ideal I(R, {parse_polynomial("x + x*y + y", R)});
  // The cone spanned by (-1, 0) has the non-prime initial ideal <x + x y>.
  WeightMatrix M(Matrix{{-1, 0}});
  CHECK_FALSE(M.homogeneous);
  RingPtr P = with_laurent(R, false);
  CHECK(is_prime_binomial(Ideal(P, {parse_polynomial("x + x*y", P)})) == Primality::NotPrime);
  std::vector<Polynomial> small;
  for (const char* s : {"x", "y", "1+y", "1+x", "x+y", "x-1", "y-1", "x*y", "1+x+y"}) small.push_back(parse_polynomial(s, P));
  bool found = false;
  for (const auto& f : small)
    for (const auto& g : small) {
      Vector v = weight_quasivaluation(M, I, f * g);
      Vector s = weight_quasivaluation(M, I, f) + weight_quasivaluation(M, I, g);
      CHECK(compare_values(v, s, false) >= 0);  // quasi-valuation inequality
      if (compare_values(v, s, false) > 0) found = true;
    }
  CHECK(found);
  CHECK(weight_quasivaluation(M, I, parse_polynomial("x + x*y", P)) == Vector{0});
}

TEST_CASE("homogeneous values reverse the degree") {
  Quadric q;
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    Polynomial f = random_poly(rng, q.R, 2), g = random_poly(rng, q.R, 4);
    if (contains(q.I, f) || contains(q.I, g)) continue;
    Polynomial nf = normal_form(f, buchberger(q.I, valuation_order(q.M)));
    Polynomial ng = normal_form(g, buchberger(q.I, valuation_order(q.M)));
    Vector vf = weight_quasivaluation(q.M, q.I, f), vg = weight_quasivaluation(q.M, q.I, g);
    CHECK(vf[0] == nf.degree());
    if (nf.degree() < ng.degree()) CHECK(compare_values(vf, vg, true) > 0);
  }
}

TEST_CASE("khovanskii and adapted basis checks") {
  Quadric q;
  std::vector<Polynomial> xyz{parse_polynomial("x", q.R), parse_polynomial("y", q.R), parse_polynomial("z", q.R)};
  CHECK(check_khovanskii(xyz, q.M, q.I, 3));
  CHECK_FALSE(check_khovanskii({parse_polynomial("x", q.R)}, q.M, q.I, 3));

  std::vector<Polynomial> std_basis;
  for (const auto& m : valuation_standard_monomials(q.M, q.I, 2)) std_basis.push_back(Polynomial::monomial(q.R, m));
  CHECK(std_basis.size() == 9);  // 1 + 3 + 5
  CHECK(check_adapted_basis(std_basis, q.M, q.I, 2));
  // x*y has the value (2,2) of z^2, so it cannot replace y^2.
  std::vector<Polynomial> bad = std_basis;
  for (auto& b : bad)
    if (b == parse_polynomial("y^2", q.R)) b = parse_polynomial("x*y", q.R);
  CHECK_FALSE(check_adapted_basis(bad, q.M, q.I, 2));
  for (const auto& [v, dim] : leaf_dimensions(q.M, q.I, 3)) CHECK(dim == 1);
}

TEST_CASE("Grassmannian prime cone") {
  Ideal I = plucker_ideal(2, 4);
  TropicalVariety t = tropicalize(I);
  auto maxc = t.maximal_cones();
  REQUIRE(maxc.size() == 3);
  const GroebnerCone* c = maxc[0];
  REQUIRE(c->prime == Primality::Prime);
  // All-ones row, then the lineality and an interior point.
  Matrix rows{Vector(6, Rational(1))};
  for (const auto& l : c->cone.lineality())
    if (rank(Matrix{rows.begin(), rows.end()}) < rank([&] { Matrix m = rows; m.push_back(l); return m; }()))
      rows.push_back(l);
  rows.push_back(c->cone.relative_interior_point());
  WeightMatrix M(rows);
  REQUIRE(M.d() == 5);
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < 6; ++i) vars.push_back(Polynomial::variable(I.ring(), i));
  CHECK(check_khovanskii(vars, M, I, 2));
  for (const auto& [v, dim] : leaf_dimensions(M, I, 3)) CHECK(dim == 1);

  Polytope body = no_body(M);
  CHECK(body.vertices().size() <= 6);
  CHECK(body.dim() == 4);
  std::vector<std::size_t> keep{0, 1, 2, 3};
  CHECK(body.project(keep) == no_body(M.drop_last()));
  CHECK(no_body(M.drop_last()) == Polytope::from_vertices(M.drop_last().columns()));
}
