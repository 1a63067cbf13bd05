#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "tropwall/grassmann.hpp"
#include "tropwall/linalg.hpp"
#include "tropwall/tropical.hpp"

using namespace tropwall;

namespace {

Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Matrix M(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (auto r : rows) m.push_back(V(r));
  return m;
}

Ideal principal(const RingPtr& R, const std::string& f) { return Ideal(R, {parse_polynomial(f, R)}); }

// Random strictly interior point: positive combination of all rays plus a
// random lineality component.
Vector random_interior(std::mt19937& rng, const Cone& c) {
  std::uniform_int_distribution<int> pos(1, 7), any(-5, 5);
  Vector p(c.ambient(), Rational(0));
  for (const auto& r : c.rays()) p = p + Rational(pos(rng)) * r;
  for (const auto& l : c.lineality()) p = p + Rational(any(rng)) * l;
  return p;
}

std::set<Matrix> ray_sets(const std::vector<Cone>& cones) {
  std::set<Matrix> out;
  for (const auto& c : cones) out.insert(c.rays());
  return out;
}

}  // namespace

TEST_CASE("Gröbner cones of single weights") {
  RingPtr R = make_ring({"x", "y"});
  Ideal fig1 = principal(R, "x^4 + x^4*y - x^3*y + x^3*y^2 + y");
  auto c = groebner_cone(fig1, V({1, 0}));
  CHECK(c.cone.rays() == M({{1, -3}, {1, 4}}));
  CHECK(c.maximal);
  CHECK(ideals_equal(c.initial, principal(R, "y")));
  CHECK_FALSE(c.monomial_free);

  auto r = groebner_cone(principal(R, "x + x*y + y"), V({1, 1}));
  CHECK(r.cone.rays() == M({{1, 1}}));
  CHECK(r.cone.dim() == 1);
  CHECK(r.monomial_free);

  RingPtr S = make_ring({"x", "y", "z"});
  Ideal quad = principal(S, "x^2 + x*y + x*z + z^2");
  auto z = groebner_cone(quad, V({0, 0, 0}));
  CHECK(ideals_equal(z.initial, quad));
  CHECK(z.cone.rays().empty());
  CHECK(z.cone.lineality() == M({{1, 1, 1}}));
}

TEST_CASE("Gröbner fan of the five-term curve") {
  RingPtr R = make_ring({"x", "y"});
  Ideal fig1 = principal(R, "x^4 + x^4*y - x^3*y + x^3*y^2 + y");
  auto gf = groebner_fan(fig1);
  CHECK(gf.complete);
  REQUIRE(gf.cones.size() == 4);
  std::set<std::string> ins;
  for (const auto& c : gf.cones) ins.insert(c.initial.to_string());
  CHECK(ins == std::set<std::string>{"<y>", "<x^4>", "<x^3*y^2>", "<x^4*y>"});
  std::set<Vector> rays;
  for (const auto& c : gf.cones)
    for (const auto& ray : c.cone.rays()) rays.insert(ray);
  CHECK(rays == std::set<Vector>{V({1, 4}), V({1, -3}), V({-1, 0}), V({-1, -1})});
  CHECK(verify_fan(gf.fan()).ok);

  auto tv = tropicalize(fig1);
  CHECK(tv.f_vector == std::vector<std::size_t>{4});
  std::set<std::string> ray_ins;
  for (const auto* c : tv.maximal_cones()) ray_ins.insert(c->initial.to_string());
  CHECK(ray_ins == std::set<std::string>{"<x^4 + y>", "<x^3*y^2 + y>", "<x^4*y + x^4>", "<x^4*y + x^3*y^2>"});
}

TEST_CASE("Gröbner fans agree with Newton polytope normal fans") {
  RingPtr R = make_ring({"x", "y", "z"});
  std::vector<std::string> polys = {"x^2 + x*y + x*z + z^2", "x + y + z", "x^3 + y^3 + z^3 - x*y*z",
                                    "x*y + y*z + x*z", "x^2*y + 3*y^2*z - z^3"};
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> e(0, 3), cf(-3, 3);
  for (int t = 0; t < 8; ++t) {
    Polynomial f(R);
    for (int k = 0; k < 4; ++k) {
      int c = cf(rng);
      if (c != 0) f.add_term(Monomial{e(rng), e(rng), e(rng)}, c);
    }
    if (f.size() >= 2) polys.push_back(f.to_string());
  }
  for (const auto& s : polys) {
    CAPTURE(s);
    Polynomial f = parse_polynomial(s, R);
    auto gf = groebner_fan(Ideal(R, {f}));
    std::vector<Cone> bfs;
    for (const auto& c : gf.cones) bfs.push_back(c.cone);
    std::vector<Cone> oracle = principal_groebner_fan(f);
    CHECK(bfs.size() == oracle.size());
    CHECK(ray_sets(bfs) == ray_sets(oracle));
    CHECK(verify_fan(gf.fan()).ok);

    // Tropical hypersurface: monomial-free maximal cones have codimension one.
    auto tv = tropicalize(Ideal(R, {f}));
    for (const auto* c : tv.maximal_cones()) CHECK(c->cone.dim() + 1 == 3);
    // Maximal tropical cones correspond to edges of the Newton polytope,
    // i.e. adjacent pairs of normal cones.
    std::size_t edges = 0;
    for (std::size_t i = 0; i < oracle.size(); ++i)
      for (std::size_t j = i + 1; j < oracle.size(); ++j) edges += are_adjacent(oracle[i], oracle[j]);
    CHECK(tv.maximal_cones().size() == edges);
  }
}

TEST_CASE("interior points of Gröbner cones give the same initial ideal") {
  std::mt19937 rng(29);
  RingPtr S = make_ring({"x", "y", "z"});
  std::vector<Ideal> ideals = {principal(S, "x^2 + x*y + x*z + z^2"),
                               Ideal(S, parse_polynomial_list("x^2 - y*z, x*y - z^2", S)), plucker_ideal(2, 4)};
  for (const auto& I : ideals) {
    auto gf = groebner_fan(I);
    for (const auto& c : gf.cones) {
      Vector a = random_interior(rng, c.cone), b = random_interior(rng, c.cone);
      REQUIRE(c.cone.contains_relint(a));
      CHECK(ideals_equal(initial_ideal(I, a), initial_ideal(I, b)));
      CHECK(ideals_equal(initial_ideal(I, a), c.initial));
    }
    auto tv = tropicalize(I);
    for (const auto& c : tv.cones) {
      Vector a = random_interior(rng, c.cone);
      CHECK(ideals_equal(initial_ideal(I, a), c.initial));
    }
  }
}

TEST_CASE("tropical curves and surfaces") {
  RingPtr R = make_ring({"x", "y"});
  auto line = tropicalize(principal(R, "x + x*y + y"));
  std::vector<std::pair<Vector, Primality>> got;
  for (const auto* c : line.maximal_cones()) got.emplace_back(c->cone.rays()[0], c->prime);
  CHECK(got == std::vector<std::pair<Vector, Primality>>{{V({-1, 0}), Primality::NotPrime},
                                                          {V({0, -1}), Primality::NotPrime},
                                                          {V({1, 1}), Primality::Prime}});
  CHECK(verify_fan(line.fan()).ok);

  RingPtr S = make_ring({"x", "y", "z"});
  auto quad = tropicalize(principal(S, "x^2 + x*y + x*z + z^2"));
  CHECK(quad.lineality == M({{1, 1, 1}}));
  auto maxc = quad.maximal_cones();
  REQUIRE(maxc.size() == 3);
  std::set<Vector> rays;
  for (const auto* c : maxc) {
    rays.insert(c->cone.rays().at(0));
    CHECK(c->cone.lineality() == M({{1, 1, 1}}));
    bool c1 = c->cone.rays()[0] == V({0, -2, -1});
    CHECK((c->prime == Primality::Prime) == c1);
    if (c1) CHECK(ideals_equal(c->initial, principal(S, "x*y + z^2")));
  }
  CHECK(rays == std::set<Vector>{V({0, -2, -1}), V({0, 1, 0}), V({0, 0, 1})});
  CHECK(verify_fan(quad.fan()).ok);
}

TEST_CASE("tropical Grassmannians") {
  auto g24 = tropicalize(plucker_ideal(2, 4));
  CHECK(g24.lineality.size() == 4);
  CHECK(g24.f_vector == std::vector<std::size_t>{3});
  for (const auto& c : g24.cones) {
    for (const auto& l : g24.lineality) CHECK(c.cone.contains(l));
    if (c.maximal) CHECK(c.prime == Primality::Prime);
  }
  CHECK(verify_fan(g24.fan()).ok);

  auto g25 = tropicalize(plucker_ideal(2, 5));
  CHECK(g25.lineality.size() == 5);
  CHECK(g25.f_vector == std::vector<std::size_t>{10, 15});
  CHECK(g25.maximal_cones().size() == 15);
  CHECK(verify_fan(g25.fan()).ok);
  for (const auto& c : g25.cones)
    for (const auto& l : g25.lineality) CHECK(c.cone.contains(l));
}

TEST_CASE("lineality spaces") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(lineality_space(principal(R, "x - y")) == M({{1, 1}}));
  Ideal g24 = plucker_ideal(2, 4);
  Matrix L = lineality_space(g24);
  CHECK(L.size() == 4);
  for (const auto& l : L) {
    CHECK(ideals_equal(initial_ideal(g24, l), g24));
    CHECK(ideals_equal(initial_ideal(g24, Rational(-1) * l), g24));
  }
  // The image of w -> (w_i + w_j) lies in it.
  for (int i = 0; i < 4; ++i) {
    Vector v(6, Rational(0));
    auto subs = subsets(4, 2);
    for (std::size_t s = 0; s < subs.size(); ++s)
      if (subs[s][0] == i + 1 || subs[s][1] == i + 1) v[s] = 1;
    CHECK(in_span(L, v));
  }
}

TEST_CASE("trivial fans") {
  RingPtr S = make_ring({"x", "y", "z"});
  auto gf = groebner_fan(principal(S, "x"));
  REQUIRE(gf.cones.size() == 1);
  CHECK(gf.cones[0].cone.dim() == 3);
  CHECK(gf.cones[0].cone.lineality_dim() == 3);
  CHECK(tropicalize(principal(S, "x")).cones.empty());
  auto small = groebner_fan(plucker_ideal(2, 5), 5);
  CHECK_FALSE(small.complete);
  CHECK(small.cones.size() == 5);
}

TEST_CASE("primality flags follow variable relabeling") {
  RingPtr S = make_ring({"x", "y", "z"});
  RingPtr P = make_ring({"z", "x", "y"});
  auto a = tropicalize(principal(S, "x^2 + x*y + x*z + z^2"));
  auto b = tropicalize(principal(P, "x^2 + x*y + x*z + z^2"));
  // Coordinates of P are (z, x, y).
  for (const auto* c : a.maximal_cones()) {
    const Vector& r = c->cone.rays()[0];
    Vector moved{r[2], r[0], r[1]};
    bool found = false;
    for (const auto* d : b.maximal_cones())
      if (d->cone.contains_relint(moved + d->cone.lineality()[0]) || d->cone.contains_relint(moved)) {
        CHECK(d->prime == c->prime);
        found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("toric associated primes") {
  RingPtr S = make_ring({"x", "y", "z"});
  auto q = toric_associated_prime(principal(S, "x*y + z^2"));
  CHECK(q.multiplicity_one == Certainty::Yes);
  CHECK(ideals_equal(q.ideal, principal(S, "x*y + z^2")));

  RingPtr L = make_ring({"x", "y"}, true);
  auto l = toric_associated_prime(principal(L, "x + x*y"));
  CHECK(l.multiplicity_one == Certainty::Yes);
  CHECK(l.ideal.to_string() == "<y + 1>");

  RingPtr R = make_ring({"x", "y"});
  CHECK(toric_associated_prime(principal(R, "x^2 - y^2")).multiplicity_one == Certainty::No);
  CHECK(toric_associated_prime(principal(R, "x + y + 1")).multiplicity_one == Certainty::Unknown);
}
