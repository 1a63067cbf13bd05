#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tropwall/grassmann.hpp"
#include "tropwall/wallcross.hpp"

using namespace tropwall;

namespace {

Vector random_point(std::mt19937& rng, const Polytope& p) {
  std::uniform_int_distribution<int> wt(1, 9);
  Vector x(p.ambient(), Rational(0));
  Rational total = 0;
  for (const auto& v : p.vertices()) {
    Rational t = wt(rng);
    x = x + t * v;
    total += t;
  }
  return Rational(1) / total * x;
}

Vector head(const Vector& v) { return Vector(v.begin(), v.end() - 1); }

struct Gr24 {
  Ideal I = plucker_ideal(2, 4);
  TropicalVariety trop = tropicalize(I);
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < trop.cones.size(); ++i)
      if (trop.cones[i].maximal) out.push_back(i);
    return out;
  }
};

}  // namespace

TEST_CASE("segment bodies over a point") {
  WeightMatrix M(Matrix{{1, 1, 1}});
  WallSetup s = wall_setup_from_matrices(M, Vector{0, 1, 2}, Vector{2, 1, 0});
  CHECK(s.d == 2);
  CHECK(s.body.vertices() == Matrix{{1}});
  CHECK(s.body1.vertices() == Matrix{{1, 0}, {1, 2}});
  Interval f = fiber_interval(s.body1, Vector{1});
  CHECK(f.lo == 0);
  CHECK(f.hi == 2);
  CHECK(projections_agree(s));
  CHECK(kappa(s) == 1);
  CHECK_THROWS_AS(fiber_interval(s.body1, Vector{2}), std::domain_error);

  // Doubling the last row of M2 doubles its fibers.
  WallSetup t = wall_setup_from_matrices(M, Vector{0, 1, 2}, Vector{4, 2, 0});
  CHECK(kappa(t) == 2);
  CHECK(kappa(wall_setup_from_matrices(M, Vector{0, 2, 4}, Vector{2, 1, 0})) == Rational(1, 2));

  CHECK(shift_map(s, 1, Vector{1, 0}) == Vector{1, 0});
  CHECK(flip_map(s, 1, Vector{1, 0}) == Vector{1, 2});
  CHECK(shift_map(t, 2, Vector{1, Rational(1, 2)}) == Vector{1, 1});
  CHECK_THROWS_AS(shift_map(s, 1, Vector{1, 3}), std::domain_error);

  // All fibers are points.
  WallSetup flat = wall_setup_from_matrices(M, Vector{1, 1, 1}, Vector{0, 0, 0});
  CHECK_THROWS_AS(kappa(flat), std::domain_error);
}

TEST_CASE("vertex fibers and envelope forms") {
  WeightMatrix M(Matrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
  WallSetup s = wall_setup_from_matrices(M, Vector{0, 2, 1, 0}, Vector{1, 0, 0, 2});
  CHECK(projections_agree(s));
  Interval v = fiber_interval(s.body1, Vector{1, 0});
  CHECK(v.lo == v.hi);
  std::mt19937 rng(1);
  auto cells = envelope_cells(s);
  REQUIRE(!cells.empty());
  for (const auto& cell : cells)
    for (int t = 0; t < 10; ++t) {
      Vector x = random_point(rng, cell.domain);
      Interval f1 = fiber_interval(s.body1, x), f2 = fiber_interval(s.body2, x);
      CHECK(f1.lo == cell.phi1(x));
      CHECK(f1.hi == cell.psi1(x));
      CHECK(f2.lo == cell.phi2(x));
      CHECK(f2.hi == cell.psi2(x));
    }
}

TEST_CASE("wall crossing on Gr(2,4)") {
  Gr24 g;
  auto maxc = g.maximal();
  REQUIRE(maxc.size() == 3);
  std::mt19937 rng(7);
  for (std::size_t a = 0; a < maxc.size(); ++a)
    for (std::size_t b = a + 1; b < maxc.size(); ++b) {
      WallSetup s = wall_setup(g.trop, maxc[a], maxc[b], g.I);
      CHECK(s.d == 5);
      CHECK(s.M.d() == 4);
      CHECK(s.M1.rows.size() == 5);
      CHECK(projections_agree(s));
      KappaCertificate cert = certify_kappa(s);
      CHECK(cert.constant);
      CHECK(sgn(cert.kappa) > 0);
      MESSAGE("kappa = " << to_string(cert.kappa) << " over " << cert.cells.size() << " cells");
      const Rational k = cert.kappa;

      for (int t = 0; t < 20; ++t) {
        Vector xi = random_point(rng, s.body);
        CHECK(fiber_interval(s.body2, xi).length() == k * fiber_interval(s.body1, xi).length());
      }
      for (int t = 0; t < 50; ++t) {
        Vector q = random_point(rng, s.body1);
        Vector sq = shift_map(s, k, q);
        Vector fq = flip_map(s, k, q);
        CHECK(head(sq) == head(q));
        CHECK(s.body2.contains(sq));
        CHECK(s.body2.contains(fq));
        CHECK(shift_map(s, k, sq, false) == q);
        CHECK(flip_map(s, k, fq, false) == q);
      }
      for (const auto& v : s.body1.vertices()) {
        CHECK(s.body2.contains(shift_map(s, k, v)));
        CHECK(s.body2.contains(flip_map(s, k, v)));
        Interval f1 = fiber_interval(s.body1, head(v));
        Vector bottom = head(v);
        bottom.push_back(f1.lo);
        Interval f2 = fiber_interval(s.body2, head(v));
        CHECK(shift_map(s, k, bottom).back() == f2.lo);
        CHECK(flip_map(s, k, bottom).back() == f2.hi);
      }
      // On each cell the shift map is the affine map h -> k h - k phi1 + phi2.
      for (const auto& cell : cert.cells) {
        Vector x = random_point(rng, cell.domain);
        Interval f1 = fiber_interval(s.body1, x);
        Vector q = x;
        q.push_back((f1.lo + f1.hi) / 2);
        CHECK(shift_map(s, k, q).back() == k * q.back() - k * cell.phi1(x) + cell.phi2(x));
        CHECK(flip_map(s, k, q).back() == -k * q.back() + k * cell.phi1(x) + cell.psi2(x));
      }
    }
}

TEST_CASE("setup preconditions") {
  Gr24 g;
  auto maxc = g.maximal();
  CHECK_THROWS_AS(wall_setup(g.trop, maxc[0], maxc[0], g.I), std::invalid_argument);
  CHECK_THROWS_AS(wall_setup(g.trop, 0, maxc[0], g.I), std::invalid_argument);  // lineality cone

  RingPtr R = make_ring({"x", "y", "z"});
  Ideal Q(R, {parse_polynomial("x^2 + x*y + x*z + z^2", R)});
  TropicalVariety t = tropicalize(Q);
  std::vector<std::size_t> prime, other;
  for (std::size_t i = 0; i < t.cones.size(); ++i)
    if (t.cones[i].maximal) (t.cones[i].prime == Primality::Prime ? prime : other).push_back(i);
  REQUIRE(prime.size() == 1);
  REQUIRE(!other.empty());
  CHECK_THROWS_AS(wall_setup(t, prime[0], other[0], Q), std::invalid_argument);
}
