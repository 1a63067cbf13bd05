#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "tropwall/groebner.hpp"
#include "tropwall/toric.hpp"

using namespace tropwall;

namespace {

IntMatrix IM(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    IntVector v;
    for (long x : r) v.push_back(Integer(x));
    m.push_back(v);
  }
  return m;
}

Matrix M(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.push_back(Rational(x));
    m.push_back(v);
  }
  return m;
}

// Number of distinct images A u over monomials u of degree r. For a matrix
// with the all-ones row this is the Hilbert function of R/I_A.
std::size_t image_count(const IntMatrix& A, int r) {
  const std::size_t n = A[0].size();
  std::set<IntVector> images;
  std::vector<int> u(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      u[i] = left;
      IntVector img(A.size(), Integer(0));
      for (std::size_t k = 0; k < A.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) img[k] += A[k][j] * u[j];
      images.insert(img);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      u[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, r);
  return images.size();
}

void check_binomials_in_kernel(const IntMatrix& A, const Ideal& I) {
  for (const auto& g : I.generators()) {
    REQUIRE(g.size() == 2);
    auto it = g.terms().begin();
    Monomial a = it->first;
    Rational ca = it->second;
    ++it;
    Monomial b = it->first;
    CHECK(ca + it->second == 0);
    for (const auto& row : A) {
      Integer sa = 0, sb = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        sa += row[j] * a[j];
        sb += row[j] * b[j];
      }
      CHECK(sa == sb);
    }
  }
}

}  // namespace

TEST_CASE("twisted cubic") {
  IntMatrix A = IM({{1, 1, 1, 1}, {0, 1, 2, 3}});
  Ideal I = toric_ideal(A);
  RingPtr R = I.ring();
  Ideal expected(R, parse_polynomial_list("x1*x3 - x2^2, x2*x4 - x3^2, x1*x4 - x2*x3", R));
  CHECK(ideals_equal(I, expected));
  check_binomials_in_kernel(A, I);
  CHECK(is_prime_binomial(I) == Primality::Prime);
  CHECK_FALSE(contains_monomial(I));
  auto std2 = standard_monomials(I, OrderDescriptor::grevlex(), 2);
  std::size_t deg2 = 0;
  for (const auto& m : std2) deg2 += total_degree(m) == 2;
  CHECK(deg2 == image_count(A, 2));
  CHECK(10 - deg2 == 3);
}

TEST_CASE("trivial kernel and the quadric matrix") {
  CHECK(toric_ideal(IM({{1, 0}, {0, 1}})).is_zero());
  RingPtr R = make_ring({"x", "y", "z"});
  Ideal I = toric_ideal(IM({{1, 1, 1}, {2, 0, 1}}), R);
  CHECK(ideals_equal(I, Ideal(R, {parse_polynomial("x*y - z^2", R)})));
  Ideal plus(R, {parse_polynomial("x*y + z^2", R)});
  CHECK_FALSE(ideals_equal(I, plus));
  CHECK(ideals_equal_up_to_signs(I, plus));
  CHECK_FALSE(ideals_equal_up_to_signs(I, Ideal(R, {parse_polynomial("x*y + z", R)})));
  CHECK_THROWS_AS(toric_ideal(IM({{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("saturation is needed beyond the kernel basis") {
  // Kernel basis binomials of this matrix generate a strictly smaller ideal.
  IntMatrix A = IM({{1, 1, 1, 1}, {0, 1, 2, 3}});
  Ideal I = toric_ideal(A);
  for (int r = 0; r <= 4; ++r) {
    std::size_t cnt = 0;
    for (const auto& m : standard_monomials(I, OrderDescriptor::grevlex(), r)) cnt += total_degree(m) == r;
    CHECK(cnt == image_count(A, r));
  }
}

TEST_CASE("random toric ideals match the monomial map") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(0, 3), cols(3, 5);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = static_cast<std::size_t>(cols(rng));
    IntMatrix A(2, IntVector(n));
    for (std::size_t j = 0; j < n; ++j) {
      A[0][j] = 1;
      A[1][j] = entry(rng);
    }
    Ideal I = toric_ideal(A);
    check_binomials_in_kernel(A, I);
    if (!I.is_zero()) CHECK(is_prime_binomial(I) == Primality::Prime);
    for (int r = 0; r <= 3; ++r) {
      std::size_t cnt = 0;
      for (const auto& m : standard_monomials(I, OrderDescriptor::grevlex(), r)) cnt += total_degree(m) == r;
      CHECK(cnt == image_count(A, r));
    }
  }
}

TEST_CASE("ehrhart polynomials") {
  Polytope sq = Polytope::from_vertices(M({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  auto e = ehrhart_polynomial(sq);
  CHECK(e.coefficients == Vector{1, 2, 1});
  CHECK(e.normalized_volume() == 2);
  auto seg = ehrhart_polynomial(Polytope::from_vertices(M({{0}, {1}})));
  CHECK(seg.coefficients == Vector{1, 1});
  CHECK(seg.to_string() == "r + 1");

  ToricData tc = toric_data(IM({{1, 1, 1, 1}, {0, 1, 2, 3}}));
  auto et = ehrhart_polynomial(tc.Q, &tc.lattice);
  CHECK(et.coefficients == Vector{1, 3});
  CHECK(et.normalized_volume() == 3);

  CHECK_THROWS_AS(ehrhart_polynomial(Polytope::from_vertices(M({{0, 0}, {1, 0}})).dilate(Rational(1, 2))),
                  std::invalid_argument);
  // Sublattice: the even points of [0,2] are 0 and 2.
  Lattice even(IntMatrix{{Integer(2)}}, 1);
  auto ee = ehrhart_polynomial(Polytope::from_vertices(M({{0}, {2}})), &even);
  CHECK(ee.coefficients == Vector{1, 1});
  CHECK_THROWS_AS(ehrhart_polynomial(Polytope::from_vertices(M({{0}, {1}})), &even), std::invalid_argument);

  std::vector<Polytope> polys = {sq, Polytope::from_vertices(M({{0, 0}, {3, 1}, {1, 2}})),
                                 Polytope::from_vertices(M({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                                 Polytope::from_vertices(M({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}))};
  for (const auto& p : polys) {
    auto ep = ehrhart_polynomial(p);
    for (int r = ep.degree() + 1; r <= ep.degree() + 2; ++r)
      CHECK(ep(r) == Rational(static_cast<long>(p.dilate(r).lattice_points().size())));
    CHECK(ep.normalized_volume() > 0);
  }
}

TEST_CASE("normality") {
  Polytope sq = Polytope::from_vertices(M({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(is_normal(sq, 3));
  CHECK(is_normal(Polytope::from_vertices(M({{0}, {2}})), 2));
  CHECK_FALSE(is_normal(Polytope::from_vertices(M({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}})), 2));
}

TEST_CASE("hilbert function equals ehrhart polynomial") {
  auto tc = hilbert_equals_ehrhart(IM({{1, 1, 1, 1}, {0, 1, 2, 3}}), 3);
  CHECK(tc.equal);
  CHECK(tc.normal);
  CHECK(tc.hilbert == std::vector<Integer>{1, 4, 7, 10});

  auto quad = hilbert_equals_ehrhart(IM({{1, 1, 1}, {2, 0, 1}}), 3);
  CHECK(quad.equal);
  CHECK(quad.hilbert == std::vector<Integer>{1, 3, 5, 7});

  // A single all-ones row: Q is a point and I_A cuts out a point too.
  auto pt = hilbert_equals_ehrhart(IM({{1, 1, 1}}), 3);
  CHECK(pt.equal);
  CHECK(pt.hilbert == std::vector<Integer>{1, 1, 1, 1});

  // Projective plane: columns (1, e_i), Q the standard simplex.
  auto p2 = hilbert_equals_ehrhart(IM({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}), 4);
  CHECK(p2.equal);
  CHECK(p2.hilbert == std::vector<Integer>{1, 3, 6, 10, 15});

  CHECK_THROWS_AS(hilbert_equals_ehrhart(IM({{1, 2, 3}}), 2), std::invalid_argument);
}
