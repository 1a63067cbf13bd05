#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tropwall/linalg.hpp"
#include "tropwall/polyhedra.hpp"

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

// Membership oracle from the V-representation alone: v in pos(rays) + span(lin)
// iff the LP over nonnegative ray multipliers is feasible.
bool in_hull(const Matrix& rays, const Matrix& lin, const Vector& v) {
  std::size_t k = rays.size() + lin.size(), n = v.size();
  Matrix E;
  Vector f;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(k, Rational(0));
    for (std::size_t j = 0; j < rays.size(); ++j) row[j] = rays[j][i];
    for (std::size_t j = 0; j < lin.size(); ++j) row[rays.size() + j] = lin[j][i];
    E.push_back(row);
    f.push_back(v[i]);
  }
  Matrix A;
  Vector b;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    Vector row(k, Rational(0));
    row[j] = -1;
    A.push_back(row);
    b.push_back(0);
  }
  return lp_feasible_point(k, A, b, E, f).has_value();
}

Polytope unit_square() { return Polytope::from_vertices(M({{0, 0}, {1, 0}, {0, 1}, {1, 1}})); }

}  // namespace

TEST_CASE("double description on small cones") {
  Cone q = Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2);
  CHECK(q.facets() == M({{0, 1}, {1, 0}}));
  CHECK(q.equations().empty());
  CHECK(q.lineality_dim() == 0);

  Cone plane = Cone::from_rays(M({{1, 0}, {0, 1}, {-1, -1}}), {}, 2);
  CHECK(plane.lineality_dim() == 2);
  CHECK(plane.facets().empty());
  CHECK(plane.rays().empty());
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) CHECK(plane.contains(V({x, y})));

  Cone fig2 = Cone::from_rays(M({{1, 0}, {1, 2}}), {}, 2);
  CHECK(fig2.facets() == M({{0, 1}, {2, -1}}));
  for (const auto& r : fig2.rays())
    for (const auto& f : fig2.facets()) CHECK(sgn(dot(f, r)) >= 0);
}

TEST_CASE("inequalities to rays") {
  Cone c = Cone::from_inequalities(M({{1, 0, 0}, {0, 1, 0}}), {}, 3);
  CHECK(c.lineality() == M({{0, 0, 1}}));
  CHECK(c.rays() == M({{0, 1, 0}, {1, 0, 0}}));
  CHECK(c.dim() == 3);

  Cone line = Cone::from_inequalities({}, M({{1, -1, 0}, {0, 1, -1}}), 3);
  CHECK(line.lineality() == M({{1, 1, 1}}));
  CHECK(line.dim() == 1);

  Cone origin = Cone::from_inequalities(M({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), {}, 2);
  CHECK(origin.dim() == 0);
  CHECK(origin.rays().empty());
}

TEST_CASE("random round trips agree with the LP hull oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3), count(1, 6), dimd(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(dimd(rng));
    Matrix rays;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Vector r(n);
      for (auto& x : r) x = coord(rng);
      rays.push_back(r);
    }
    Cone c = Cone::from_rays(rays, {}, n);
    Cone back = Cone::from_inequalities(c.facets(), c.equations(), n);
    CHECK(back == c);
    CHECK(back.facets() == c.facets());
    Cone again = Cone::from_rays(c.rays(), c.lineality(), n);
    CHECK(again == c);
    for (const auto& r : c.rays())
      for (auto x : r) CHECK(x.get_den() == 1);
    CHECK(c.dim() == rank(rays));
    for (int s = 0; s < 15; ++s) {
      Vector v(n);
      for (auto& x : v) x = coord(rng);
      CHECK(c.contains(v) == in_hull(rays, {}, v));
    }
    CHECK(c.contains_relint(c.relative_interior_point()) == (c.dim() > 0 || c.facets().empty()));
  }
}

TEST_CASE("relative interior points") {
  CHECK(Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2).relative_interior_point() == V({1, 1}));
  CHECK(Cone::from_rays(M({{1, 1}}), {}, 2).relative_interior_point() == V({1, 1}));
  Cone c1 = Cone::from_rays(M({{0, -2, -1}}), M({{1, 1, 1}}), 3);
  CHECK(c1.relative_interior_point() == V({1, -1, 0}));
  CHECK(c1.contains_relint(V({1, -1, 0})));
}

TEST_CASE("faces of cones and polytopes") {
  Polytope sq = unit_square();
  CHECK(sq.face(V({0, 0})) == sq);
  CHECK(sq.face(V({1, 0})).vertices() == M({{1, 0}, {1, 1}}));
  Polytope seg = Polytope::from_vertices(M({{1, 0}, {1, 2}}));
  CHECK(seg.face(V({0, 1})).vertices() == M({{1, 2}}));
  CHECK(seg.dim() == 1);

  Cone q = Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2);
  CHECK_FALSE(q.face(V({1, 0})).has_value());
  CHECK(*q.face(V({-1, 0})) == Cone::from_rays(M({{0, 1}}), {}, 2));
  CHECK(*q.face(V({-1, -1})) == Cone::from_rays({}, {}, 2));
  CHECK(q.is_face(Cone::from_rays(M({{0, 1}}), {}, 2)));
  CHECK_FALSE(q.is_face(Cone::from_rays(M({{1, 1}}), {}, 2)));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-2, 2);
  Polytope cube = Polytope::from_vertices(
      M({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 2, 2}}));
  for (int t = 0; t < 40; ++t) {
    Vector v{Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))};
    Vector w{Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))};
    Polytope f = cube.face(v).face(w);
    // A face of P is P's face for the weight v scaled large plus w.
    Polytope g = cube.face(Rational(100) * v + w);
    CHECK(f == g);
  }
}

TEST_CASE("adjacency and common faces") {
  Cone a = Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2);
  Cone b = Cone::from_rays(M({{1, 0}, {0, -1}}), {}, 2);
  CHECK(are_adjacent(a, b));
  CHECK(*common_face(a, b) == Cone::from_rays(M({{1, 0}}), {}, 2));
  CHECK_FALSE(are_adjacent(a, a));
  Cone c = Cone::from_rays(M({{-1, 0}, {0, -1}}), {}, 2);
  CHECK_FALSE(are_adjacent(a, c));

  Matrix lin = M({{1, 1, 1}});
  Cone c1 = Cone::from_rays(M({{0, -2, -1}}), lin, 3);
  Cone c2 = Cone::from_rays(M({{0, 1, 0}}), lin, 3);
  CHECK(are_adjacent(c1, c2));
  CHECK(*common_face(c1, c2) == Cone::from_rays({}, lin, 3));
  CHECK_THROWS_AS(are_adjacent(a, c1), std::invalid_argument);
}

TEST_CASE("lattice points") {
  CHECK(unit_square().lattice_points().size() == 4);
  Polytope seg = Polytope::from_vertices(M({{1, 0}, {1, 2}}));
  CHECK(seg.lattice_points() == M({{1, 0}, {1, 1}, {1, 2}}));
  Polytope tri = Polytope::from_vertices(M({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(tri.dilate(2).lattice_points().size() == 6);

  Lattice even(IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}}, 2);
  CHECK(tri.dilate(2).lattice_points(&even).size() == 4);

  // Brute force grid scan against the vertex description.
  std::vector<Polytope> polys = {unit_square(), seg, tri,
                                 Polytope::from_vertices(M({{0, 0}, {3, 1}, {1, 2}})),
                                 Polytope::from_vertices(M({{0, 0, 0}, {1, 0, 2}, {0, 1, 1}, {1, 1, 0}}))};
  for (const auto& p : polys)
    for (int r = 1; r <= 4; ++r) {
      Polytope rp = p.dilate(r);
      std::size_t n = rp.ambient();
      std::size_t brute = 0;
      std::vector<long> cur(n, -1);
      long hi = 4 * 3 + 1;
      while (true) {
        Vector x;
        for (auto c : cur) x.push_back(Rational(c));
        Matrix pts = rp.vertices();
        if (in_hull([&] {
              Matrix h;
              for (auto& v : pts) {
                Vector q{Rational(1)};
                q.insert(q.end(), v.begin(), v.end());
                h.push_back(q);
              }
              return h;
            }(),
                    {}, [&] {
                      Vector q{Rational(1)};
                      q.insert(q.end(), x.begin(), x.end());
                      return q;
                    }()))
          ++brute;
        std::size_t i = 0;
        while (i < n && cur[i] == hi) cur[i++] = -1;
        if (i == n) break;
        ++cur[i];
      }
      CHECK(rp.lattice_points().size() == brute);
    }
}

TEST_CASE("linear programming") {
  Polytope seg = Polytope::from_vertices(M({{1, 0}, {1, 2}}));
  auto r = seg.optimize(V({0, 1}));
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == 2);
  auto s = unit_square().optimize(V({1, 0}), false);
  CHECK(s.value == 0);
  auto t = unit_square().optimize(V({1, 1}));
  CHECK(t.value == 2);
  CHECK(t.point == V({1, 1}));

  auto inf = lp_optimize(V({1}), M({{1}, {-1}}), V({-1, -1}));
  CHECK(inf.status == LpResult::Status::Infeasible);
  auto unb = lp_optimize(V({1}), M({{-1}}), V({0}));
  CHECK(unb.status == LpResult::Status::Unbounded);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix pts;
    for (int i = 0; i < 6; ++i) pts.push_back(V({coord(rng), coord(rng), coord(rng)}));
    Polytope p = Polytope::from_vertices(pts);
    Vector w = V({coord(rng), coord(rng), coord(rng)});
    Rational best = dot(w, pts[0]);
    for (const auto& v : pts) best = std::max(best, dot(w, v));
    auto res = p.optimize(w);
    REQUIRE(res.status == LpResult::Status::Optimal);
    CHECK(res.value == best);
    CHECK(p.contains(res.point));
  }
}

TEST_CASE("polytopes from inequalities") {
  Polytope sq = Polytope::from_inequalities(M({{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}}), {}, 2);
  CHECK(sq == unit_square());
  CHECK(sq.facets().size() == 4);
  CHECK_THROWS_AS(Polytope::from_inequalities(M({{0, 1, 0}}), {}, 2), std::invalid_argument);
  Polytope none = Polytope::from_inequalities(M({{-1, 1}, {0, -1}}), {}, 1);
  CHECK(none.empty());
  CHECK(none.lattice_points().empty());
}

TEST_CASE("projections") {
  Cone c = Cone::from_rays(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {}, 3);
  CHECK(c.project({0, 1}) == Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2));
  CHECK(c.project({0, 1, 2}) == c);
  Polytope p = Polytope::from_vertices(M({{1, 0, 5}, {1, 2, 7}}));
  CHECK(p.project({0, 1}) == Polytope::from_vertices(M({{1, 0}, {1, 2}})));

  Cone lifted = Cone::from_rays(M({{1, 1, 0}, {1, -1, 0}}), {}, 3);
  CHECK(projection_meets_relint(lifted, {0}, Cone::from_rays(M({{1}}), {}, 1)));
  CHECK_FALSE(projection_meets_relint(lifted, {0}, Cone::from_rays(M({{-1}}), {}, 1)));
  CHECK(projection_meets_relint(lifted, {1}, Cone::from_rays(M({{-1}}), {}, 1)));
  // Only the boundary ray maps into the target's closure.
  Cone thin = Cone::from_rays(M({{1, 0, 0}, {0, 0, 1}}), {}, 3);
  CHECK_FALSE(projection_meets_relint(thin, {0, 1}, Cone::from_rays(M({{1, 1}, {0, 1}}), {}, 2)));
}

TEST_CASE("fan verification") {
  Fan complete{2, {}, {Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2), Cone::from_rays(M({{0, 1}, {-1, -1}}), {}, 2),
                       Cone::from_rays(M({{-1, -1}, {1, 0}}), {}, 2)}};
  CHECK(verify_fan(complete).ok);
  Fan overlap{2, {}, {Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2), Cone::from_rays(M({{1, 1}, {-1, 1}}), {}, 2)}};
  auto bad = verify_fan(overlap);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations.size() == 1);
  Fan single{2, {}, {Cone::from_rays(M({{1, 0}, {0, 1}}), {}, 2)}};
  CHECK(verify_fan(single).ok);
}
