#include "tropwall/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "tropwall/grassmann.hpp"
#include "tropwall/reembed.hpp"
#include "tropwall/toric.hpp"
#include "tropwall/wallcross.hpp"

namespace tropwall {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Check = std::function<Outcome()>;

Ideal principal(const RingPtr& R, const std::string& f) { return Ideal(R, {parse_polynomial(f, R)}); }

std::string show(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

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

Polynomial random_poly(std::mt19937& rng, const RingPtr& R) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), nterms(1, 4);
  std::uniform_int_distribution<std::size_t> var(0, R->arity() - 1);
  Polynomial f(R);
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(R->arity(), 0);
    for (int i = deg(rng); i > 0; --i) ++m[var(rng)];
    f.add_term(m, coef(rng));
  }
  return f;
}

Outcome plucker() {
  Ideal I = plucker_ideal(2, 4);
  bool rel = I.generators().size() == 1 &&
             I.generators()[0] == parse_polynomial("p12*p34 - p13*p24 + p14*p23", I.ring());
  Vector p = plucker_coords(Matrix{{4, 3, 2, 1}, {1, 2, 3, 4}});
  bool coords = p == Vector{5, 10, 15, 5, 10, 5};
  return {rel && coords, I.to_string() + "; coords " + to_string(p)};
}

Outcome groebner_fan_fig1() {
  RingPtr R = make_ring({"x", "y"});
  Ideal I = principal(R, "x^4 + x^4*y - x^3*y + x^3*y^2 + y");
  GroebnerFan gf = groebner_fan(I);
  std::set<std::string> monomial, binomial;
  std::set<Vector> rays;
  for (const auto& c : gf.cones) {
    monomial.insert(c.initial.to_string());
    for (const auto& r : c.cone.rays()) rays.insert(r);
  }
  for (const auto& r : rays) binomial.insert(groebner_cone(I, r).initial.to_string());
  bool ok = gf.complete && gf.cones.size() == 4 &&
            rays == std::set<Vector>{{1, 4}, {1, -3}, {-1, 0}, {-1, -1}} &&
            monomial == std::set<std::string>{"<y>", "<x^4>", "<x^3*y^2>", "<x^4*y>"} &&
            binomial == std::set<std::string>{"<x^4 + y>", "<x^3*y^2 + y>", "<x^4*y + x^4>", "<x^4*y + x^3*y^2>"};
  return {ok, std::to_string(gf.cones.size()) + " cones; " + show(monomial) + "; " + show(binomial)};
}

Outcome toy_trop() {
  RingPtr R = make_ring({"x", "y"}, true);
  TropicalVariety t = tropicalize(principal(R, "x + x*y + y"));
  std::map<Vector, std::pair<std::string, std::string>> got;
  for (const auto* c : t.maximal_cones())
    got[c->cone.rays().at(0)] = {to_string(c->prime), c->initial.to_string()};
  std::map<Vector, std::pair<std::string, std::string>> want{{{-1, 0}, {"not_prime", "<x*y + x>"}},
                                                             {{0, -1}, {"not_prime", "<x*y + y>"}},
                                                             {{1, 1}, {"prime", "<x + y>"}}};
  std::string detail;
  for (const auto& [r, v] : got) detail += to_string(r) + " " + v.first + " " + v.second + "; ";
  return {got == want && t.maximal_cones().size() == 3, detail};
}

Outcome quadric() {
  RingPtr R = make_ring({"x", "y", "z"});
  Ideal I = principal(R, "x^2 + x*y + x*z + z^2");
  TropicalVariety t = tropicalize(I);
  bool lin = t.lineality == Matrix{{1, 1, 1}};
  std::set<Vector> rays;
  bool c1 = false;
  for (const auto* c : t.maximal_cones()) {
    const Vector& r = c->cone.rays().at(0);
    rays.insert(r);
    if (r == Vector{0, -2, -1})
      c1 = c->prime == Primality::Prime && ideals_equal(c->initial, principal(R, "x*y + z^2"));
  }
  bool cones = t.maximal_cones().size() == 3 && rays == std::set<Vector>{{0, -2, -1}, {0, 1, 0}, {0, 0, 1}};
  Polytope body = no_body(WeightMatrix(Matrix{{1, 1, 1}, {2, 0, 1}}));
  bool seg = body.vertices() == Matrix{{1, 0}, {1, 2}};
  std::ostringstream d;
  d << "lineality " << (lin ? "R(1,1,1)" : "wrong") << ", " << t.maximal_cones().size() << " cones, C1 "
    << (c1 ? "<x*y + z^2> prime" : "wrong") << ", body";
  for (const auto& v : body.vertices()) d << " " << to_string(v);
  return {lin && cones && c1 && seg, d.str()};
}

Outcome degeneration() {
  RingPtr R = make_ring({"x", "y", "z", "w"});
  Ideal I = principal(R, "x*y + y*z - z*w");
  Ideal fam = degeneration_family(I, Vector{0, 1, 1, 0});
  RingPtr T = fam.ring();
  bool family = ideals_equal(fam, principal(T, "x*y + t*y*z - z*w"));
  Ideal fiber = evaluate_parameter(fam, 0, R);
  bool zero = ideals_equal(fiber, principal(R, "x*y - z*w"));
  return {family && zero, fam.to_string() + "; t=0: " + fiber.to_string()};
}

Outcome hilbert_ehrhart() {
  IntMatrix A{{1, 1, 1, 1}, {0, 1, 2, 3}};
  // Hilbert side: standard monomials of the toric ideal, per degree.
  Ideal I = toric_ideal(A);
  std::vector<long> hilbert(4, 0);
  for (const auto& m : standard_monomials(I, OrderDescriptor::grevlex(), 3)) ++hilbert[total_degree(m)];
  // Ehrhart side: lattice points of the dilations of Q, and the polynomial.
  ToricData td = toric_data(A);
  EhrhartPolynomial e = ehrhart_polynomial(td.Q, &td.lattice);
  std::vector<long> counts, values;
  for (int r = 0; r <= 3; ++r) {
    counts.push_back(static_cast<long>(td.Q.dilate(r).lattice_points(&td.lattice).size()));
    values.push_back(e(r).get_num().get_si());
  }
  std::vector<long> want{1, 4, 7, 10};
  bool ok = hilbert == want && counts == want && values == want && e.coefficients == std::vector<Rational>{1, 3} &&
            e.normalized_volume() == 3;
  std::ostringstream d;
  d << "H = " << hilbert[0] << "," << hilbert[1] << "," << hilbert[2] << "," << hilbert[3] << "; E(r) = "
    << e.to_string() << "; volume " << e.normalized_volume().get_str();
  return {ok, d.str()};
}

long double_factorial(long k) { return k <= 1 ? 1 : k * double_factorial(k - 2); }

Outcome gr25() {
  const long n = 5;
  TropicalVariety t = tropicalize(plucker_ideal(2, 5));
  std::set<Vector> rays;
  for (const auto* c : t.maximal_cones())
    for (const auto& r : c->cone.rays()) rays.insert(r);
  // Trivalent trees on n leaves and splits of [n] with both sides >= 2.
  long trees = double_factorial(2 * n - 5);
  long splits = (1L << (n - 1)) - 1 - n;
  bool ok = t.complete && static_cast<long>(t.maximal_cones().size()) == trees &&
            static_cast<long>(rays.size()) == splits && t.lineality.size() == 5;
  std::ostringstream d;
  d << t.maximal_cones().size() << " maximal cones (trees " << trees << "), " << rays.size() << " rays (splits "
    << splits << "), lineality " << t.lineality.size();
  return {ok, d.str()};
}

Outcome wall_gr24() {
  Ideal I = plucker_ideal(2, 4);
  TropicalVariety t = tropicalize(I);
  std::vector<std::size_t> primes;
  for (std::size_t i = 0; i < t.cones.size(); ++i)
    if (t.cones[i].maximal && t.cones[i].prime == Primality::Prime) primes.push_back(i);
  std::mt19937 rng(2024);
  bool ok = primes.size() == 3;
  int pairs = 0;
  std::string kappas;
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      if (!are_adjacent(t.cones[primes[a]].cone, t.cones[primes[b]].cone)) continue;
      ++pairs;
      WallSetup s = wall_setup(t, primes[a], primes[b], I);
      ok = ok && projections_agree(s);
      KappaCertificate cert = certify_kappa(s);
      ok = ok && cert.constant;
      const Rational k = cert.kappa;
      kappas += to_string(k) + " ";
      for (int i = 0; i < 50; ++i) {
        Vector q = random_point(rng, s.body1);
        Vector sq = shift_map(s, k, q), fq = flip_map(s, k, q);
        ok = ok && s.body2.contains(sq) && s.body2.contains(fq);
        ok = ok && shift_map(s, k, sq, false) == q && flip_map(s, k, fq, false) == q;
        Vector xi(q.begin(), q.end() - 1);
        ok = ok && fiber_interval(s.body2, xi).length() == k * fiber_interval(s.body1, xi).length();
      }
    }
  ok = ok && pairs == 3;
  return {ok, std::to_string(pairs) + " adjacent prime pairs, kappa " + kappas};
}

Outcome valuations() {
  RingPtr R = make_ring({"x", "y", "z"});
  Ideal I = principal(R, "x^2 + x*y + x*z + z^2");
  WeightMatrix M(Matrix{{1, 1, 1}, {2, 0, 1}});
  std::mt19937 rng(99);
  int pairs = 0, failures = 0;
  while (pairs < 100) {
    Polynomial f = random_poly(rng, R), g = random_poly(rng, R);
    if (contains(I, f) || contains(I, g)) continue;
    ++pairs;
    if (weight_quasivaluation(M, I, f * g) !=
        weight_quasivaluation(M, I, f) + weight_quasivaluation(M, I, g))
      ++failures;
  }
  // Non-prime cone R>=0 (-1, 0) of trop <x + x y + y>: search for a strict witness.
  RingPtr L = make_ring({"x", "y"}, true);
  Ideal T = principal(L, "x + x*y + y");
  WeightMatrix W(Matrix{{-1, 0}});
  RingPtr P = with_laurent(L, false);
  std::string witness;
  const char* small[] = {"x", "y", "1+y", "1+x", "x+y", "x-1", "y-1", "x*y"};
  for (const char* a : small)
    for (const char* b : small) {
      if (!witness.empty()) break;
      Polynomial f = parse_polynomial(a, P), g = parse_polynomial(b, P);
      Vector v = weight_quasivaluation(W, T, f * g);
      Vector s = weight_quasivaluation(W, T, f) + weight_quasivaluation(W, T, g);
      if (compare_values(v, s, false) > 0)
        witness = "nu((" + f.to_string() + ")(" + g.to_string() + ")) = " + to_string(v) + " > " + to_string(s);
    }
  return {failures == 0 && !witness.empty(),
          std::to_string(pairs - failures) + "/100 products additive; witness " + witness};
}

Outcome algorithm_toy() {
  RingPtr R = make_ring({"x", "y"}, true);
  Ideal I = principal(R, "x + x*y + y");
  TropicalVariety t = tropicalize(I);
  const GroebnerCone *c1 = nullptr, *c2 = nullptr;
  for (const auto* c : t.maximal_cones()) {
    if (c->cone.rays().at(0) == Vector{-1, 0}) c1 = c;
    if (c->cone.rays().at(0) == Vector{1, 1}) c2 = c;
  }
  if (!c1 || !c2) return {false, "toy cones not found"};
  AdjacentResult r = algorithm2(I, *c1, *c2);
  if (!r.found) return {false, "no adjacent prime pair"};
  bool ok = r.c1->prime == Primality::Prime && r.c2->prime == Primality::Prime &&
            are_adjacent(r.c1->cone, r.c2->cone) && project_cone_check(r.c1->cone, c1->cone) &&
            project_cone_check(r.c2->cone, c2->cone) && elimination_recovers(r.embedding, I);
  // Oracle: a separate tropicalization of I1 and initial ideals taken directly.
  TropicalVariety direct = tropicalize(r.embedding.ideal);
  Ideal J = clear_monomials(r.embedding.ideal);
  for (const auto* c : {&*r.c1, &*r.c2}) {
    bool listed = false;
    for (const auto* d : direct.maximal_cones()) listed = listed || d->cone == c->cone;
    Ideal in = initial_ideal(J, c->cone.relative_interior_point());
    ok = ok && listed && !contains_monomial(in) && is_prime_binomial(in) == Primality::Prime;
  }
  return {ok, "I1 = " + r.embedding.ideal.to_string() + "; C1' ray " + to_string(r.c1->cone.rays().at(0)) +
                  ", C2' ray " + to_string(r.c2->cone.rays().at(0))};
}

Outcome gr36() {
  Ideal I = plucker_ideal(3, 6);
  TropicalVariety t = tropicalize(I, 1000000);
  std::size_t maxdim = 0;
  for (const auto* c : t.maximal_cones()) maxdim = std::max(maxdim, c->cone.dim());
  bool first = t.complete && t.lineality.size() == 6 && maxdim - 6 == 4 && t.maximal_cones().size() == 1035;
  Embedding e = extend_embedding(I, {parse_polynomial("p126*p345 + p124*p356", I.ring())});
  TropicalVariety t2 = tropicalize(e.ideal, 10000000);
  bool second = t2.complete && t2.lineality.size() == 7 && t2.f_vector == std::vector<std::size_t>{78, 692, 1790, 1337};
  std::ostringstream d;
  d << t.maximal_cones().size() << " maximal cones, lineality " << t.lineality.size() << "; new embedding f-vector";
  for (auto f : t2.f_vector) d << " " << f;
  d << ", lineality " << t2.lineality.size();
  return {first && second, d.str()};
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(bool long_run) {
  struct Entry {
    int id;
    const char* name;
    double limit;
    Check check;
    bool is_long;
  };
  const std::vector<Entry> entries{
      {1, "plucker relations and coordinates", 1, plucker, false},
      {2, "groebner fan of the five-term curve", 5, groebner_fan_fig1, false},
      {3, "tropicalization of x + xy + y", 1, toy_trop, false},
      {4, "quadric tropicalization and body", 5, quadric, false},
      {5, "degeneration family", 1, degeneration, false},
      {6, "hilbert function equals ehrhart polynomial", 5, hilbert_ehrhart, false},
      {7, "trop Gr(2,5) against tree counts", 600, gr25, false},
      {8, "wall crossing certificate on Gr(2,4)", 120, wall_gr24, false},
      {9, "valuation axioms and quasi-valuation witness", 60, valuations, false},
      {10, "re-embedding of the x + xy + y toy", 60, algorithm_toy, false},
      {11, "trop Gr(3,6) and its re-embedding", 0, gr36, true},
  };
  std::vector<CheckResult> out;
  for (const auto& e : entries) {
    CheckResult r;
    r.id = e.id;
    r.name = e.name;
    r.limit_seconds = e.limit;
    if (e.is_long && !long_run) {
      r.skipped = true;
      r.pass = true;
      r.detail = "long-running; enable with --long";
      out.push_back(r);
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = e.check();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += " [time limit exceeded]";
    }
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  char head[128];
  const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
  if (r.limit_seconds > 0)
    std::snprintf(head, sizeof head, "%s  %2d  %.3f s / %.0f s  ", status, r.id, r.seconds, r.limit_seconds);
  else
    std::snprintf(head, sizeof head, "%s  %2d  %.3f s  ", status, r.id, r.seconds);
  return std::string(head) + r.name + ": " + r.detail;
}

}  // namespace tropwall
