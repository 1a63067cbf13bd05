#include "tropwall/reembed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

namespace {

// stem, stem1, stem2, ... (or stem<start>, ... when start > 0), first unused.
std::string fresh_name(const Ring& ring, const std::set<std::string>& taken, const std::string& stem, int start) {
  auto free = [&](const std::string& s) { return !ring.index_of(s) && !taken.count(s); };
  if (start <= 0 && free(stem)) return stem;
  for (int k = std::max(start, 1);; ++k)
    if (free(stem + std::to_string(k))) return stem + std::to_string(k);
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

std::vector<std::size_t> first(std::size_t n) { return identity_map(n); }

bool is_prime_maximal(const GroebnerCone& c) { return c.maximal && c.prime == Primality::Prime; }

bool has_multiplicity_one(const GroebnerCone& c) {
  return toric_associated_prime(c.initial).multiplicity_one == Certainty::Yes;
}

}  // namespace

std::vector<std::size_t> Embedding::keep() const { return first(original); }

std::vector<std::size_t> Embedding::added() const {
  std::vector<std::size_t> out;
  for (std::size_t i = original; i < ideal.ring()->arity(); ++i) out.push_back(i);
  return out;
}

Embedding trivial_embedding(const Ideal& I) { return Embedding{I, {}, I.ring()->arity(), {}, {}}; }

Embedding extend_embedding(const Embedding& base, const std::vector<Polynomial>& f) {
  if (f.empty()) return base;
  const Ideal& I = base.ideal;
  const Ring& ring = *I.ring();
  const bool graded = I.is_homogeneous();

  std::set<std::string> taken;
  std::vector<std::string> extra;
  std::vector<int> degrees;
  bool need_h = false;
  for (const auto& g : f) {
    if (g.ring()->names != ring.names) throw RingMismatch();
    int e = 1;
    if (graded) {
      auto hd = g.homogeneous_degree();
      if (!hd) throw std::invalid_argument("adjoined polynomial must be homogeneous");
      e = *hd;
      if (e < 1) throw std::invalid_argument("adjoined polynomial must have positive degree");
    }
    degrees.push_back(e);
    need_h = need_h || e > 1;
    std::string name = fresh_name(ring, taken, "y", static_cast<int>(base.y_vars.size()) + 1);
    taken.insert(name);
    extra.push_back(name);
  }
  if (need_h) extra.push_back(fresh_name(ring, taken, "h", -1));

  RingPtr R = extend_ring(I.ring(), extra);
  const auto map = identity_map(ring.arity());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.rename(R, map));
  Embedding out = base;
  const std::size_t n = ring.arity();
  for (std::size_t j = 0; j < f.size(); ++j) {
    Polynomial y = Polynomial::variable(R, n + j);
    if (degrees[j] > 1) y = y * Polynomial::variable(R, n + f.size()).pow(static_cast<unsigned>(degrees[j] - 1));
    gens.push_back(y - f[j].rename(R, map));
    out.y_vars.push_back(n + j);
    out.adjoined.push_back(f[j]);
  }
  if (need_h) out.h_vars.push_back(n + f.size());
  out.ideal = Ideal(R, gens);
  return out;
}

Embedding extend_embedding(const Ideal& I, const std::vector<Polynomial>& f) {
  return extend_embedding(trivial_embedding(I), f);
}

bool elimination_recovers(const Embedding& e, const Ideal& I) {
  Ideal target = clear_monomials(I);
  Ideal elim = eliminate(clear_monomials(e.ideal), e.added());
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(g.rename(target.ring(), identity_map(e.original)));
  return ideals_equal(Ideal(target.ring(), gens), target);
}

std::vector<Polynomial> missing_binomials(const GroebnerCone& C) {
  ToricPrime tp = toric_associated_prime(C.initial);
  if (tp.multiplicity_one != Certainty::Yes) throw std::invalid_argument("cone does not have multiplicity one");
  Ideal in = clear_monomials(C.initial);

  // Minimal generating set of the toric prime, smallest degrees first.
  std::vector<Polynomial> G = tp.ideal.generators();
  std::stable_sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  for (std::size_t i = G.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (j != i) others.push_back(G[j]);
    if (!others.empty() && contains(Ideal(tp.ideal.ring(), others), G[i])) G.erase(G.begin() + static_cast<long>(i));
  }
  std::vector<Polynomial> missing;
  for (const auto& g : G)
    if (!contains(in, g)) missing.push_back(g);
  return missing;
}

bool project_cone_check(const Cone& lifted, const Cone& target) {
  if (lifted.ambient() < target.ambient()) throw std::invalid_argument("cone dimensions are incompatible");
  return projection_meets_relint(lifted, first(target.ambient()), target);
}

namespace {

ReembedResult search1(const Embedding& E, const GroebnerCone& C, const Cone& target, int depth_left, int used,
                      std::size_t budget) {
  Embedding E1 = extend_embedding(E, missing_binomials(C));
  ReembedResult r{false, E1, std::nullopt, std::nullopt, used + 1};
  r.trop = tropicalize(E1.ideal, budget);
  for (const auto& D : r.trop->cones)
    if (is_prime_maximal(D) && project_cone_check(D.cone, target)) {
      r.found = true;
      r.cone = D;
      return r;
    }
  if (depth_left <= 1) return r;
  for (const auto& D : r.trop->cones) {
    if (!D.maximal || D.prime == Primality::Prime || !project_cone_check(D.cone, target) || !has_multiplicity_one(D))
      continue;
    ReembedResult deeper = search1(E1, D, target, depth_left - 1, used + 1, budget);
    if (deeper.found) return deeper;
  }
  return r;
}

AdjacentResult search2(const Embedding& E, const GroebnerCone& C1, const Cone& t1, const Cone& t2, int depth_left,
                       int used, std::size_t budget) {
  Embedding E1 = extend_embedding(E, missing_binomials(C1));
  AdjacentResult r{false, E1, std::nullopt, std::nullopt, std::nullopt, used + 1};
  r.trop = tropicalize(E1.ideal, budget);
  std::vector<const GroebnerCone*> primes;
  for (const auto& D : r.trop->cones)
    if (is_prime_maximal(D)) primes.push_back(&D);
  for (const auto* D1 : primes) {
    if (!project_cone_check(D1->cone, t1)) continue;
    for (const auto* D2 : primes)
      if (D2 != D1 && are_adjacent(D1->cone, D2->cone) && project_cone_check(D2->cone, t2)) {
        r.found = true;
        r.c1 = *D1;
        r.c2 = *D2;
        return r;
      }
  }
  if (depth_left <= 1) return r;
  for (const auto& D : r.trop->cones) {
    if (!D.maximal || D.prime == Primality::Prime || !project_cone_check(D.cone, t1) || !has_multiplicity_one(D))
      continue;
    AdjacentResult deeper = search2(E1, D, t1, t2, depth_left - 1, used + 1, budget);
    if (deeper.found) return deeper;
  }
  return r;
}

}  // namespace

ReembedResult algorithm1(const Ideal& I, const GroebnerCone& C, int depth, std::size_t budget) {
  if (!C.maximal) throw std::invalid_argument("cone must be maximal");
  if (C.prime == Primality::Prime) return ReembedResult{true, trivial_embedding(I), std::nullopt, C, 0};
  if (depth < 1) throw std::invalid_argument("depth budget must be positive");
  return search1(trivial_embedding(I), C, C.cone, depth, 0, budget);
}

AdjacentResult algorithm2(const Ideal& I, const GroebnerCone& C1, const GroebnerCone& C2, int depth,
                          std::size_t budget) {
  if (!C1.maximal || !C2.maximal) throw std::invalid_argument("cones must be maximal");
  if (C2.prime != Primality::Prime) throw std::invalid_argument("second cone must be prime");
  if (!are_adjacent(C1.cone, C2.cone)) throw std::invalid_argument("cones are not adjacent");
  if (C1.prime == Primality::Prime) return AdjacentResult{true, trivial_embedding(I), std::nullopt, C1, C2, 0};
  if (depth < 1) throw std::invalid_argument("depth budget must be positive");
  return search2(trivial_embedding(I), C1, C1.cone, C2.cone, depth, 0, budget);
}

DehomogenizedBody dehomogenize_body(const WeightMatrix& M, std::size_t y_col, std::size_t h_col,
                                    const Matrix& lineality) {
  const std::size_t n = M.ambient();
  if (y_col >= n || h_col >= n || y_col == h_col) throw std::invalid_argument("bad column indices");
  Vector e(n, Rational(0));
  e[y_col] = 1;
  e[h_col] = -1;
  if (!in_span(lineality, e)) throw std::invalid_argument("e_y - e_h is not in the lineality space");
  Matrix rows;
  for (const auto& row : M.rows) {
    Vector r;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == h_col) continue;
      r.push_back(j == y_col ? (row[y_col] + row[h_col]) / 2 : row[j]);
    }
    rows.push_back(r);
  }
  WeightMatrix out(rows);
  return {out, no_body(out)};
}

}  // namespace tropwall
