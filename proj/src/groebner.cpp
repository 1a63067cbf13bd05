#include "tropwall/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropwall/lattice.hpp"

namespace tropwall {

namespace {

using Term = std::pair<Monomial, Rational>;
using Poly = std::vector<Term>;  // sorted descending in the active order

struct Desc {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using Work = std::map<Monomial, Rational, Desc>;

Poly to_poly(const Polynomial& f, const MonomialOrder& order) {
  Poly p(f.terms().begin(), f.terms().end());
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  return p;
}

Polynomial to_polynomial(const Poly& p, const RingPtr& ring) {
  Polynomial::Terms t;
  for (const auto& [m, c] : p) t.emplace(m, c);
  return Polynomial(ring, std::move(t));
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.front().second;
  for (auto& t : p) t.second *= inv;
}

// Full reduction of f by the elements of g (their leading terms first).
Poly reduce(const Poly& f, const std::vector<const Poly*>& g, const MonomialOrder& order) {
  Work work(Desc{&order});
  for (const auto& [m, c] : f) work.emplace(m, c);
  Poly rem;
  Monomial q(f.empty() ? 0 : f.front().first.size());
  while (!work.empty()) {
    auto it = work.begin();
    const Poly* red = nullptr;
    for (const Poly* h : g)
      if (divides(h->front().first, it->first)) {
        red = h;
        break;
      }
    if (!red) {
      rem.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    const Monomial m = it->first;
    Rational coef = it->second / red->front().second;
    work.erase(it);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = m[i] - red->front().first[i];
    for (std::size_t k = 1; k < red->size(); ++k) {
      Monomial e = (*red)[k].first;
      for (std::size_t i = 0; i < q.size(); ++i) e[i] += q[i];
      Rational d = coef * (*red)[k].second;
      auto [pos, inserted] = work.emplace(std::move(e), -d);
      if (!inserted) {
        pos->second -= d;
        if (sgn(pos->second) == 0) work.erase(pos);
      }
    }
  }
  return rem;
}

Poly s_polynomial(const Poly& a, const Poly& b, const MonomialOrder& order) {
  Monomial l = lcm(a.front().first, b.front().first);
  Work work(Desc{&order});
  auto add = [&](const Poly& p, const Rational& scale) {
    Monomial q(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) q[i] = l[i] - p.front().first[i];
    for (const auto& [m, c] : p) {
      Monomial e = m;
      for (std::size_t i = 0; i < l.size(); ++i) e[i] += q[i];
      Rational d = scale * c;
      auto [pos, inserted] = work.emplace(std::move(e), d);
      if (!inserted) {
        pos->second += d;
        if (sgn(pos->second) == 0) work.erase(pos);
      }
    }
  };
  add(a, 1 / a.front().second);
  add(b, -1 / b.front().second);
  return Poly(work.begin(), work.end());
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::vector<Poly> buchberger_core(std::vector<Poly> basis, const MonomialOrder& order) {
  std::vector<Poly> g;
  for (auto& p : basis) {
    if (p.empty()) continue;
    make_monic(p);
    g.push_back(std::move(p));
  }
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(g[i].front().first, g[j].front().first);
      pairs.push_back({i, j, l, total_degree(l)});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});

    if (coprime(g[p.i].front().first, g[p.j].front().first)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending.count(key(p.i, k)) || pending.count(key(p.j, k))) continue;
      if (divides(g[k].front().first, p.lcm)) chain = true;
    }
    if (chain) continue;

    Poly s = s_polynomial(g[p.i], g[p.j], order);
    std::vector<const Poly*> refs;
    for (const auto& h : g) refs.push_back(&h);
    Poly r = reduce(s, refs, order);
    if (r.empty()) continue;
    make_monic(r);
    g.push_back(std::move(r));
    add_pairs(g.size() - 1);
  }

  // Minimize, then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].front().first, g[i].front().first)) continue;
      if (g[j].front().first != g[i].front().first || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Poly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    Poly r = reduce(tail, others, order);
    r.insert(r.begin(), minimal[i].front());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return order.greater(a.front().first, b.front().first); });
  return reduced;
}

std::vector<Polynomial> polynomial_generators(const Ideal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(ideal.ring()->laurent ? g.strip_monomial_content() : g);
  return gens;
}

Vector neg(const Vector& w) {
  Vector r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = -w[i];
  return r;
}

std::string fresh_name(const Ring& ring, std::string name) {
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements) out.push_back(leading_monomial(g, order));
  return out;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.greater(m, *best)) best = &m;
  return *best;
}

Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  const std::size_t n = ideal.ring()->arity();
  for (const auto& r : order.rows())
    if (r.size() != n) throw std::invalid_argument("order rows do not match ring arity");
  const std::string key = order.key();
  if (auto hit = ideal.cached(key)) return {order, *hit};
  auto gens = polynomial_generators(ideal);
  if (!order.is_well_order(n)) {
    for (const auto& g : gens)
      if (!g.homogeneous_degree())
        throw std::invalid_argument("order is not a well-order and the ideal is not homogeneous; homogenize first");
  }
  std::vector<Poly> input;
  for (const auto& g : gens) input.push_back(to_poly(g, order));
  auto out = buchberger_core(std::move(input), order);
  std::vector<Polynomial> elements;
  for (const auto& p : out) elements.push_back(to_polynomial(p, ideal.ring()));
  ideal.store(key, elements);
  return {order, std::move(elements)};
}

GroebnerBasis buchberger(const Ideal& ideal, const OrderDescriptor& order) {
  return buchberger(ideal, order.to_order(ideal.ring()->arity()));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<Poly> g;
  for (const auto& e : gb.elements) g.push_back(to_poly(e, gb.order));
  std::vector<const Poly*> refs;
  for (const auto& p : g) refs.push_back(&p);
  return to_polynomial(reduce(to_poly(f, gb.order), refs, gb.order), f.ring());
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return true;
  auto gb = buchberger(ideal, MonomialOrder());
  Polynomial g = ideal.ring()->laurent ? f.strip_monomial_content() : f;
  return normal_form(g, gb).is_zero();
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) return false;
  return buchberger(a, MonomialOrder()).elements == buchberger(b, MonomialOrder()).elements;
}

bool is_unit_ideal(const Ideal& ideal) {
  for (const auto& g : buchberger(ideal, MonomialOrder()).elements)
    if (g.size() == 1 && total_degree(g.terms().begin()->first) == 0) return true;
  return false;
}

Polynomial initial_form_order(const Polynomial& f, const OrderDescriptor& order) {
  if (f.is_zero()) throw std::invalid_argument("initial form of zero");
  auto ord = order.to_order(f.ring()->arity());
  Monomial m = leading_monomial(f, ord);
  return Polynomial::monomial(f.ring(), m, f.coefficient(m));
}

Polynomial initial_form_weight(const Polynomial& f, const Vector& w) {
  if (f.is_zero()) throw std::invalid_argument("initial form of zero");
  if (w.size() != f.ring()->arity()) throw std::invalid_argument("weight length does not match ring");
  std::optional<Rational> best;
  for (const auto& [m, c] : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
    if (!best || s < *best) best = s;
  }
  Polynomial out(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
    if (s == *best) out.add_term(m, c);
  }
  return out;
}

Ideal homogenize(const Ideal& ideal, const std::string& name) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names{fresh_name(*ring, name)};
  names.insert(names.end(), ring->names.begin(), ring->names.end());
  RingPtr hr = make_ring(names, false);
  auto gb = buchberger(ideal, MonomialOrder(MonomialOrder::Base::GrevLex));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements) {
    int d = g.degree();
    Polynomial h(hr);
    for (const auto& [m, c] : g.terms()) {
      Monomial e{d - total_degree(m)};
      e.insert(e.end(), m.begin(), m.end());
      h.add_term(e, c);
    }
    gens.push_back(h);
  }
  return Ideal(hr, gens);
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target) {
  if (target->arity() + 1 != f.ring()->arity()) throw std::invalid_argument("dehomogenize: ring mismatch");
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) out.add_term(Monomial(m.begin() + 1, m.end()), c);
  return out;
}

Ideal initial_ideal(const Ideal& ideal, const Vector& w) {
  const std::size_t n = ideal.ring()->arity();
  if (w.size() != n) throw std::invalid_argument("weight length does not match ring");
  if (ideal.is_zero()) return ideal;
  std::vector<Polynomial> gens;
  if (ideal.is_homogeneous() && !ideal.ring()->laurent) {
    MonomialOrder ord(MonomialOrder::Base::GrevLex, {MonomialOrder::integer_row(neg(w))});
    for (const auto& g : buchberger(ideal, ord).elements) gens.push_back(initial_form_weight(g, w));
    return Ideal(ideal.ring(), gens);
  }
  Ideal h = homogenize(ideal);
  Vector hw{Rational(0)};
  hw.insert(hw.end(), w.begin(), w.end());
  MonomialOrder ord(MonomialOrder::Base::GrevLex, {MonomialOrder::integer_row(neg(hw))});
  for (const auto& g : buchberger(h, ord).elements)
    gens.push_back(dehomogenize(initial_form_weight(g, hw), ideal.ring()));
  return Ideal(ideal.ring(), gens);
}

Ideal initial_ideal(const Ideal& ideal, const OrderDescriptor& order) {
  std::vector<Polynomial> gens;
  for (const auto& g : buchberger(ideal, order).elements) gens.push_back(initial_form_order(g, order).monic());
  return Ideal(ideal.ring(), gens);
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, const OrderDescriptor& order, int degree_bound) {
  const std::size_t n = ideal.ring()->arity();
  std::vector<Monomial> lead;
  if (!ideal.is_zero()) lead = buchberger(ideal, order).leading_monomials();
  std::vector<Monomial> out;
  Monomial m(n, 0);
  // Enumerate exponent vectors of each degree in lex-descending order.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n || n == 0) {
      if (n) m[i] = left;
      bool standard = std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); });
      if (standard) out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  for (int d = 0; d <= degree_bound; ++d) {
    if (n == 0) {
      if (d == 0 && lead.empty()) out.push_back(m);
      continue;
    }
    rec(0, d);
  }
  return out;
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (ideal.is_zero()) return ideal;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  Polynomial fp = ring->laurent ? f.strip_monomial_content() : f;
  if (fp.size() == 1 && total_degree(fp.terms().begin()->first) == 0) return ideal;

  // Single variable on a homogeneous ideal: grevlex with that variable last.
  if (fp.size() == 1 && fp.degree() == 1 && ideal.is_homogeneous()) {
    const Monomial& m = fp.terms().begin()->first;
    std::size_t v = static_cast<std::size_t>(std::find(m.begin(), m.end(), 1) - m.begin());
    std::vector<long long> ones(n, 1), last(n, 0);
    last[v] = -1;
    MonomialOrder ord(MonomialOrder::Base::GrevLex, {ones, last});
    std::vector<Polynomial> gens;
    for (const auto& g : buchberger(ideal, ord).elements) {
      int k = 1 << 30;
      for (const auto& [e, c] : g.terms()) k = std::min(k, e[v]);
      Monomial s(n, 0);
      s[v] = -k;
      gens.push_back(g.shift(s));
    }
    return Ideal(ring, gens);
  }

  RingPtr ext = make_ring([&] {
    auto names = ring->names;
    names.push_back(fresh_name(*ring, "s_"));
    return names;
  }(), false);
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : polynomial_generators(ideal)) gens.push_back(g.rename(ext, map));
  gens.push_back(fp.rename(ext, map) * Polynomial::variable(ext, n) - Polynomial(ext, Rational(1)));
  std::vector<long long> srow(n + 1, 0);
  srow[n] = 1;
  MonomialOrder ord(MonomialOrder::Base::GrevLex, {srow});
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(Ideal(ext, gens), ord).elements) {
    bool has_s = false;
    for (const auto& [e, c] : g.terms()) has_s = has_s || e[n] != 0;
    if (has_s) continue;
    Polynomial r(ring);
    for (const auto& [e, c] : g.terms()) r.add_term(Monomial(e.begin(), e.end() - 1), c);
    out.push_back(r);
  }
  return Ideal(ring, out);
}

Ideal saturate_by_variables(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  if (ideal.is_homogeneous() && !ring->laurent) {
    Ideal cur = ideal;
    for (std::size_t i = 0; i < n; ++i) cur = saturate(cur, Polynomial::variable(ring, i));
    return cur;
  }
  return saturate(ideal, Polynomial::monomial(ring, Monomial(n, 1)));
}

bool contains_monomial(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  return is_unit_ideal(saturate_by_variables(ideal));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  std::vector<long long> row(n, 0);
  for (auto v : variables) row.at(v) = 1;
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!row[i]) {
      keep.push_back(i);
      names.push_back(ring->names[i]);
    }
  RingPtr sub = make_ring(names, ring->laurent);
  std::vector<Polynomial> out;
  MonomialOrder ord(MonomialOrder::Base::GrevLex, {row});
  for (const auto& g : buchberger(ideal, ord).elements) {
    bool uses = false;
    for (const auto& [e, c] : g.terms())
      for (auto v : variables) uses = uses || e[v] != 0;
    if (uses) continue;
    Polynomial r(sub);
    for (const auto& [e, c] : g.terms()) {
      Monomial m;
      for (auto k : keep) m.push_back(e[k]);
      r.add_term(m, c);
    }
    out.push_back(r);
  }
  return Ideal(sub, out);
}

Ideal degeneration_family(const Ideal& ideal, const Vector& w, const std::string& parameter) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  if (w.size() != n) throw std::invalid_argument("weight length does not match ring");
  if (is_zero(w)) return ideal;
  Integer l = denominator_lcm(w);
  std::vector<Integer> wi(n);
  for (std::size_t i = 0; i < n; ++i) wi[i] = Rational(w[i] * l).get_num();

  std::vector<Polynomial> basis;
  if (ideal.is_homogeneous() && !ring->laurent) {
    MonomialOrder ord(MonomialOrder::Base::GrevLex, {MonomialOrder::integer_row(neg(w))});
    basis = buchberger(ideal, ord).elements;
  } else {
    Ideal h = homogenize(ideal);
    Vector hw{Rational(0)};
    hw.insert(hw.end(), w.begin(), w.end());
    MonomialOrder ord(MonomialOrder::Base::GrevLex, {MonomialOrder::integer_row(neg(hw))});
    for (const auto& g : buchberger(h, ord).elements) basis.push_back(dehomogenize(g, ring));
  }

  RingPtr ext = make_ring([&] {
    auto names = ring->names;
    names.push_back(fresh_name(*ring, parameter));
    return names;
  }(), false);
  std::vector<Polynomial> gens;
  for (const auto& g : basis) {
    std::optional<Integer> lo;
    for (const auto& [m, c] : g.terms()) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += wi[i] * m[i];
      if (!lo || s < *lo) lo = s;
    }
    Polynomial f(ext);
    for (const auto& [m, c] : g.terms()) {
      Integer s = -*lo;
      for (std::size_t i = 0; i < n; ++i) s += wi[i] * m[i];
      Monomial e(m);
      e.push_back(static_cast<int>(to_int64(s)));
      f.add_term(e, c);
    }
    gens.push_back(f);
  }
  return Ideal(ext, gens);
}

Ideal evaluate_parameter(const Ideal& family, const Rational& value, const RingPtr& base) {
  const std::size_t n = base->arity();
  if (family.ring()->arity() == n) return family;
  if (family.ring()->arity() != n + 1) throw std::invalid_argument("family ring must add one parameter");
  std::vector<std::size_t> map(n + 1);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  map[n] = 0;  // exponent is zero after evaluation
  std::vector<Polynomial> gens;
  for (const auto& g : family.generators()) gens.push_back(g.evaluate(n, value).rename(base, map));
  return Ideal(base, gens);
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::Prime: return "prime";
    case Primality::NotPrime: return "not_prime";
    case Primality::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// A principal ideal <f> whose exponents lie on one line is x^b F(u, w) for
// a binary form F; over C it splits into deg F linear factors.
bool splits_as_binary_form(const Polynomial& f) {
  const auto& terms = f.terms();
  if (terms.size() < 3) return false;
  const Monomial& base = terms.begin()->first;
  Vector dir;
  for (const auto& [m, c] : terms) {
    Vector d(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) d[i] = m[i] - base[i];
    if (tropwall::is_zero(d)) continue;
    d = primitive(d);
    if (dir.empty()) {
      dir = d;
      continue;
    }
    if (d != dir && d != Rational(-1) * dir) return false;
  }
  return true;
}

}  // namespace

Primality is_prime_binomial(const Ideal& ideal) {
  if (ideal.is_zero()) return Primality::Prime;
  const std::size_t n = ideal.ring()->arity();
  auto gb = buchberger(ideal, MonomialOrder());
  for (const auto& g : gb.elements)
    if (g.size() == 1) return total_degree(g.terms().begin()->first) == 0 ? Primality::NotPrime : Primality::Unknown;
  if (contains_monomial(ideal)) return Primality::Unknown;
  Ideal sat = saturate_by_variables(ideal);
  if (!ideals_equal(ideal, sat)) return Primality::NotPrime;

  auto sgb = buchberger(sat, MonomialOrder());
  bool binomial = std::all_of(sgb.elements.begin(), sgb.elements.end(),
                              [](const Polynomial& g) { return g.size() == 2; });
  if (!binomial) {
    if (sgb.elements.size() == 1 && splits_as_binary_form(sgb.elements[0])) return Primality::NotPrime;
    return Primality::Unknown;
  }
  IntMatrix rows;
  for (const auto& g : sgb.elements) {
    auto it = g.terms().begin();
    const Monomial& a = it->first;
    const Monomial& b = std::next(it)->first;
    IntVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
    rows.push_back(d);
  }
  return is_saturated(rows, n) ? Primality::Prime : Primality::NotPrime;
}

}  // namespace tropwall
