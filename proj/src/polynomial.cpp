#include "tropwall/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace tropwall {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, bool laurent) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name: " + names[i]);
  auto r = std::make_shared<Ring>();
  r->names = std::move(names);
  r->laurent = laurent;
  return r;
}

RingPtr with_laurent(const RingPtr& r, bool laurent) { return make_ring(r->names, laurent); }

RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra) {
  auto names = r->names;
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(std::move(names), r->laurent);
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (sgn(constant) != 0) terms_.emplace(Monomial(ring_->arity(), 0), constant);
}

Polynomial::Polynomial(RingPtr ring, Terms terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Monomial m(ring->arity(), 0);
  m.at(i) = 1;
  return monomial(std::move(ring), m);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != ring_->arity()) throw std::invalid_argument("monomial arity does not match ring");
  if (!ring_->laurent)
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative exponent outside a Laurent ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw RingMismatch();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  Monomial m(ring_->arity());
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = a[i] + b[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(ring_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return *ring_ == *o.ring_ && terms_ == o.terms_;
}

int Polynomial::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw std::invalid_argument("homogeneity of the zero polynomial");
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::substitute_monomial_scaling(const std::vector<Integer>& w,
                                                   const RingPtr& extended) const {
  const std::size_t n = ring_->arity();
  if (w.size() != n) throw std::invalid_argument("weight length does not match ring");
  if (extended->arity() != n + 1) throw std::invalid_argument("extended ring must add one variable");
  for (std::size_t i = 0; i < n; ++i)
    if (extended->names[i] != ring_->names[i]) throw RingMismatch();
  Polynomial r(extended);
  for (const auto& [m, c] : terms_) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * m[i];
    Monomial e(m);
    e.push_back(static_cast<int>(to_int64(s)));
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::evaluate(std::size_t var, const Rational& value) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial e(m);
    Rational f = c;
    int k = e.at(var);
    if (k != 0 && sgn(value) == 0) {
      if (k < 0) throw std::domain_error("evaluating a negative power at zero");
      continue;
    }
    Rational p = 1;
    for (int i = 0; i < std::abs(k); ++i) p *= value;
    f *= (k < 0) ? Rational(1 / p) : p;
    e[var] = 0;
    r.add_term(e, f);
  }
  return r;
}

Polynomial Polynomial::rename(const RingPtr& target, const std::vector<std::size_t>& map) const {
  if (map.size() != ring_->arity()) throw std::invalid_argument("rename map has wrong length");
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial e(target->arity(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) e.at(map[i]) += m[i];
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::shift(const Monomial& s) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial e(m);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += s[i];
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::strip_monomial_content() const {
  if (terms_.empty()) return *this;
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
  for (auto& x : g) x = -x;
  // Shifting by a non-positive vector never leaves the ring.
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial e(m);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += g[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(1 / terms_.begin()->second);
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (constant) {
      out += tropwall::to_string(a);
    } else {
      if (a != 1) out += tropwall::to_string(a) + "*";
      out += tropwall::to_string(m, *ring_);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += term().scale(sign);
    skip();
    while (pos_ < s_.size()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      result += term().scale(c == '-' ? -1 : 1);
      skip();
    }
    return result;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial term() {
    Rational coeff = 1;
    Monomial m(ring_->arity(), 0);
    bool have_coeff = false, have_factor = false;
    if (is_digit(peek())) {
      coeff = Rational(integer());
      if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        Integer d = integer();
        if (d == 0) throw ParseError("zero denominator", at);
        coeff = Rational(coeff.get_num(), d);
        coeff.canonicalize();
      }
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_alpha(peek())) throw ParseError("expected variable after '*'", pos_);
      }
    }
    while (is_alpha(peek())) {
      factor(m);
      have_factor = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_alpha(peek())) throw ParseError("expected variable after '*'", pos_);
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor) throw ParseError("expected term", pos_);
    return Polynomial::monomial(ring_, m, coeff);
  }

  void factor(Monomial& m) {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (is_alpha(s_[pos_]) || is_digit(s_[pos_]) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) throw UnknownVariable(name, start);
    long long e = 1;
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t at = pos_;
      Integer z = integer();
      if (!z.fits_sint_p()) throw ParseError("exponent too large", at);
      e = neg ? -z.get_si() : z.get_si();
      if (neg && !ring_->laurent) throw ParseError("negative exponent outside a Laurent ring", at);
    }
    m[*idx] += static_cast<int>(e);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';' || text[i] == '\n') {
      std::string_view piece = text.substr(start, i - start);
      bool blank = std::all_of(piece.begin(), piece.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (!blank) {
        try {
          out.push_back(parse_polynomial(piece, ring));
        } catch (const UnknownVariable& e) {
          throw UnknownVariable(e.name(), start + e.offset());
        } catch (const ParseError& e) {
          throw ParseError("parse error in generator", start + e.offset());
        }
      }
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    if (!alpha) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name(text.substr(start, i - start));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
  std::lock_guard<std::mutex> lock(o.mu_);
  cache_ = o.cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
  if (this == &o) return *this;
  std::scoped_lock lock(mu_, o.mu_);
  ring_ = o.ring_;
  gens_ = o.gens_;
  cache_ = o.cache_;
  return *this;
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.homogeneous_degree()) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ">";
}

std::shared_ptr<const std::vector<Polynomial>> Ideal::cached(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  return it == cache_.end() ? nullptr : it->second;
}

void Ideal::store(const std::string& key, std::vector<Polynomial> basis) const {
  auto ptr = std::make_shared<const std::vector<Polynomial>>(std::move(basis));
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(key, std::move(ptr));
}

}  // namespace tropwall
