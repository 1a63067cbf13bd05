#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tropwall/rational.hpp"

namespace tropwall {

/// Exponent vector. Negative entries are only legal in a Laurent ring.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Variable names plus the Laurent flag.
struct Ring {
  std::vector<std::string> names;
  bool laurent = false;

  std::size_t arity() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const Ring& o) const { return names == o.names && laurent == o.laurent; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, bool laurent = false);
/// Same variables, Laurent flag switched.
RingPtr with_laurent(const RingPtr& r, bool laurent);
/// Ring with extra variables appended.
RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t offset)
      : ParseError("unknown variable '" + name + "'", offset), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

/// Graded-lex descending: higher degree first, then lexicographically larger.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Rational& constant);
  Polynomial(RingPtr ring, Terms terms);

  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial& operator+=(const Polynomial& o);
  void add_term(const Monomial& m, const Rational& c);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Maximal total degree; throws on zero.
  int degree() const;
  /// Degree when all terms share it.
  std::optional<int> homogeneous_degree() const;
  bool is_binomial() const { return terms_.size() == 2; }

  /// x_i -> t^{w_i} x_i in the ring extended by `t`. `w` must be integral.
  Polynomial substitute_monomial_scaling(const std::vector<Integer>& w, const RingPtr& extended) const;
  /// Fixes variable `var` to `value`; result stays in the same ring.
  Polynomial evaluate(std::size_t var, const Rational& value) const;
  /// Rewrites into another ring by sending variable i to `map[i]`.
  Polynomial rename(const RingPtr& target, const std::vector<std::size_t>& map) const;
  /// Multiply by x^m (m may be negative in a Laurent ring).
  Polynomial shift(const Monomial& m) const;
  /// Divides by the gcd monomial of all terms (clears monomial factors).
  Polynomial strip_monomial_content() const;
  /// Scales so the coefficient of the first printed term is 1.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  Terms terms_;
};

std::string to_string(const Monomial& m, const Ring& ring);

/// Parses one polynomial. Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff | [coeff ['*']] factor ('*' factor)*
///   factor := ident ['^' ['-'] int]
///   coeff  := int ['/' posint]
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma, semicolon, or newline separated list; blank entries skipped.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

/// Identifiers in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

/// Generators plus a cache of reduced Gröbner bases keyed by order text.
/// Cached values are immutable; readers never see a partial basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  Ideal(const Ideal& o);
  Ideal& operator=(const Ideal& o);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;
  std::string to_string() const;

  std::shared_ptr<const std::vector<Polynomial>> cached(const std::string& key) const;
  void store(const std::string& key, std::vector<Polynomial> basis) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> cache_;
};

}  // namespace tropwall
