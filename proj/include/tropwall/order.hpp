#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropwall/polynomial.hpp"

namespace tropwall {

/// Matrix term order in the usual "largest term leads" sense: monomials are
/// compared by the integer rows first, then by the base order. Lex treats
/// x1 as the largest variable; RevLex is lex on the reversed variable list.
class MonomialOrder {
 public:
  enum class Base { Lex, RevLex, GrLex, GrevLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Base base, std::vector<std::vector<long long>> rows = {})
      : base_(base), rows_(std::move(rows)) {}

  /// Positive when a is larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when every variable is larger than 1, so the order is a well-order
  /// on ordinary monomials.
  bool is_well_order(std::size_t n) const;

  Base base() const { return base_; }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  std::string key() const;

  /// Rows are scaled to integers; positive scaling does not change the order.
  static std::vector<long long> integer_row(const Vector& w);

 private:
  Base base_ = Base::GrevLex;
  std::vector<std::vector<long long>> rows_;
};

/// User-facing order description. Initial forms follow the minimum
/// convention: in(f) is the smallest term of f. A weight w selects the terms
/// of minimal w-degree and the tiebreak resolves the rest.
struct OrderDescriptor {
  enum class Kind { Lex, RevLex, GrLex, GrevLex, Weight };

  Kind kind = Kind::GrevLex;
  std::optional<Vector> weight;
  MonomialOrder::Base tiebreak = MonomialOrder::Base::GrevLex;

  static OrderDescriptor lex() { return {Kind::Lex, std::nullopt, MonomialOrder::Base::Lex}; }
  static OrderDescriptor revlex() { return {Kind::RevLex, std::nullopt, MonomialOrder::Base::RevLex}; }
  static OrderDescriptor grlex() { return {Kind::GrLex, std::nullopt, MonomialOrder::Base::GrLex}; }
  static OrderDescriptor grevlex() { return {Kind::GrevLex, std::nullopt, MonomialOrder::Base::GrevLex}; }
  static OrderDescriptor weighted(Vector w, MonomialOrder::Base tiebreak = MonomialOrder::Base::GrevLex) {
    return {Kind::Weight, std::move(w), tiebreak};
  }

  /// Accepts lex | revlex | grlex | grevlex | w:[a,b,...]+<base>.
  static OrderDescriptor parse(const std::string& text);
  std::string to_string() const;

  /// The internal order whose leading term is the min-convention initial term.
  MonomialOrder to_order(std::size_t n) const;
};

}  // namespace tropwall
