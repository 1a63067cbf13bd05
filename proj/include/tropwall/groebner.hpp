#pragma once

#include <vector>

#include "tropwall/order.hpp"
#include "tropwall/polynomial.hpp"

namespace tropwall {

/// Reduced, monic Gröbner basis sorted by leading monomial (descending).
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;

  std::vector<Monomial> leading_monomials() const;
};

/// Largest monomial of f under `order`; throws on zero.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order);

/// Reduced Gröbner basis. Non-homogeneous input requires a well-order.
/// Results are cached on the ideal under the order key.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GroebnerBasis buchberger(const Ideal& ideal, const OrderDescriptor& order);

/// Full reduction of f by a Gröbner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool contains(const Ideal& ideal, const Polynomial& f);
bool ideals_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

/// Smallest term of f under the order.
Polynomial initial_form_order(const Polynomial& f, const OrderDescriptor& order);
/// Sum of the terms of minimal w-weight.
Polynomial initial_form_weight(const Polynomial& f, const Vector& w);

/// in_w(I), generated by the initial forms of a Gröbner basis for a
/// w-refined order. Non-homogeneous ideals go through homogenization, so any
/// w is accepted.
Ideal initial_ideal(const Ideal& ideal, const Vector& w);
/// Monomial initial ideal for a term order.
Ideal initial_ideal(const Ideal& ideal, const OrderDescriptor& order);

/// Monomials of degree at most `degree_bound` outside in(I).
std::vector<Monomial> standard_monomials(const Ideal& ideal, const OrderDescriptor& order,
                                         int degree_bound);

/// I : f^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// I : (x1 ... xn)^infinity, one variable at a time.
Ideal saturate_by_variables(const Ideal& ideal);
bool contains_monomial(const Ideal& ideal);

/// Intersection of I with the subring in the variables not listed.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables);

/// Homogenization of the ideal with a new first variable named `name`.
Ideal homogenize(const Ideal& ideal, const std::string& name = "h_");
/// Sets the first variable to 1 and drops it.
Polynomial dehomogenize(const Polynomial& f, const RingPtr& target);

/// Family t^{-min} f(t^{w_1} x_1, ..., t^{w_n} x_n) over the ring extended
/// by `t`, built from a Gröbner basis compatible with w.
Ideal degeneration_family(const Ideal& ideal, const Vector& w, const std::string& parameter = "t");
/// Substitutes a value for the last variable and drops it.
Ideal evaluate_parameter(const Ideal& family, const Rational& value, const RingPtr& base);

enum class Primality { Prime, NotPrime, Unknown };
const char* to_string(Primality p);

/// Primality for binomial ideals over the complex numbers: prime iff the
/// ideal is saturated with respect to the coordinate monomials and the
/// exponent lattice of its binomials is saturated. Non-binomial input gives
/// Unknown, except for principal forms that visibly split.
Primality is_prime_binomial(const Ideal& ideal);

}  // namespace tropwall
