#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropwall/groebner.hpp"
#include "tropwall/polyhedra.hpp"

namespace tropwall {

/// Closure of {v : in_v(I) = in_w(I)} together with its initial ideal.
struct GroebnerCone {
  Cone cone;
  Vector weight;  // relative interior point
  Ideal initial;
  bool monomial_free = false;
  Primality prime = Primality::Unknown;
  bool maximal = false;
};

/// Gröbner cone of w. Non-homogeneous ideals are handled through their
/// homogenization: the cone is the slice {v : (0, v) in C_(0,w)(I^h)}.
GroebnerCone groebner_cone(const Ideal& ideal, const Vector& w);

struct GroebnerFan {
  std::size_t ambient = 0;
  Matrix lineality;
  std::vector<GroebnerCone> cones;  // maximal cones, sorted by key
  bool complete = true;             // false when the cone budget ran out

  Fan fan() const;
};

/// Facet-flip search over the maximal cones.
GroebnerFan groebner_fan(const Ideal& ideal, std::size_t budget = 10000);

/// Maximal cones of the normal fan of the Newton polytope of f (minimum
/// convention): the Gröbner fan of a principal ideal, without Gröbner bases.
std::vector<Cone> principal_groebner_fan(const Polynomial& f);

struct TropicalVariety {
  std::size_t ambient = 0;
  Matrix lineality;
  /// Every monomial-free cone of the Gröbner fan, lineality cone first and
  /// then by dimension and key. `maximal` marks the facets of the complex.
  std::vector<GroebnerCone> cones;
  /// Number of cones of dimension lineality + 1, + 2, ...
  std::vector<std::size_t> f_vector;
  bool complete = true;

  std::vector<const GroebnerCone*> maximal_cones() const;
  Fan fan() const;
};

TropicalVariety tropicalize(const Ideal& ideal, std::size_t budget = 10000);

/// Largest subspace L with in_w(I) = I for all w in L.
Matrix lineality_space(const Ideal& ideal);

enum class Certainty { Yes, No, Unknown };
const char* to_string(Certainty c);

struct ToricPrime {
  Ideal ideal;
  Certainty multiplicity_one = Certainty::Unknown;
};

/// Saturation of in_C(I) by the product of the variables, accepted as the
/// toric associated prime when it is a prime binomial ideal.
ToricPrime toric_associated_prime(const Ideal& initial);

/// Polynomial-ring copy of a Laurent ideal with monomial factors removed
/// from the generators. Polynomial-ring input is returned unchanged.
Ideal clear_monomials(const Ideal& ideal);

}  // namespace tropwall
