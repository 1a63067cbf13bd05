#pragma once

#include <optional>
#include <vector>

#include "tropwall/nok.hpp"
#include "tropwall/tropical.hpp"

namespace tropwall {

/// Two adjacent prime cones, the wall between them and the three bodies.
/// M spans the wall; M1 and M2 append an interior point of C1 resp. C2.
struct WallSetup {
  std::optional<GroebnerCone> c1, c2;  // absent for matrix-only setups
  std::optional<Cone> common;
  WeightMatrix M, M1, M2;
  Polytope body, body1, body2;  // Delta in Q^{d-1}; Delta_1, Delta_2 in Q^d
  std::size_t d = 0;
};

/// Indices refer to trop.cones.
WallSetup wall_setup(const TropicalVariety& trop, std::size_t i1, std::size_t i2, const Ideal& I);
WallSetup wall_setup(const GroebnerCone& c1, const GroebnerCone& c2, const Ideal& I);
/// Setup from a wall matrix and the two extra rows, without cones.
WallSetup wall_setup_from_matrices(const WeightMatrix& M, const Vector& w1, const Vector& w2);

/// c + a.x on Q^{d-1}.
struct Affine {
  Vector a;
  Rational c;
  Rational operator()(const Vector& x) const { return c + dot(a, x); }
  bool operator==(const Affine& o) const { return a == o.a && c == o.c; }
  bool operator<(const Affine& o) const { return a != o.a ? a < o.a : c < o.c; }
};

struct Interval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
};

/// Range of the last coordinate over the fiber of `body` above xi.
/// Throws std::domain_error when xi is not in the projection.
Interval fiber_interval(const Polytope& body, const Vector& xi);

/// Affine pieces of the lower and upper envelope of a body over its
/// projection: phi = max(lower), psi = min(upper).
struct Envelope {
  std::vector<Affine> lower, upper;
};
Envelope envelope(const Polytope& body);

/// Region of Delta where each of phi1, psi1, phi2, psi2 is a single affine form.
struct EnvelopeCell {
  Polytope domain;
  Affine phi1, psi1, phi2, psi2;
};

struct KappaCertificate {
  Rational kappa;
  bool constant = true;  // psi2 - phi2 = kappa (psi1 - phi1) at every cell vertex
  std::vector<EnvelopeCell> cells;
  Matrix vertices;  // union of the cell vertices, sorted
};

/// Full-dimensional cells of the common refinement of the envelope domains.
std::vector<EnvelopeCell> envelope_cells(const WallSetup& s);

/// Fiber ratio at the barycenter of Delta, checked at every cell vertex.
/// Throws std::domain_error when all fibers are points.
KappaCertificate certify_kappa(const WallSetup& s);
/// kappa after a successful certificate; throws std::runtime_error otherwise.
Rational kappa(const WallSetup& s);

/// p(Delta_1) = p(Delta_2) = Delta as vertex sets.
bool projections_agree(const WallSetup& s);

/// S12(x,h) = (x, k(h - phi1(x)) + phi2(x)); reversed with 1/k when
/// `forward` is false.
Vector shift_map(const WallSetup& s, const Rational& k, const Vector& q, bool forward = true);
/// F12(x,h) = (x, -k(h - phi1(x)) + psi2(x)).
Vector flip_map(const WallSetup& s, const Rational& k, const Vector& q, bool forward = true);

}  // namespace tropwall
