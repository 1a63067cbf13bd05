#pragma once

#include <vector>

#include "tropwall/rational.hpp"

namespace tropwall {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

IntVector to_int_vector(const Vector& v);  // throws if some entry is not integral
Vector to_vector(const IntVector& v);

/// Row Hermite normal form of the lattice spanned by the rows: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Z-basis of {u in Z^n : A u = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t n);

/// (L tensor Q) intersected with Z^n, as a Z-basis.
IntMatrix saturation(const IntMatrix& rows, std::size_t n);

bool is_saturated(const IntMatrix& rows, std::size_t n);

/// Sublattice of Z^n given by generators, stored in Hermite form.
class Lattice {
 public:
  Lattice(const IntMatrix& generators, std::size_t n);
  bool contains(const IntVector& v) const;
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }

 private:
  std::size_t n_;
  IntMatrix basis_;
};

}  // namespace tropwall
