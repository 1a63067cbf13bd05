#pragma once

#include <optional>
#include <vector>

#include "tropwall/nok.hpp"
#include "tropwall/tropical.hpp"

namespace tropwall {

/// I' = I + <y_j h^{e_j - 1} - f_j>. The original variables stay first;
/// every extension appends its y_j and, when some f_j needed it, one
/// homogenizer h.
struct Embedding {
  Ideal ideal;
  std::vector<Polynomial> adjoined;  // each f_j in the ring it was adjoined to
  std::size_t original = 0;
  std::vector<std::size_t> y_vars;
  std::vector<std::size_t> h_vars;

  /// Coordinates of the original embedding.
  std::vector<std::size_t> keep() const;
  /// Variables that were added.
  std::vector<std::size_t> added() const;
};

/// Identity embedding of I.
Embedding trivial_embedding(const Ideal& I);
/// Adjoins one new variable per polynomial. For a homogeneous ideal a
/// polynomial of degree e > 1 is balanced with h^{e-1}.
Embedding extend_embedding(const Embedding& base, const std::vector<Polynomial>& f);
Embedding extend_embedding(const Ideal& I, const std::vector<Polynomial>& f);

/// Eliminating the added variables gives back I.
bool elimination_recovers(const Embedding& e, const Ideal& I);

/// Binomials of a minimal generating set of the toric associated prime of
/// in_C(I) that are missing from in_C(I). Throws std::invalid_argument when
/// C does not have multiplicity one.
std::vector<Polynomial> missing_binomials(const GroebnerCone& C);

/// The image of `lifted` under forgetting all but the first
/// target.ambient() coordinates meets the relative interior of `target`.
bool project_cone_check(const Cone& lifted, const Cone& target);

struct ReembedResult {
  bool found = false;
  Embedding embedding;
  std::optional<TropicalVariety> trop;  // trop of embedding.ideal when computed
  std::optional<GroebnerCone> cone;     // prime cone projecting onto C
  int depth = 0;                        // number of extensions used
};

/// Extends the embedding until a prime maximal cone projects onto C. When no
/// prime cone does, the search continues from the non-prime cones of
/// multiplicity one that project onto C, at most `depth` extensions in all.
ReembedResult algorithm1(const Ideal& I, const GroebnerCone& C, int depth = 2, std::size_t budget = 10000);

struct AdjacentResult {
  bool found = false;
  Embedding embedding;
  std::optional<TropicalVariety> trop;
  std::optional<GroebnerCone> c1, c2;  // c1 projects onto C1, c2 onto C2
  int depth = 0;
};

/// C1 non-prime of multiplicity one, C2 prime and adjacent to C1. Searches
/// an embedding with adjacent prime cones C1', C2' projecting onto C1, C2.
AdjacentResult algorithm2(const Ideal& I, const GroebnerCone& C1, const GroebnerCone& C2, int depth = 2,
                          std::size_t budget = 10000);

struct DehomogenizedBody {
  WeightMatrix M;
  Polytope body;
};

/// Replaces the y and h columns of M by half their sum. Needs e_y - e_h in
/// the lineality space.
DehomogenizedBody dehomogenize_body(const WeightMatrix& M, std::size_t y_col, std::size_t h_col,
                                    const Matrix& lineality);

}  // namespace tropwall
