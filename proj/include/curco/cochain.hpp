#ifndef CURCO_COCHAIN_HPP
#define CURCO_COCHAIN_HPP

#include <optional>

#include "curco/indexing.hpp"
#include "curco/lie.hpp"
#include "curco/linalg.hpp"

namespace curco {

/// Indexed basis of C^p(l, a): (p-subset of the Lie basis, module coordinate),
/// subsets lexicographic, module index minor. dim = C(dim l, p) * dim a.
struct CochainBasis {
  CochainBasis(const LieAlgebra& l, size_t module_dim, size_t p);
  size_t p = 0;
  size_t module_dim = 0;
  Subsets subsets;
  size_t size() const { return subsets.size() * module_dim; }
  size_t index(size_t subset_idx, size_t module_idx) const { return subset_idx * module_dim + module_idx; }
};

/// Matrix of the Lie algebra differential C^p(l,a) -> C^{p+1}(l,a).
Mat ce_differential(const LieAlgebra& l, const KModule& a, size_t p);

struct Cohomology {
  size_t p = 0;
  size_t dim_c = 0, dim_z = 0, dim_b = 0, dim_h = 0;
  Subspace cocycles{0};
  Subspace coboundaries{0};
  /// representative cocycles completing B^p to Z^p, first-complement choice
  std::vector<Vec> reps;
  /// total map C^p -> Q^dim_h reading off the class of a cocycle
  Mat class_proj;
};

Cohomology cohomology(const LieAlgebra& l, const KModule& a, size_t p);

/// Boundary map on wedges: L^3(l) -> L^2(l),
/// x^y^z -> [x,y]^z + [y,z]^x + [z,x]^y. Its image is B_2(l).
Mat wedge_boundary(const LieAlgebra& l);
/// Bracket map L^2(l) -> l, x^y -> [x,y]. Its kernel is Z_2(l).
Mat wedge_bracket(const LieAlgebra& l);

struct Homology2 {
  Subspace cycles{0};      // Z_2
  Subspace boundaries{0};  // B_2
  Mat quotient;            // L^2(l) -> Q^(dim L^2 - dim B_2), kernel exactly B_2
  size_t dim_h2 = 0;       // dim Z_2 - dim B_2
};

/// Z_2, B_2 and the quotient presentation of H_2; certifies B_2 <= Z_2.
Homology2 second_homology(const LieAlgebra& l);

/// One solution x of d^p x = target in C^{p+1}(l,a), if target is exact.
std::optional<Vec> solve_primitive(const LieAlgebra& l, const KModule& a, size_t p,
                                   std::span<const Rat> target);

/// Currying injection C^{p+q}(l,a) -> C^p(l, C^q(l,a)) that feeds the first
/// p arguments to the outer cochain.
Mat curry_head(const LieAlgebra& l, const KModule& a, size_t p, size_t q);

/// Postcomposition with the differential of a on values:
/// C^p(l, C^q(l,a)) -> C^p(l, C^{q+1}(l,a)).
Mat value_differential(const LieAlgebra& l, const KModule& a, size_t p, size_t q);

/// Symmetrization C^1(l, l*) -> sym pair coordinates, w -> ((x,y) -> w(x)(y) + w(y)(x));
/// kills the coboundaries B^1(l, l*).
Mat symmetrize_map(const LieAlgebra& l);

}  // namespace curco

#endif
