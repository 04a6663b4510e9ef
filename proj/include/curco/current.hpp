#ifndef CURCO_CURRENT_HPP
#define CURCO_CURRENT_HPP

#include <optional>
#include <string>

#include "curco/cochain.hpp"
#include "curco/comm.hpp"
#include "curco/forms.hpp"
#include "curco/lie.hpp"

namespace curco {

/// The current algebra g = A (x) k with its product basis (A-major), the
/// three-component decomposition of L^2(g) and the sections inverting it.
/// Construction certifies the decomposition is an isomorphism and that the
/// commutator algebra of g is A (x) k'.
class CurrentAlgebra {
 public:
  CurrentAlgebra(CommAlgebra a, LieAlgebra k);

  const CommAlgebra& scalars() const { return a_; }
  const LieAlgebra& fiber() const { return k_; }
  const LieAlgebra& algebra() const { return g_; }
  size_t flat(size_t ia, size_t ik) const { return ia * k_.dim() + ik; }

  const WedgePairs& wedge_g() const { return wedge_g_; }
  const WedgePairs& wedge_a() const { return wedge_a_; }
  const WedgePairs& wedge_k() const { return wedge_k_; }
  const SymPairs& sym_k() const { return sym_k_; }
  const SymPairs& sym_a() const { return sym_a_; }

  const Subspace& sym_kernel() const { return sym_kernel_; }      // I_A
  const Subspace& derived_fiber() const { return derived_k_; }    // k'
  const KaehlerModule& kaehler() const { return kaehler_; }
  const CyclicSpans& cyclic() const { return cyclic_; }
  const Mat& kaehler_wedge() const { return kaehler_wedge_; }     // L^2(A) -> module

  // component sizes: L^2(A)(x)S^2(k), A(x)L^2(k), I_A(x)L^2(k)
  size_t dim_c1() const { return wedge_a_.size() * sym_k_.size(); }
  size_t dim_c2() const { return a_.dim() * wedge_k_.size(); }
  size_t dim_c3() const { return sym_kernel_.dim() * wedge_k_.size(); }
  size_t c1_index(size_t pair_a, size_t sym_k_idx) const { return pair_a * sym_k_.size() + sym_k_idx; }
  size_t c2_index(size_t ia, size_t wedge_k_idx) const { return ia * wedge_k_.size() + wedge_k_idx; }
  size_t c3_index(size_t t, size_t wedge_k_idx) const { return t * wedge_k_.size() + wedge_k_idx; }

  const Mat& p1() const { return p1_; }
  const Mat& p2() const { return p2_; }
  const Mat& p3() const { return p3_; }
  const Mat& s1() const { return s1_; }
  const Mat& s2() const { return s2_; }
  const Mat& s3() const { return s3_; }

 private:
  CommAlgebra a_;
  LieAlgebra k_;
  LieAlgebra g_;
  WedgePairs wedge_g_, wedge_a_, wedge_k_;
  SymPairs sym_k_, sym_a_;
  Subspace sym_kernel_{0};
  Subspace derived_k_{0};
  KaehlerModule kaehler_;
  CyclicSpans cyclic_;
  Mat kaehler_wedge_;
  Mat p1_, p2_, p3_, s1_, s2_, s3_;
};

/// Z_2(g) computed both as the kernel of the bracket map and assembled from
/// the component description through the sections; certified equal.
Subspace cycles_decomposed(const CurrentAlgebra& cur);

/// B_2(g) from the brute-force wedge boundary and from the four generator
/// families; `families_match` reports whether the two spans agree.
struct BoundaryData {
  Subspace brute{0};
  Subspace families{0};
  bool families_match = false;
  Subspace cycles{0};  // certified Z_2(g)
};
BoundaryData boundary_data(const CurrentAlgebra& cur);

/// 2-cochain on g with values in Q^z_dim, stored by components.
struct CochainTriple {
  Mat f1, f2, f3;  // z_dim x dim_c1/c2/c3
  size_t z_dim() const { return f1.rows(); }
  static CochainTriple zero(const CurrentAlgebra& cur, size_t z_dim);
};
/// The assembled functional on L^2(g): f1 p1 + f2 p2 + f3 p3.
Mat assemble(const CurrentAlgebra& cur, const CochainTriple& f);
/// Extraction through the sections, inverse to assemble on any functional.
CochainTriple extract(const CurrentAlgebra& cur, const Mat& functional);

struct CocycleReport {
  bool invariance_ok = false;       // values of the first component are invariant forms
  bool reduced_cyclic_ok = false;   // first component kills the reduced cyclic span on k v k'
  bool coupling_ok = false;         // differential of the second component matches the Koszul term
  bool sym_kernel_ok = false;       // third component kills I_A on k x k'
  bool is_cocycle = false;
  std::string violated;  // first violated condition, one of "a","b","c","d", or empty
};
/// Evaluates the four component conditions and cross-checks the verdict
/// against vanishing on the brute-force boundaries; disagreement throws.
CocycleReport cocycle_check(const CurrentAlgebra& cur, const BoundaryData& bd, const CochainTriple& f);

struct SplitF1 {
  Mat f1_0;  // vanishes on g x g'
  Mat f1_1;  // invariant values, kills the reduced cyclic span
};
/// Decomposition of the first component of a cocycle; throws
/// std::invalid_argument on a non-cocycle.
SplitF1 split_invariant_part(const CurrentAlgebra& cur, const BoundaryData& bd, const CochainTriple& f);

struct CoboundaryReport {
  bool is_coboundary = false;
  std::optional<Mat> witness;  // z_dim x dim g, with f = -witness o bracket
  std::string obstruction;
};
CoboundaryReport coboundary_test(const CurrentAlgebra& cur, const CochainTriple& f);

struct CoupledReport {
  CochainTriple f;
  bool coupled = false;       // the first component alone is not a cocycle
  bool f1_alone_cocycle = false;
};
/// The two-term construction from an exact invariant form kappa (sym pair
/// coordinates) and a primitive eta with d eta = koszul(kappa); values in the
/// differential module of A. Throws std::invalid_argument when the
/// preconditions fail.
CoupledReport coupled_construct(const CurrentAlgebra& cur, const BoundaryData& bd,
                                std::span<const Rat> kappa, std::span<const Rat> eta);

/// Whether g admits coupled cocycles: d_A nonzero and some invariant form
/// with a nonzero exact Koszul cochain.
struct CoupledExistence {
  bool differential_nonzero = false;
  bool exact_form_with_nonzero_koszul = false;
  bool possible() const { return differential_nonzero && exact_form_with_nonzero_koszul; }
};
CoupledExistence coupled_existence(const CurrentAlgebra& cur);

struct H2SequenceReport {
  size_t dim_h2_brute = 0;
  size_t term_pullback = 0;   // classes vanishing on g x g', both outer components
  size_t term_fiberwise = 0;  // Lin(A, H^2(k))
  size_t term_pair = 0;       // maps of pairs (module, exact part) -> (Koszul image, its boundary part)
  bool dims_match = false;
  bool head_injective = false;
  bool tail_kills_head = false;
  bool tail_rank_ok = false;
  bool kernel_equals_head_image = false;
  bool memberships_ok = false;
  bool exact() const {
    return dims_match && head_injective && tail_kills_head && tail_rank_ok &&
           kernel_equals_head_image && memberships_ok;
  }
};
H2SequenceReport h2_sequence(const CurrentAlgebra& cur);

struct ZusmanovichReport {
  size_t fiber_h2 = 0, coinvariants = 0, cyclic_dim = 0, sym_kernel_dim = 0, cyclic_full_dim = 0;
  /// sum of the four splitting factors alone
  size_t four_factor_sum = 0;
  /// count of coupled classes: dim of the exact differentials times the
  /// boundary part of the Koszul image. The four factors miss exactly these.
  size_t coupled_correction = 0;
  size_t predicted = 0;  // four_factor_sum + coupled_correction
  size_t brute = 0;
  bool match = false;
};
/// Independent dimension prediction for H_2(g) cross-checked against the
/// brute-force computation.
ZusmanovichReport zusmanovich(const CurrentAlgebra& cur);

struct UniversalCocycle {
  Mat map;  // dim H_2(g) x dim L^2(g)
  size_t dim_h2 = 0;
  bool kills_boundaries = false;
  bool classes_span = false;
};
UniversalCocycle universal_cocycle(const CurrentAlgebra& cur, const BoundaryData& bd);

/// Projection of the ambient space onto a subspace along the greedy standard
/// completion; restricts to the identity on the subspace.
Mat projection_onto(const Subspace& s);

}  // namespace curco

#endif
