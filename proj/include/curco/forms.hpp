#ifndef CURCO_FORMS_HPP
#define CURCO_FORMS_HPP

#include <optional>

#include "curco/cochain.hpp"
#include "curco/lie.hpp"
#include "curco/linalg.hpp"

namespace curco {

/// Invariant symmetric bilinear forms of a Lie algebra, in sym pair
/// coordinates (values on basis pairs i <= j).
struct InvariantForms {
  size_t n = 0;                 // dim of the algebra
  Subspace invariants{0};       // solutions of k([x,y],z) + k(y,[x,z]) = 0
  Subspace quotient_forms{0};   // forms killing k x k'; always inside invariants
};
InvariantForms sym_invariant_forms(const LieAlgebra& l);

/// Gram matrix of a form given in sym pair coordinates.
Mat gram_of(size_t n, std::span<const Rat> sym_coords);
Vec sym_coords_of_gram(const Mat& gram);
bool is_invariant_form(const LieAlgebra& l, const Mat& gram);

/// 3-cochain k([x,y],z) of an invariant form; checks the invariance
/// precondition, that the full trilinear extension is alternating, and
/// closedness. Coordinates over wedge triples.
Vec koszul_cochain(const LieAlgebra& l, std::span<const Rat> sym_coords);

struct ExactFormsReport {
  Subspace exact_forms{0};      // forms whose Koszul cochain is a coboundary
  Subspace z3_image{0};         // image of the Koszul map inside Z^3
  Subspace b3_meet{0};          // B^3 intersected with that image
  size_t descent_image_dim = 0; // dim of the induced map into H^3
  size_t dim_h2 = 0, dim_h1_coad = 0;
  bool kernel_is_quotient_forms = false;  // ker of the Koszul map = forms on l/l'
  bool dim_identity_ok = false;           // dim exact = dim H^1(l,l*) - dim H^2(l)
};
ExactFormsReport exact_forms(const LieAlgebra& l);

struct CentroidReport {
  size_t dim_cent = 0;      // endomorphisms commuting with every ad x
  size_t dim_cent0 = 0;     // those killing l' with image in the center
  size_t dim_cent_red = 0;  // quotient dimension
  bool cent0_inside_cent = false;
  // present only when a nondegenerate invariant form was supplied
  struct Quadratic {
    size_t dim_sym_part = 0;   // fixed points of the transpose on the centroid
    size_t dim_sym_part0 = 0;  // same inside cent0
    bool sym_part_matches_invariants = false;  // dim sym part = dim invariant forms
    bool red_matches_koszul_image = false;     // dim cent_red = dim of Koszul image
  };
  std::optional<Quadratic> quadratic;
};
/// kappa0, when given, must be a nondegenerate invariant symmetric Gram
/// matrix; throws std::invalid_argument otherwise.
CentroidReport centroid(const LieAlgebra& l, const std::optional<Mat>& kappa0 = std::nullopt);

struct RadicalProbeReport {
  size_t common_radical_dim = 0;
  size_t best_rank = 0;
  Vec best_form;  // sym coordinates of a maximal-rank form found by the scan
  bool radical_matches_common = false;
  Subspace common_radical{0};
};
/// Scans the invariant basis and small integer combinations (coefficients in
/// {0,+-1,+-2}, up to three basis forms) for a maximal-rank form and compares
/// its radical with the common radical. Exploratory; no claim is asserted.
RadicalProbeReport radical_probe(const LieAlgebra& l);

struct TransferReport {
  size_t dim_h2 = 0, dim_h1_coad = 0, dim_inv = 0, dim_h3 = 0, dim_h2_coad = 0, dim_h1_sym = 0;
  // the five maps descended to cohomology coordinates, in sequence order
  Mat head, symmetrized, koszul, curried, tail;
  bool head_injective = false;   // the map out of H^2 is injective
  bool exact_at_h1_coad = false;
  bool exact_at_invariants = false;
  bool exact_at_h3 = false;
  bool exact_at_h2_coad = false;
  bool cochain_composites_vanish = false;  // both symmetrized-after-curried composites
  bool ok() const {
    return head_injective && exact_at_h1_coad && exact_at_invariants && exact_at_h3 &&
           exact_at_h2_coad && cochain_composites_vanish;
  }
};
/// Six-term sequence through H^2, H^1(l,l*), invariant forms, H^3, H^2(l,l*),
/// H^1(l, sym forms); verifies exactness at the four interior nodes.
TransferReport transfer_sequence(const LieAlgebra& l);

}  // namespace curco

#endif
