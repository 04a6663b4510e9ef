#ifndef CURCO_COMM_HPP
#define CURCO_COMM_HPP

#include <string>
#include <vector>

#include "curco/indexing.hpp"
#include "curco/lie.hpp"
#include "curco/linalg.hpp"

namespace curco {

/// Sparse product table entry: e_i * e_j = sum coeffs[k] e_k, given for i <= j.
struct ProductEntry {
  size_t i = 0, j = 0;
  std::vector<std::pair<size_t, Rat>> coeffs;
};

/// Finite-dimensional unital commutative associative algebra over Q by
/// structure constants. Construction validates associativity on all basis
/// triples and the unit law; commutativity holds by table symmetry.
class CommAlgebra {
 public:
  CommAlgebra() = default;
  static CommAlgebra make(size_t dim, std::vector<std::string> basis_names, Vec unit,
                          const std::vector<ProductEntry>& entries);

  size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& unit() const { return unit_; }
  const Vec& product(size_t i, size_t j) const { return table_[i * dim_ + j]; }
  Vec product(std::span<const Rat> a, std::span<const Rat> b) const;
  /// left multiplication matrix of e_i
  Mat mult(size_t i) const;

 private:
  size_t dim_ = 0;
  std::vector<std::string> names_;
  Vec unit_;
  std::vector<Vec> table_;
};

/// Kernel of the multiplication map on A (x) A and its square, the ideal of
/// the diagonal. The square is spanned by
/// a(x)bc - ab(x)c - ac(x)b + abc(x)1 over all basis triples.
struct DiagonalIdeal {
  Subspace ideal{0};   // dim n^2 - n
  Subspace square{0};
};
DiagonalIdeal diagonal_ideal(const CommAlgebra& a);

/// Universal differential module realized as ideal/square, with the
/// derivation d(a) = [1(x)a - a(x)1] and the induced A-action.
class KaehlerModule {
 public:
  explicit KaehlerModule(const CommAlgebra& a);
  size_t dim() const { return dim_; }
  const Mat& d() const { return d_; }            // A -> module
  const Mat& action(size_t i) const { return action_[i]; }
  Vec act(std::span<const Rat> a, std::span<const Rat> w) const;
  /// class of a tensor-square vector lying in the ideal
  Vec class_of(std::span<const Rat> tensor_vec) const;
  const DiagonalIdeal& ideal() const { return ideal_; }
  /// image d(A), the subspace of exact differentials
  Subspace exact_part() const;

 private:
  size_t dim_ = 0;
  Mat d_;
  std::vector<Mat> action_;
  DiagonalIdeal ideal_;
  Mat class_proj_;  // total map on tensor coordinates, kills the square
};

struct FirstHochschild {
  Subspace relations{0};  // span of ab(x)c + ac(x)b - a(x)bc
  QuotientView quotient;  // (A (x) A)/relations
  Mat iso_to_kaehler;     // induced by a(x)b -> a d(b); certified bijective
};
/// First Hochschild homology with the certified comparison isomorphism onto
/// the differential module.
FirstHochschild first_hochschild(const CommAlgebra& a, const KaehlerModule& k);

/// Spans in L^2(A) of ab^c + bc^a + ca^b and of the same minus abc^1.
struct CyclicSpans {
  Subspace full{0};     // annihilator of cyclic 1-cocycles
  Subspace reduced{0};  // kernel of the wedge differential below
};
CyclicSpans cyclic_spans(const CommAlgebra& a);

/// L^2(A) -> module, a^b -> a d(b) - b d(a). Certified surjective with
/// kernel equal to the reduced cyclic span.
Mat wedge_differential(const CommAlgebra& a, const KaehlerModule& k);

/// Kernel of multiplication on symmetric pair coordinates.
Subspace sym_mult_kernel(const CommAlgebra& a);

struct CyclicHomology {
  size_t dim = 0;                 // dim of module/d(A), equal to dim L^2/full span
  QuotientView by_exact;          // module coordinates mod d(A)
  bool dims_agree = false;        // both computations matched
  bool wedge_iso_ok = false;      // [a^b] -> [a d(b)] is an isomorphism
};
CyclicHomology first_cyclic_homology(const CommAlgebra& a, const KaehlerModule& k);

/// Embeddings of the abstract wedge/sym coordinates into tensor coordinates
/// (these carry the 1/2 normalization of the tensor conventions).
Mat wedge_embed_tensor(size_t n);  // L^2 -> A (x) A
Mat sym_embed_tensor(size_t n);    // S^2 -> A (x) A

}  // namespace curco

#endif
