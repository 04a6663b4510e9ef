#ifndef CURCO_LIE_HPP
#define CURCO_LIE_HPP

#include <map>
#include <string>
#include <vector>

#include "curco/linalg.hpp"

namespace curco {

/// Raised on invalid algebra input; the message carries the first violated
/// witness (pair or triple of basis indices).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse bracket table entry: [e_i, e_j] = sum coeffs[k] e_k, given for i < j.
struct BracketEntry {
  size_t i = 0, j = 0;
  std::vector<std::pair<size_t, Rat>> coeffs;
};

/// Finite-dimensional Lie algebra over Q by structure constants. Construction
/// validates antisymmetry of the input table and the Jacobi identity on all
/// basis triples; invalid tables never circulate.
class LieAlgebra {
 public:
  LieAlgebra() = default;  // the zero algebra
  static LieAlgebra make(size_t dim, std::vector<std::string> basis_names,
                         const std::vector<BracketEntry>& entries);

  size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  /// coefficient row of [e_i, e_j]
  const Vec& bracket(size_t i, size_t j) const { return table_[i * dim_ + j]; }
  Vec bracket(std::span<const Rat> x, std::span<const Rat> y) const;
  /// matrix of ad e_i
  Mat ad(size_t i) const;
  bool is_abelian() const;

 private:
  size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec> table_;  // full antisymmetric table, row (i,j) = [e_i,e_j]
};

Subspace derived_subalgebra(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);

/// Finite-dimensional module of a Lie algebra: one action matrix per Lie
/// basis element. Construction checks the homomorphism identity
/// rho([x,y]) = [rho(x), rho(y)] on all basis pairs.
class KModule {
 public:
  KModule(const LieAlgebra& l, std::vector<Mat> action);
  size_t dim() const { return dim_; }
  const Mat& action(size_t i) const { return action_[i]; }
  bool is_trivial() const { return trivial_; }

 private:
  size_t dim_ = 0;
  bool trivial_ = false;
  std::vector<Mat> action_;
};

KModule trivial_module(const LieAlgebra& l, size_t z_dim);
KModule adjoint_module(const LieAlgebra& l);
/// dual of the adjoint action: (x.f)(y) = -f([x,y])
KModule coadjoint_module(const LieAlgebra& l);
/// symmetric bilinear forms with (x.k)(y,z) = -k([x,y],z) - k(y,[x,z]);
/// coordinates are form values on pairs i<=j
KModule sym_forms_module(const LieAlgebra& l);
/// cochains C^q(l, a) with the natural action; used by the transfer sequence
KModule cochain_module(const LieAlgebra& l, const KModule& a, size_t q);

}  // namespace curco

#endif
