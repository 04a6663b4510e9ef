#ifndef CURCO_LINALG_HPP
#define CURCO_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curco/rational.hpp"

namespace curco {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major. Acts on column vectors: w = M v,
/// so the domain has dim cols() and the codomain dim rows().
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;
  void set_row(size_t r, const Vec& v);
  void set_col(size_t c, const Vec& v);

  Vec apply(std::span<const Rat> v) const;  // M v
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  Mat transposed() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Matrix with named domain/codomain bases. Composition is defined only when
/// the inner labels agree; empty labels match anything.
struct LinearMap {
  Mat mat;
  std::string domain;
  std::string codomain;
};

/// g after f; throws std::invalid_argument when f.codomain != g.domain.
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Subspace of Q^ambient held as a canonical reduced-row-echelon basis of
/// full row rank. Two subspaces are equal iff their representations are
/// identical, so operator== decides subspace equality.
class Subspace {
 public:
  explicit Subspace(size_t ambient) : ambient_(ambient) {}
  static Subspace zero(size_t ambient) { return Subspace(ambient); }
  static Subspace full(size_t ambient);
  /// Canonical RREF basis of the span; throws std::invalid_argument on a
  /// row-length mismatch.
  static Subspace span(const std::vector<Vec>& vectors, size_t ambient);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along pivot coordinates; the
  /// residue is zero iff v is contained in the subspace.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the echelon basis (the pivot coordinates of v).
  /// Only meaningful when contains(v).
  Vec coords_of(std::span<const Rat> v) const;

  /// Inserts a vector, restoring canonical RREF. Returns true if dim grew.
  bool insert(Vec v);

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  size_t ambient_;
  std::vector<Vec> rows_;      // canonical RREF, ordered by pivot column
  std::vector<size_t> pivots_;
};

/// Kernel {v : Mv = 0} as a subspace of Q^cols.
Subspace kernel(const Mat& m);
/// Column space of M as a subspace of Q^rows.
Subspace image(const Mat& m);
inline Subspace kernel(const LinearMap& m) { return kernel(m.mat); }
inline Subspace image(const LinearMap& m) { return image(m.mat); }
Subspace meet(const Subspace& s, const Subspace& t);
Subspace join(const Subspace& s, const Subspace& t);

/// Surjection Q^ambient -> Q^(ambient - dim s) with kernel exactly s,
/// built by reading off the non-pivot coordinates after reduction.
Mat quotient_map(size_t ambient, const Subspace& s);

size_t rank(const Mat& m);
Rat det(const Mat& m);                 // throws std::invalid_argument unless square
std::optional<Mat> inverse(const Mat& m);
/// One solution of Ax = b (free coordinates set to zero), or nullopt.
std::optional<Vec> solve(const Mat& a, std::span<const Rat> b);

/// Presentation of a quotient z/b of nested subspaces b <= z of Q^ambient.
/// `reps` are representative vectors completing b to z (chosen greedily from
/// the RREF basis of z, hence deterministic); `proj` is a total linear map
/// Q^ambient -> Q^dim with proj(b) = 0 and proj(reps[i]) = e_i, so classes of
/// vectors in z are read off by applying proj.
struct QuotientView {
  size_t dim = 0;
  std::vector<Vec> reps;
  Mat proj;
};

/// Requires b <= z (throws std::invalid_argument otherwise).
QuotientView quotient_view(const Subspace& z, const Subspace& b);

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
void add_scaled(Vec& target, const Rat& c, const Vec& v);  // target += c v
bool is_zero_vec(std::span<const Rat> v);

}  // namespace curco

#endif
