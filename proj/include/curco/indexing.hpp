#ifndef CURCO_INDEXING_HPP
#define CURCO_INDEXING_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curco {

/// Basis of Lambda^2(Q^n): pairs i<j in lexicographic order. Coordinates are
/// abstract wedge coordinates; the 1/2 tensor normalization only enters where
/// wedges are embedded into tensor squares.
struct WedgePairs {
  explicit WedgePairs(size_t n);
  size_t n = 0;
  size_t size() const { return list.size(); }
  std::vector<std::pair<size_t, size_t>> list;
  /// index of e_i ^ e_j together with its sign; requires i != j
  size_t index(size_t i, size_t j) const { return idx_[i * n + j]; }
  int sign(size_t i, size_t j) const { return i < j ? 1 : -1; }

 private:
  std::vector<size_t> idx_;
};

/// Basis of S^2(Q^n): pairs i<=j in lexicographic order (e_i v e_j).
struct SymPairs {
  explicit SymPairs(size_t n);
  size_t n = 0;
  size_t size() const { return list.size(); }
  std::vector<std::pair<size_t, size_t>> list;
  size_t index(size_t i, size_t j) const { return i <= j ? idx_[i * n + j] : idx_[j * n + i]; }

 private:
  std::vector<size_t> idx_;
};

/// Basis of Lambda^3(Q^n): triples i<j<k in lexicographic order.
struct WedgeTriples {
  explicit WedgeTriples(size_t n);
  size_t n = 0;
  size_t size() const { return list.size(); }
  std::vector<std::array<size_t, 3>> list;
  size_t index(size_t i, size_t j, size_t k) const;  // requires i<j<k

 private:
  std::unordered_map<uint64_t, size_t> idx_;
};

/// All p-element subsets of {0..n-1} in lexicographic order, with O(1)
/// bitmask lookup. Requires n <= 63.
struct Subsets {
  Subsets(size_t n, size_t p);
  size_t n = 0, p = 0;
  size_t size() const { return list.size(); }
  std::vector<std::vector<size_t>> list;
  bool has_mask(uint64_t mask) const { return idx_.count(mask) != 0; }
  size_t index_of_mask(uint64_t mask) const { return idx_.at(mask); }
  static uint64_t mask_of(const std::vector<size_t>& s);

 private:
  std::unordered_map<uint64_t, size_t> idx_;
};

size_t binomial(size_t n, size_t k);

}  // namespace curco

#endif
