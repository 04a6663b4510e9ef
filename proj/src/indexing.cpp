#include "curco/indexing.hpp"

#include <array>
#include <stdexcept>

namespace curco {

WedgePairs::WedgePairs(size_t n) : n(n), idx_(n * n, size_t(-1)) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      idx_[i * n + j] = list.size();
      idx_[j * n + i] = list.size();
      list.emplace_back(i, j);
    }
}

SymPairs::SymPairs(size_t n) : n(n), idx_(n * n, size_t(-1)) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      idx_[i * n + j] = list.size();
      list.emplace_back(i, j);
    }
}

WedgeTriples::WedgeTriples(size_t n) : n(n) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        idx_[(uint64_t(1) << i) | (uint64_t(1) << j) | (uint64_t(1) << k)] = list.size();
        list.push_back({i, j, k});
      }
}

size_t WedgeTriples::index(size_t i, size_t j, size_t k) const {
  return idx_.at((uint64_t(1) << i) | (uint64_t(1) << j) | (uint64_t(1) << k));
}

Subsets::Subsets(size_t n, size_t p) : n(n), p(p) {
  if (n > 63)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " exceeds the 63 supported by subset indexing");
  if (p > n) return;
  std::vector<size_t> cur(p);
  for (size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    idx_[mask_of(cur)] = list.size();
    list.push_back(cur);
    // advance to the next subset in lexicographic order
    size_t i = p;
    while (i > 0) {
      --i;
      if (cur[i] != i + n - p) {
        ++cur[i];
        for (size_t j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
        i = size_t(-1);
        break;
      }
    }
    if (i == 0) break;
    if (p == 0) break;
  }
}

uint64_t Subsets::mask_of(const std::vector<size_t>& s) {
  uint64_t m = 0;
  for (size_t x : s) m |= uint64_t(1) << x;
  return m;
}

size_t binomial(size_t n, size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  size_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace curco
