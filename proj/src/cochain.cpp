#include "curco/cochain.hpp"

#include <algorithm>

namespace curco {

namespace {

// Position where m sorts into the increasing sequence rest; nullopt if m is
// already present (wedge with a repeated factor vanishes).
std::optional<size_t> insert_pos(const std::vector<size_t>& rest, size_t m) {
  size_t pos = 0;
  for (size_t x : rest) {
    if (x == m) return std::nullopt;
    if (x < m) ++pos;
  }
  return pos;
}

int parity_sign(size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

CochainBasis::CochainBasis(const LieAlgebra& l, size_t module_dim_, size_t p_)
    : p(p_), module_dim(module_dim_), subsets(l.dim(), p_) {}

Mat ce_differential(const LieAlgebra& l, const KModule& a, size_t p) {
  const size_t n = l.dim();
  const size_t m = a.dim();
  CochainBasis dom(l, m, p);
  CochainBasis cod(l, m, p + 1);
  Mat d(cod.size(), dom.size());
  if (p > n) return d;
  for (size_t si = 0; si < cod.subsets.size(); ++si) {
    const auto& s = cod.subsets.list[si];
    const uint64_t smask = Subsets::mask_of(s);
    // action terms: sum_j (-1)^j x_j . w(s minus j)
    if (!a.is_trivial()) {
      for (size_t j = 0; j <= p; ++j) {
        const Mat& rho = a.action(s[j]);
        const size_t ti = dom.subsets.index_of_mask(smask & ~(uint64_t(1) << s[j]));
        int sg = parity_sign(j);
        for (size_t w = 0; w < m; ++w)
          for (size_t u = 0; u < m; ++u) {
            const Rat& r = rho.at(w, u);
            if (r.is_zero()) continue;
            Rat& cell = d.at(cod.index(si, w), dom.index(ti, u));
            if (sg > 0)
              cell += r;
            else
              cell -= r;
          }
      }
    }
    // bracket terms: sum_{i<j} (-1)^{i+j} w([x_i,x_j], rest)
    for (size_t i = 0; i + 1 <= p; ++i)
      for (size_t j = i + 1; j <= p; ++j) {
        const Vec& br = l.bracket(s[i], s[j]);
        std::vector<size_t> rest;
        rest.reserve(p - 1);
        for (size_t t = 0; t <= p; ++t)
          if (t != i && t != j) rest.push_back(s[t]);
        int base_sign = parity_sign(i + j);
        for (size_t w = 0; w < n; ++w) {
          if (br[w].is_zero()) continue;
          auto pos = insert_pos(rest, w);
          if (!pos) continue;
          std::vector<size_t> tup = rest;
          tup.insert(tup.begin() + *pos, w);
          const size_t ti = dom.subsets.index_of_mask(Subsets::mask_of(tup));
          Rat coef = br[w];
          if (base_sign * parity_sign(*pos) < 0) coef = -coef;
          for (size_t u = 0; u < m; ++u) d.at(cod.index(si, u), dom.index(ti, u)) += coef;
        }
      }
  }
  return d;
}

Cohomology cohomology(const LieAlgebra& l, const KModule& a, size_t p) {
  Cohomology h;
  h.p = p;
  CochainBasis basis(l, a.dim(), p);
  h.dim_c = basis.size();
  Mat d_up = ce_differential(l, a, p);
  h.cocycles = kernel(d_up);
  if (p == 0) {
    h.coboundaries = Subspace::zero(h.dim_c);
  } else {
    h.coboundaries = image(ce_differential(l, a, p - 1));
  }
  if (!h.cocycles.contains(h.coboundaries))
    throw std::logic_error("coboundaries not contained in cocycles; differential is broken");
  QuotientView view = quotient_view(h.cocycles, h.coboundaries);
  h.dim_z = h.cocycles.dim();
  h.dim_b = h.coboundaries.dim();
  h.dim_h = view.dim;
  h.reps = std::move(view.reps);
  h.class_proj = std::move(view.proj);
  return h;
}

Mat wedge_boundary(const LieAlgebra& l) {
  const size_t n = l.dim();
  WedgePairs pairs(n);
  WedgeTriples triples(n);
  Mat b(pairs.size(), triples.size());
  for (size_t t = 0; t < triples.size(); ++t) {
    auto [i, j, k] = triples.list[t];
    auto emit = [&](size_t x, size_t y, size_t z) {
      // [x,y] ^ z
      const Vec& br = l.bracket(x, y);
      for (size_t w = 0; w < n; ++w) {
        if (br[w].is_zero() || w == z) continue;
        Rat c = br[w];
        if (pairs.sign(w, z) < 0) c = -c;
        b.at(pairs.index(w, z), t) += c;
      }
    };
    emit(i, j, k);
    emit(j, k, i);
    emit(k, i, j);
  }
  return b;
}

Mat wedge_bracket(const LieAlgebra& l) {
  const size_t n = l.dim();
  WedgePairs pairs(n);
  Mat b(n, pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    b.set_col(p, l.bracket(i, j));
  }
  return b;
}

Homology2 second_homology(const LieAlgebra& l) {
  Homology2 h;
  h.cycles = kernel(wedge_bracket(l));
  h.boundaries = image(wedge_boundary(l));
  if (!h.cycles.contains(h.boundaries))
    throw std::logic_error("wedge boundaries not contained in cycles; bracket tables are inconsistent");
  h.quotient = quotient_map(h.cycles.ambient(), h.boundaries);
  h.dim_h2 = h.cycles.dim() - h.boundaries.dim();
  return h;
}

std::optional<Vec> solve_primitive(const LieAlgebra& l, const KModule& a, size_t p,
                                   std::span<const Rat> target) {
  return solve(ce_differential(l, a, p), target);
}

Mat curry_head(const LieAlgebra& l, const KModule& a, size_t p, size_t q) {
  const size_t m = a.dim();
  CochainBasis dom(l, m, p + q);          // C^{p+q}(l,a)
  CochainBasis inner(l, m, q);            // C^q(l,a)
  CochainBasis outer(l, inner.size(), p); // C^p(l, C^q(l,a))
  Mat t(outer.size(), dom.size());
  for (size_t si = 0; si < outer.subsets.size(); ++si) {
    const auto& s = outer.subsets.list[si];
    const uint64_t smask = Subsets::mask_of(s);
    for (size_t ti = 0; ti < inner.subsets.size(); ++ti) {
      const auto& tt = inner.subsets.list[ti];
      const uint64_t tmask = Subsets::mask_of(tt);
      if (smask & tmask) continue;  // repeated argument
      // sign of sorting the concatenation (s, tt)
      size_t inversions = 0;
      for (size_t x : s)
        for (size_t y : tt)
          if (x > y) ++inversions;
      int sg = parity_sign(inversions);
      const size_t di = dom.subsets.index_of_mask(smask | tmask);
      for (size_t u = 0; u < m; ++u) {
        Rat v(sg);
        t.at(outer.index(si, inner.index(ti, u)), dom.index(di, u)) = v;
      }
    }
  }
  return t;
}

Mat value_differential(const LieAlgebra& l, const KModule& a, size_t p, size_t q) {
  Mat dq = ce_differential(l, a, q);
  CochainBasis inner_dom(l, a.dim(), q);
  CochainBasis inner_cod(l, a.dim(), q + 1);
  CochainBasis outer_dom(l, inner_dom.size(), p);
  CochainBasis outer_cod(l, inner_cod.size(), p);
  Mat out(outer_cod.size(), outer_dom.size());
  for (size_t si = 0; si < outer_dom.subsets.size(); ++si)
    for (size_t r = 0; r < dq.rows(); ++r)
      for (size_t c = 0; c < dq.cols(); ++c) {
        const Rat& v = dq.at(r, c);
        if (!v.is_zero()) out.at(outer_cod.index(si, r), outer_dom.index(si, c)) = v;
      }
  return out;
}

Mat symmetrize_map(const LieAlgebra& l) {
  const size_t n = l.dim();
  SymPairs sym(n);
  // C^1(l, l*) coordinates: (singleton {x}, dual index), i.e. x*n + dual
  Mat s(sym.size(), n * n);
  for (size_t r = 0; r < sym.size(); ++r) {
    auto [a, b] = sym.list[r];
    s.at(r, a * n + b) += Rat(1);
    s.at(r, b * n + a) += Rat(1);
  }
  return s;
}

KModule cochain_module(const LieAlgebra& l, const KModule& a, size_t q) {
  const size_t n = l.dim();
  const size_t m = a.dim();
  CochainBasis basis(l, m, q);
  std::vector<Mat> act(n, Mat(basis.size(), basis.size()));
  for (size_t x = 0; x < n; ++x) {
    Mat& mx = act[x];
    for (size_t si = 0; si < basis.subsets.size(); ++si) {
      const auto& s = basis.subsets.list[si];
      // x.(w(s)) term
      if (!a.is_trivial()) {
        const Mat& rho = a.action(x);
        for (size_t w = 0; w < m; ++w)
          for (size_t u = 0; u < m; ++u)
            if (!rho.at(w, u).is_zero()) mx.at(basis.index(si, w), basis.index(si, u)) += rho.at(w, u);
      }
      // -sum_i w(..., [x, s_i], ...) terms
      for (size_t i = 0; i < q; ++i) {
        const Vec& br = l.bracket(x, s[i]);
        std::vector<size_t> rest;
        rest.reserve(q - 1);
        for (size_t t = 0; t < q; ++t)
          if (t != i) rest.push_back(s[t]);
        for (size_t w = 0; w < n; ++w) {
          if (br[w].is_zero()) continue;
          auto pos = insert_pos(rest, w);
          if (!pos) continue;
          std::vector<size_t> tup = rest;
          tup.insert(tup.begin() + *pos, w);
          const size_t ti = basis.subsets.index_of_mask(Subsets::mask_of(tup));
          // moving w from slot i to slot pos costs |i - pos| transpositions
          size_t dist = (i > *pos) ? i - *pos : *pos - i;
          Rat coef = br[w];
          if (parity_sign(dist) < 0) coef = -coef;
          for (size_t u = 0; u < m; ++u) mx.at(basis.index(si, u), basis.index(ti, u)) -= coef;
        }
      }
    }
  }
  return KModule(l, std::move(act));
}

}  // namespace curco
