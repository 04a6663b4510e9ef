#include "curco/current.hpp"

#include <sstream>

namespace curco {

namespace {

std::string product_name(const std::string& a, const std::string& k) { return a + "*" + k; }

// sparse-friendly matrix-vector product
Vec apply_sparse(const Mat& m, const Vec& v) {
  Vec out(m.rows());
  for (size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (size_t r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

}  // namespace

CurrentAlgebra::CurrentAlgebra(CommAlgebra a, LieAlgebra k)
    : a_(std::move(a)),
      k_(std::move(k)),
      g_(LieAlgebra::make(0, {}, {})),
      wedge_g_(a_.dim() * k_.dim()),
      wedge_a_(a_.dim()),
      wedge_k_(k_.dim()),
      sym_k_(k_.dim()),
      sym_a_(a_.dim()),
      kaehler_(a_),
      cyclic_(cyclic_spans(a_)),
      kaehler_wedge_(wedge_differential(a_, kaehler_)) {
  const size_t n = a_.dim();
  const size_t nk = k_.dim();
  const size_t ng = n * nk;
  // product-basis bracket table
  std::vector<BracketEntry> entries;
  std::vector<std::string> names(ng);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < nk; ++j) names[flat(i, j)] = product_name(a_.names()[i], k_.names()[j]);
  for (size_t u = 0; u < ng; ++u)
    for (size_t v = u + 1; v < ng; ++v) {
      size_t i = u / nk, j = u % nk, p = v / nk, q = v % nk;
      if (j == q) continue;
      const Vec& prod = a_.product(i, p);
      const Vec& br = k_.bracket(j, q);
      BracketEntry e;
      e.i = u;
      e.j = v;
      for (size_t m = 0; m < n; ++m) {
        if (prod[m].is_zero()) continue;
        for (size_t r = 0; r < nk; ++r)
          if (!br[r].is_zero()) e.coeffs.emplace_back(flat(m, r), prod[m] * br[r]);
      }
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  g_ = LieAlgebra::make(ng, std::move(names), entries);

  sym_kernel_ = sym_mult_kernel(a_);
  derived_k_ = derived_subalgebra(k_);
  // commutator algebra must be A (x) k'
  {
    Subspace expected(ng);
    for (size_t i = 0; i < n; ++i)
      for (const auto& w : derived_k_.basis()) {
        Vec v(ng);
        for (size_t r = 0; r < nk; ++r) v[flat(i, r)] = w[r];
        expected.insert(std::move(v));
      }
    if (!(derived_subalgebra(g_) == expected))
      throw std::logic_error("commutator of the current algebra is not A (x) k'");
  }

  // projections
  p1_ = Mat(dim_c1(), wedge_g_.size());
  p2_ = Mat(dim_c2(), wedge_g_.size());
  p3_ = Mat(dim_c3(), wedge_g_.size());
  for (size_t t = 0; t < wedge_g_.size(); ++t) {
    auto [u, v] = wedge_g_.list[t];
    size_t i = u / nk, j = u % nk, p = v / nk, q = v % nk;
    if (i != p) {
      Rat sgn(wedge_a_.sign(i, p));
      p1_.at(c1_index(wedge_a_.index(i, p), sym_k_.index(j, q)), t) += sgn;
    }
    if (j != q) {
      Rat sgn(wedge_k_.sign(j, q));
      size_t wk = wedge_k_.index(j, q);
      const Vec& prod = a_.product(i, p);
      for (size_t m = 0; m < n; ++m)
        if (!prod[m].is_zero()) p2_.at(c2_index(m, wk), t) += prod[m] * sgn;
      // a v b - ab v 1 lies in the multiplication kernel
      Vec svec(sym_a_.size());
      svec[sym_a_.index(i, p)] += Rat(1);
      for (size_t m = 0; m < n; ++m) {
        if (prod[m].is_zero()) continue;
        for (size_t l = 0; l < n; ++l)
          if (!a_.unit()[l].is_zero()) svec[sym_a_.index(m, l)] -= prod[m] * a_.unit()[l];
      }
      if (!sym_kernel_.contains(svec))
        throw std::logic_error("symmetric defect escaped the multiplication kernel");
      Vec coords = sym_kernel_.coords_of(svec);
      for (size_t c = 0; c < coords.size(); ++c)
        if (!coords[c].is_zero()) p3_.at(c3_index(c, wk), t) += coords[c] * sgn;
    }
  }

  // sections
  const Rat half(1, 2);
  s1_ = Mat(wedge_g_.size(), dim_c1());
  for (size_t w = 0; w < wedge_a_.size(); ++w) {
    auto [i, p] = wedge_a_.list[w];
    for (size_t s = 0; s < sym_k_.size(); ++s) {
      auto [j, q] = sym_k_.list[s];
      size_t col = c1_index(w, s);
      s1_.at(wedge_g_.index(flat(i, j), flat(p, q)), col) += half;
      s1_.at(wedge_g_.index(flat(i, q), flat(p, j)), col) += half;
    }
  }
  s2_ = Mat(wedge_g_.size(), dim_c2());
  for (size_t i = 0; i < n; ++i)
    for (size_t wk = 0; wk < wedge_k_.size(); ++wk) {
      auto [j, q] = wedge_k_.list[wk];
      size_t col = c2_index(i, wk);
      for (size_t l = 0; l < n; ++l) {
        const Rat& ul = a_.unit()[l];
        if (ul.is_zero()) continue;
        size_t u1 = flat(i, j), v1 = flat(l, q);
        if (u1 != v1) s2_.at(wedge_g_.index(u1, v1), col) += half * ul * Rat(wedge_g_.sign(u1, v1));
        size_t u2 = flat(i, q), v2 = flat(l, j);
        if (u2 != v2) s2_.at(wedge_g_.index(u2, v2), col) -= half * ul * Rat(wedge_g_.sign(u2, v2));
      }
    }
  s3_ = Mat(wedge_g_.size(), dim_c3());
  for (size_t c = 0; c < sym_kernel_.dim(); ++c) {
    const Vec& rep = sym_kernel_.basis()[c];
    for (size_t wk = 0; wk < wedge_k_.size(); ++wk) {
      auto [j, q] = wedge_k_.list[wk];
      size_t col = c3_index(c, wk);
      for (size_t sp = 0; sp < sym_a_.size(); ++sp) {
        if (rep[sp].is_zero()) continue;
        auto [m, l] = sym_a_.list[sp];
        size_t u1 = flat(m, j), v1 = flat(l, q);
        if (u1 != v1) s3_.at(wedge_g_.index(u1, v1), col) += half * rep[sp] * Rat(wedge_g_.sign(u1, v1));
        size_t u2 = flat(m, q), v2 = flat(l, j);
        if (u2 != v2) s3_.at(wedge_g_.index(u2, v2), col) -= half * rep[sp] * Rat(wedge_g_.sign(u2, v2));
      }
    }
  }

  // certify the decomposition
  auto check_identity = [](const Mat& m, size_t dim, const char* what) {
    if (!(m == Mat::identity(dim))) throw std::logic_error(std::string("decomposition failure: ") + what);
  };
  check_identity(p1_ * s1_, dim_c1(), "p1 s1");
  check_identity(p2_ * s2_, dim_c2(), "p2 s2");
  check_identity(p3_ * s3_, dim_c3(), "p3 s3");
  if (!(p1_ * s2_).is_zero() || !(p1_ * s3_).is_zero() || !(p2_ * s1_).is_zero() ||
      !(p2_ * s3_).is_zero() || !(p3_ * s1_).is_zero() || !(p3_ * s2_).is_zero())
    throw std::logic_error("decomposition failure: cross sections do not vanish");
  Mat total = s1_ * p1_ + s2_ * p2_ + s3_ * p3_;
  check_identity(total, wedge_g_.size(), "section sum");
  if (wedge_g_.size() != dim_c1() + dim_c2() + dim_c3())
    throw std::logic_error("decomposition failure: dimension count");
}

Subspace cycles_decomposed(const CurrentAlgebra& cur) {
  const auto& g = cur.algebra();
  const auto& k = cur.fiber();
  Subspace from_kernel = kernel(wedge_bracket(g));
  Subspace assembled(cur.wedge_g().size());
  for (size_t c = 0; c < cur.dim_c1(); ++c) assembled.insert(cur.s1().col(c));
  Subspace z2k = kernel(wedge_bracket(k));
  for (size_t i = 0; i < cur.scalars().dim(); ++i)
    for (const auto& z : z2k.basis()) {
      Vec c2(cur.dim_c2());
      for (size_t wk = 0; wk < cur.wedge_k().size(); ++wk) c2[cur.c2_index(i, wk)] = z[wk];
      assembled.insert(apply_sparse(cur.s2(), c2));
    }
  for (size_t c = 0; c < cur.dim_c3(); ++c) assembled.insert(cur.s3().col(c));
  if (!(assembled == from_kernel))
    throw std::logic_error("cycle decomposition disagrees with the bracket kernel");
  return from_kernel;
}

namespace {

// span of z.(x v y) inside sym pair coordinates of k
Subspace fiber_action_span(const LieAlgebra& k) {
  SymPairs sym(k.dim());
  Subspace s(sym.size());
  for (size_t z = 0; z < k.dim(); ++z)
    for (size_t p = 0; p < sym.size(); ++p) {
      auto [x, y] = sym.list[p];
      Vec v(sym.size());
      const Vec& zx = k.bracket(z, x);
      for (size_t m = 0; m < k.dim(); ++m)
        if (!zx[m].is_zero()) v[sym.index(m, y)] += zx[m];
      const Vec& zy = k.bracket(z, y);
      for (size_t m = 0; m < k.dim(); ++m)
        if (!zy[m].is_zero()) v[sym.index(x, m)] += zy[m];
      s.insert(std::move(v));
    }
  return s;
}

// span of x v w for x in k, w in k', inside sym pair coordinates
Subspace sym_with_derived(const LieAlgebra& k, const Subspace& derived) {
  SymPairs sym(k.dim());
  Subspace s(sym.size());
  for (size_t x = 0; x < k.dim(); ++x)
    for (const auto& w : derived.basis()) {
      Vec v(sym.size());
      for (size_t b = 0; b < k.dim(); ++b)
        if (!w[b].is_zero()) v[sym.index(x, b)] += w[b];
      s.insert(std::move(v));
    }
  return s;
}

// span of x ^ w for x in k, w in k', inside wedge pair coordinates
Subspace wedge_with_derived(const LieAlgebra& k, const Subspace& derived) {
  WedgePairs pairs(k.dim());
  Subspace s(pairs.size());
  for (size_t x = 0; x < k.dim(); ++x)
    for (const auto& w : derived.basis()) {
      Vec v(pairs.size());
      for (size_t b = 0; b < k.dim(); ++b) {
        if (w[b].is_zero() || b == x) continue;
        Rat c = w[b];
        if (pairs.sign(x, b) < 0) c = -c;
        v[pairs.index(x, b)] += c;
      }
      s.insert(std::move(v));
    }
  return s;
}

}  // namespace

BoundaryData boundary_data(const CurrentAlgebra& cur) {
  const auto& k = cur.fiber();
  const auto& a = cur.scalars();
  const size_t n = a.dim();
  const size_t nk = k.dim();
  BoundaryData out;
  out.brute = image(wedge_boundary(cur.algebra()));
  out.cycles = cycles_decomposed(cur);

  Subspace fam(cur.wedge_g().size());
  // family 1: L^2(A) (x) k.S^2(k)
  Subspace acted = fiber_action_span(k);
  for (size_t w = 0; w < cur.wedge_a().size(); ++w)
    for (const auto& sv : acted.basis()) {
      Vec c1(cur.dim_c1());
      for (size_t s = 0; s < cur.sym_k().size(); ++s) c1[cur.c1_index(w, s)] = sv[s];
      fam.insert(apply_sparse(cur.s1(), c1));
    }
  // family 2: reduced cyclic span (x) k v k'
  Subspace kvk = sym_with_derived(k, cur.derived_fiber());
  for (const auto& tau : cur.cyclic().reduced.basis())
    for (const auto& sv : kvk.basis()) {
      Vec c1(cur.dim_c1());
      for (size_t w = 0; w < cur.wedge_a().size(); ++w) {
        if (tau[w].is_zero()) continue;
        for (size_t s = 0; s < cur.sym_k().size(); ++s)
          if (!sv[s].is_zero()) c1[cur.c1_index(w, s)] += tau[w] * sv[s];
      }
      fam.insert(apply_sparse(cur.s1(), c1));
    }
  // family 3: combined generators over all basis tuples
  for (size_t i = 0; i < n; ++i) {
    Vec awedge1(cur.wedge_a().size());
    for (size_t l = 0; l < n; ++l) {
      if (a.unit()[l].is_zero() || l == i) continue;
      Rat c = a.unit()[l];
      if (cur.wedge_a().sign(i, l) < 0) c = -c;
      awedge1[cur.wedge_a().index(i, l)] += c;
    }
    for (size_t x = 0; x < nk; ++x)
      for (size_t y = 0; y < nk; ++y)
        for (size_t z = 0; z < nk; ++z) {
          Vec sv(cur.sym_k().size());
          const Vec& br = k.bracket(x, y);
          for (size_t m = 0; m < nk; ++m)
            if (!br[m].is_zero()) sv[cur.sym_k().index(m, z)] += br[m];
          Vec c1(cur.dim_c1());
          bool c1_nonzero = false;
          for (size_t w = 0; w < cur.wedge_a().size(); ++w) {
            if (awedge1[w].is_zero()) continue;
            for (size_t s = 0; s < cur.sym_k().size(); ++s)
              if (!sv[s].is_zero()) {
                c1[cur.c1_index(w, s)] += awedge1[w] * sv[s];
                c1_nonzero = true;
              }
          }
          Vec wk(cur.wedge_k().size());
          auto emit = [&](size_t xx, size_t yy, size_t zz) {
            const Vec& b2 = k.bracket(xx, yy);
            for (size_t m = 0; m < nk; ++m) {
              if (b2[m].is_zero() || m == zz) continue;
              Rat c = b2[m];
              if (cur.wedge_k().sign(m, zz) < 0) c = -c;
              wk[cur.wedge_k().index(m, zz)] += c;
            }
          };
          emit(x, y, z);
          emit(y, z, x);
          emit(z, x, y);
          Vec total(cur.wedge_g().size());
          if (c1_nonzero) total = apply_sparse(cur.s1(), c1);
          if (!is_zero_vec(wk)) {
            Vec c2(cur.dim_c2());
            for (size_t m = 0; m < cur.wedge_k().size(); ++m) c2[cur.c2_index(i, m)] = wk[m];
            Vec part = apply_sparse(cur.s2(), c2);
            for (size_t m = 0; m < total.size(); ++m) total[m] += part[m];
          }
          fam.insert(std::move(total));
        }
  }
  // family 4: I_A (x) k ^ k'
  Subspace kwk = wedge_with_derived(k, cur.derived_fiber());
  for (size_t t = 0; t < cur.sym_kernel().dim(); ++t)
    for (const auto& wv : kwk.basis()) {
      Vec c3(cur.dim_c3());
      for (size_t m = 0; m < cur.wedge_k().size(); ++m) c3[cur.c3_index(t, m)] = wv[m];
      fam.insert(apply_sparse(cur.s3(), c3));
    }
  out.families = std::move(fam);
  out.families_match = (out.families == out.brute);
  return out;
}

CochainTriple CochainTriple::zero(const CurrentAlgebra& cur, size_t z_dim) {
  return CochainTriple{Mat(z_dim, cur.dim_c1()), Mat(z_dim, cur.dim_c2()), Mat(z_dim, cur.dim_c3())};
}

Mat assemble(const CurrentAlgebra& cur, const CochainTriple& f) {
  return f.f1 * cur.p1() + f.f2 * cur.p2() + f.f3 * cur.p3();
}

CochainTriple extract(const CurrentAlgebra& cur, const Mat& functional) {
  return CochainTriple{functional * cur.s1(), functional * cur.s2(), functional * cur.s3()};
}

namespace {

// alternating evaluation of a 3-cochain stored on increasing triples
Rat eval3(const WedgeTriples& triples, const Vec& coords, size_t x, size_t y, size_t z) {
  if (x == y || y == z || x == z) return Rat(0);
  size_t a = x, b = y, c = z;
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (b > c) {
    std::swap(b, c);
    sign = -sign;
  }
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  Rat v = coords[triples.index(a, b, c)];
  return sign > 0 ? v : -v;
}

}  // namespace

CocycleReport cocycle_check(const CurrentAlgebra& cur, const BoundaryData& bd, const CochainTriple& f) {
  const auto& k = cur.fiber();
  const auto& a = cur.scalars();
  const size_t n = a.dim();
  const size_t nk = k.dim();
  const size_t m = f.z_dim();
  CocycleReport rep;

  // (a) values of the first component are invariant forms
  rep.invariance_ok = true;
  for (size_t w = 0; w < cur.wedge_a().size() && rep.invariance_ok; ++w)
    for (size_t t = 0; t < m && rep.invariance_ok; ++t) {
      Vec sym(cur.sym_k().size());
      for (size_t s = 0; s < sym.size(); ++s) sym[s] = f.f1.at(t, cur.c1_index(w, s));
      if (!is_invariant_form(k, gram_of(nk, sym))) rep.invariance_ok = false;
    }

  // (b) the first component kills reduced-cyclic (x) k v k'
  rep.reduced_cyclic_ok = true;
  Subspace kvk = sym_with_derived(k, cur.derived_fiber());
  for (const auto& tau : cur.cyclic().reduced.basis())
    for (const auto& sv : kvk.basis())
      for (size_t t = 0; t < m; ++t) {
        Rat val;
        for (size_t w = 0; w < cur.wedge_a().size(); ++w) {
          if (tau[w].is_zero()) continue;
          for (size_t s = 0; s < cur.sym_k().size(); ++s)
            if (!sv[s].is_zero()) val += tau[w] * sv[s] * f.f1.at(t, cur.c1_index(w, s));
        }
        if (!val.is_zero()) rep.reduced_cyclic_ok = false;
      }

  // (c) fiber differential of the second component matches the Koszul term
  rep.coupling_ok = true;
  Mat d2k = ce_differential(k, trivial_module(k, 1), 2);
  WedgeTriples triples(nk);
  for (size_t i = 0; i < n && rep.coupling_ok; ++i)
    for (size_t t = 0; t < m && rep.coupling_ok; ++t) {
      Vec eta(cur.wedge_k().size());
      for (size_t wk = 0; wk < eta.size(); ++wk) eta[wk] = f.f2.at(t, cur.c2_index(i, wk));
      Vec deta = apply_sparse(d2k, eta);
      // values of the first component on a_i ^ 1
      Vec kap(cur.sym_k().size());
      for (size_t l = 0; l < n; ++l) {
        if (a.unit()[l].is_zero() || l == i) continue;
        Rat c = a.unit()[l];
        if (cur.wedge_a().sign(i, l) < 0) c = -c;
        size_t w = cur.wedge_a().index(i, l);
        for (size_t s = 0; s < kap.size(); ++s) kap[s] += c * f.f1.at(t, cur.c1_index(w, s));
      }
      for (size_t x = 0; x < nk && rep.coupling_ok; ++x)
        for (size_t y = 0; y < nk && rep.coupling_ok; ++y)
          for (size_t z = 0; z < nk; ++z) {
            Rat rhs;
            const Vec& br = k.bracket(x, y);
            for (size_t mm = 0; mm < nk; ++mm)
              if (!br[mm].is_zero()) rhs += br[mm] * kap[cur.sym_k().index(mm, z)];
            if (eval3(triples, deta, x, y, z) != rhs) {
              rep.coupling_ok = false;
              break;
            }
          }
    }

  // (d) the third component kills the multiplication kernel on k x k'
  rep.sym_kernel_ok = true;
  Subspace kwk = wedge_with_derived(k, cur.derived_fiber());
  for (size_t t0 = 0; t0 < cur.sym_kernel().dim(); ++t0)
    for (const auto& wv : kwk.basis())
      for (size_t t = 0; t < m; ++t) {
        Rat val;
        for (size_t wk = 0; wk < cur.wedge_k().size(); ++wk)
          if (!wv[wk].is_zero()) val += wv[wk] * f.f3.at(t, cur.c3_index(t0, wk));
        if (!val.is_zero()) rep.sym_kernel_ok = false;
      }

  rep.is_cocycle = rep.invariance_ok && rep.reduced_cyclic_ok && rep.coupling_ok && rep.sym_kernel_ok;
  if (!rep.invariance_ok)
    rep.violated = "a";
  else if (!rep.reduced_cyclic_ok)
    rep.violated = "b";
  else if (!rep.coupling_ok)
    rep.violated = "c";
  else if (!rep.sym_kernel_ok)
    rep.violated = "d";

  // cross-check against vanishing on the brute-force boundaries
  Mat assembled = assemble(cur, f);
  bool brute_vanishes = true;
  for (const auto& b : bd.brute.basis())
    if (!is_zero_vec(assembled.apply(b))) {
      brute_vanishes = false;
      break;
    }
  if (brute_vanishes != rep.is_cocycle)
    throw std::logic_error("cocycle condition verdict contradicts the boundary evaluation");
  return rep;
}

SplitF1 split_invariant_part(const CurrentAlgebra& cur, const BoundaryData& bd, const CochainTriple& f) {
  if (!cocycle_check(cur, bd, f).is_cocycle)
    throw std::invalid_argument("split_invariant_part: input is not a cocycle");
  const auto& k = cur.fiber();
  const size_t m = f.z_dim();
  InvariantForms inv = sym_invariant_forms(k);
  Subspace kvk = sym_with_derived(k, cur.derived_fiber());
  const size_t r = kvk.dim();
  const size_t s = inv.invariants.dim();
  Mat restr(r, s);
  for (size_t c = 0; c < s; ++c)
    for (size_t row = 0; row < r; ++row) {
      Rat val;
      for (size_t sp = 0; sp < cur.sym_k().size(); ++sp)
        val += inv.invariants.basis()[c][sp] * kvk.basis()[row][sp];
      restr.at(row, c) = val;
    }
  SplitF1 out{Mat(m, cur.dim_c1()), Mat(m, cur.dim_c1())};
  for (size_t w = 0; w < cur.wedge_a().size(); ++w)
    for (size_t t = 0; t < m; ++t) {
      Vec kap(cur.sym_k().size());
      for (size_t sp = 0; sp < kap.size(); ++sp) kap[sp] = f.f1.at(t, cur.c1_index(w, sp));
      Vec rhs(r);
      for (size_t row = 0; row < r; ++row) {
        Rat val;
        for (size_t sp = 0; sp < kap.size(); ++sp) val += kvk.basis()[row][sp] * kap[sp];
        rhs[row] = val;
      }
      auto coeffs = solve(restr, rhs);
      if (!coeffs)
        throw std::logic_error("restriction of an invariant-valued cocycle must lift through the invariants");
      Vec lifted(cur.sym_k().size());
      for (size_t c = 0; c < s; ++c) add_scaled(lifted, (*coeffs)[c], inv.invariants.basis()[c]);
      for (size_t sp = 0; sp < lifted.size(); ++sp) {
        out.f1_1.at(t, cur.c1_index(w, sp)) = lifted[sp];
        out.f1_0.at(t, cur.c1_index(w, sp)) = kap[sp] - lifted[sp];
      }
    }
  // the part lifted through the invariants kills the reduced cyclic span
  for (const auto& tau : cur.cyclic().reduced.basis())
    for (size_t t = 0; t < m; ++t)
      for (size_t sp = 0; sp < cur.sym_k().size(); ++sp) {
        Rat val;
        for (size_t w = 0; w < cur.wedge_a().size(); ++w)
          if (!tau[w].is_zero()) val += tau[w] * out.f1_1.at(t, cur.c1_index(w, sp));
        if (!val.is_zero())
          throw std::logic_error("lifted component fails to kill the reduced cyclic span");
      }
  // the difference vanishes on g x g'
  for (size_t w = 0; w < cur.wedge_a().size(); ++w)
    for (const auto& sv : kvk.basis())
      for (size_t t = 0; t < m; ++t) {
        Rat val;
        for (size_t sp = 0; sp < cur.sym_k().size(); ++sp)
          if (!sv[sp].is_zero()) val += sv[sp] * out.f1_0.at(t, cur.c1_index(w, sp));
        if (!val.is_zero()) throw std::logic_error("residual component fails to vanish on g x g'");
      }
  return out;
}

CoboundaryReport coboundary_test(const CurrentAlgebra& cur, const CochainTriple& f) {
  CoboundaryReport out;
  if (!f.f1.is_zero()) {
    out.obstruction = "first component nonzero";
    return out;
  }
  if (!f.f3.is_zero()) {
    out.obstruction = "third component nonzero";
    return out;
  }
  const auto& k = cur.fiber();
  const size_t n = cur.scalars().dim();
  const size_t nk = k.dim();
  const size_t m = f.z_dim();
  Mat bk = wedge_bracket(k);  // nk x wedge_k
  Mat sys = bk.transposed() * Rat(-1);
  Mat witness(m, n * nk);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < m; ++t) {
      Vec rhs(cur.wedge_k().size());
      for (size_t wk = 0; wk < rhs.size(); ++wk) rhs[wk] = f.f2.at(t, cur.c2_index(i, wk));
      auto ell = solve(sys, rhs);
      if (!ell) {
        std::ostringstream os;
        os << "second component is not exact at basis element " << cur.scalars().names()[i];
        out.obstruction = os.str();
        return out;
      }
      for (size_t rr = 0; rr < nk; ++rr) witness.at(t, cur.flat(i, rr)) = (*ell)[rr];
    }
  // certify d l = f by evaluation
  Mat expected = (witness * wedge_bracket(cur.algebra())) * Rat(-1);
  if (!(expected == assemble(cur, f)))
    throw std::logic_error("coboundary witness fails to reproduce the cochain");
  out.is_coboundary = true;
  out.witness = std::move(witness);
  return out;
}

CoupledReport coupled_construct(const CurrentAlgebra& cur, const BoundaryData& bd,
                                std::span<const Rat> kappa, std::span<const Rat> eta) {
  const auto& k = cur.fiber();
  if (!is_invariant_form(k, gram_of(k.dim(), kappa)))
    throw std::invalid_argument("coupled_construct: form is not invariant");
  Vec koszul = koszul_cochain(k, kappa);
  Mat d2k = ce_differential(k, trivial_module(k, 1), 2);
  Vec deta = d2k.apply(eta);
  if (deta != koszul)
    throw std::invalid_argument("coupled_construct: cochain is not a primitive of the Koszul cochain");
  const size_t m = cur.kaehler().dim();
  CoupledReport out;
  out.f = CochainTriple::zero(cur, m);
  const Mat& gamma = cur.kaehler_wedge();
  for (size_t w = 0; w < cur.wedge_a().size(); ++w)
    for (size_t s = 0; s < cur.sym_k().size(); ++s) {
      if (kappa[s].is_zero()) continue;
      for (size_t t = 0; t < m; ++t)
        if (!gamma.at(t, w).is_zero()) out.f.f1.at(t, cur.c1_index(w, s)) = kappa[s] * gamma.at(t, w);
    }
  const Mat& da = cur.kaehler().d();
  for (size_t i = 0; i < cur.scalars().dim(); ++i)
    for (size_t wk = 0; wk < cur.wedge_k().size(); ++wk) {
      if (eta[wk].is_zero()) continue;
      for (size_t t = 0; t < m; ++t)
        if (!da.at(t, i).is_zero()) out.f.f2.at(t, cur.c2_index(i, wk)) = -eta[wk] * da.at(t, i);
    }
  if (!cocycle_check(cur, bd, out.f).is_cocycle)
    throw std::logic_error("coupled construction failed to produce a cocycle");
  CochainTriple f1_alone = CochainTriple::zero(cur, m);
  f1_alone.f1 = out.f.f1;
  out.f1_alone_cocycle = cocycle_check(cur, bd, f1_alone).is_cocycle;
  out.coupled = !out.f1_alone_cocycle;
  bool expect_coupled = !cur.kaehler().d().is_zero() && !is_zero_vec(koszul);
  if (out.coupled != expect_coupled)
    throw std::logic_error("coupling verdict disagrees with the differential/Koszul criterion");
  return out;
}

CoupledExistence coupled_existence(const CurrentAlgebra& cur) {
  CoupledExistence out;
  out.differential_nonzero = !cur.kaehler().d().is_zero();
  ExactFormsReport ef = exact_forms(cur.fiber());
  out.exact_form_with_nonzero_koszul = (ef.b3_meet.dim() > 0);
  return out;
}

Mat projection_onto(const Subspace& s) {
  const size_t n = s.ambient();
  std::vector<Vec> rows;
  for (const auto& r : s.basis()) rows.push_back(r);
  Subspace filled = s;
  for (size_t i = 0; i < n && filled.dim() < n; ++i) {
    Vec e = unit_vec(n, i);
    if (filled.insert(e)) rows.push_back(std::move(e));
  }
  Mat mt(n, n);
  for (size_t j = 0; j < n; ++j) mt.set_col(j, rows[j]);
  auto inv = inverse(mt);
  if (!inv) throw std::logic_error("projection_onto: completion failed");
  // P = B^T restricted to the first dim(s) coordinates of (M^T)^{-1}
  Mat head(s.dim(), n);
  for (size_t i = 0; i < s.dim(); ++i)
    for (size_t c = 0; c < n; ++c) head.at(i, c) = inv->at(i, c);
  Mat basis_cols(n, s.dim());
  for (size_t j = 0; j < s.dim(); ++j) basis_cols.set_col(j, s.basis()[j]);
  return basis_cols * head;
}

H2SequenceReport h2_sequence(const CurrentAlgebra& cur) {
  H2SequenceReport out;
  const auto& g = cur.algebra();
  const auto& k = cur.fiber();
  const auto& a = cur.scalars();
  const size_t n = a.dim();
  const size_t nk = k.dim();
  KModule triv_g = trivial_module(g, 1);
  Cohomology h2g = cohomology(g, triv_g, 2);
  out.dim_h2_brute = h2g.dim_h;

  // quotient fiber and the pulled-back outer components
  Mat qk = quotient_map(nk, cur.derived_fiber());
  const size_t nbar = qk.rows();
  LieAlgebra kbar = LieAlgebra::make(nbar, {}, {});
  CurrentAlgebra cbar(a, kbar);
  WedgePairs wedge_gbar(n * nbar);
  Mat w(wedge_gbar.size(), cur.wedge_g().size());
  for (size_t t = 0; t < cur.wedge_g().size(); ++t) {
    auto [u, v] = cur.wedge_g().list[t];
    size_t i = u / nk, j = u % nk, p = v / nk, q = v % nk;
    for (size_t t1 = 0; t1 < nbar; ++t1) {
      if (qk.at(t1, j).is_zero()) continue;
      for (size_t t2 = 0; t2 < nbar; ++t2) {
        if (qk.at(t2, q).is_zero()) continue;
        size_t ub = i * nbar + t1, vb = p * nbar + t2;
        if (ub == vb) continue;
        Rat c = qk.at(t1, j) * qk.at(t2, q);
        if (wedge_gbar.sign(ub, vb) < 0) c = -c;
        w.at(wedge_gbar.index(ub, vb), t) += c;
      }
    }
  }
  std::vector<Vec> phi_vectors;
  Mat pull1 = cbar.p1() * w;
  for (size_t r = 0; r < pull1.rows(); ++r) phi_vectors.push_back(pull1.row(r));
  Mat pull3 = cbar.p3() * w;
  for (size_t r = 0; r < pull3.rows(); ++r) phi_vectors.push_back(pull3.row(r));
  out.term_pullback = cbar.dim_c1() + cbar.dim_c3();

  // fiberwise classes
  Cohomology h2k = cohomology(k, trivial_module(k, 1), 2);
  out.term_fiberwise = n * h2k.dim_h;
  for (size_t i = 0; i < n; ++i)
    for (const auto& rep : h2k.reps) {
      Vec c2(cur.dim_c2());
      for (size_t wk = 0; wk < cur.wedge_k().size(); ++wk) c2[cur.c2_index(i, wk)] = rep[wk];
      // functional = c2 o p2
      Vec vec(cur.wedge_g().size());
      for (size_t t = 0; t < vec.size(); ++t) {
        Rat val;
        for (size_t cc = 0; cc < cur.dim_c2(); ++cc)
          if (!c2[cc].is_zero() && !cur.p2().at(cc, t).is_zero()) val += c2[cc] * cur.p2().at(cc, t);
        vec[t] = val;
      }
      phi_vectors.push_back(std::move(vec));
    }

  ExactFormsReport ef = exact_forms(k);
  const size_t dim_module = cur.kaehler().dim();
  const size_t dim_exact = cur.kaehler().exact_part().dim();
  out.term_pair = dim_exact * ef.b3_meet.dim() + (dim_module - dim_exact) * ef.z3_image.dim();
  out.dims_match = (out.dim_h2_brute == out.term_pullback + out.term_fiberwise + out.term_pair);

  // injectivity of the head: classes stay independent over the coboundaries
  Subspace work = h2g.coboundaries;
  size_t grew = 0;
  for (const auto& v : phi_vectors) {
    if (!h2g.cocycles.contains(v)) throw std::logic_error("pulled-back functional is not a cocycle");
    if (work.insert(v)) ++grew;
  }
  out.head_injective = (grew == phi_vectors.size());

  // the tail evaluated on the head image vanishes
  WedgeTriples triples(nk);
  auto koszul_raw = [&](const Vec& sym) {
    Vec outv(triples.size());
    for (size_t t = 0; t < triples.size(); ++t) {
      auto [x, y, z] = triples.list[t];
      Rat val;
      const Vec& br = k.bracket(x, y);
      for (size_t mm = 0; mm < nk; ++mm)
        if (!br[mm].is_zero()) val += br[mm] * sym[cur.sym_k().index(mm, z)];
      outv[t] = val;
    }
    return outv;
  };
  auto first_component_forms = [&](const Vec& functional) {
    // functional over wedge_g -> forms kappa_w per wedge_a index
    std::vector<Vec> kaps(cur.wedge_a().size(), Vec(cur.sym_k().size()));
    for (size_t w2 = 0; w2 < cur.wedge_a().size(); ++w2)
      for (size_t s = 0; s < cur.sym_k().size(); ++s) {
        Rat val;
        size_t col = cur.c1_index(w2, s);
        for (size_t t = 0; t < cur.wedge_g().size(); ++t)
          if (!cur.s1().at(t, col).is_zero()) val += functional[t] * cur.s1().at(t, col);
        kaps[w2][s] = val;
      }
    return kaps;
  };
  out.tail_kills_head = true;
  for (const auto& v : phi_vectors) {
    auto kaps = first_component_forms(v);
    for (const auto& kap : kaps)
      if (!is_zero_vec(koszul_raw(kap))) out.tail_kills_head = false;
  }

  // materialize the tail on brute-force representatives
  out.memberships_ok = true;
  std::vector<Vec> module_preimages;  // wedge_a vectors mapping onto module basis
  for (size_t t = 0; t < dim_module; ++t) {
    auto pre = solve(cur.kaehler_wedge(), unit_vec(dim_module, t));
    if (!pre) throw std::logic_error("wedge differential must be surjective");
    module_preimages.push_back(std::move(*pre));
  }
  std::vector<Vec> flat_tails;
  Subspace exact_part = cur.kaehler().exact_part();
  for (const auto& rep : h2g.reps) {
    auto kaps = first_component_forms(rep);
    Mat tail(triples.size(), dim_module);
    for (size_t t = 0; t < dim_module; ++t) {
      Vec kap(cur.sym_k().size());
      for (size_t w2 = 0; w2 < cur.wedge_a().size(); ++w2)
        if (!module_preimages[t][w2].is_zero()) add_scaled(kap, module_preimages[t][w2], kaps[w2]);
      Vec kz = koszul_raw(kap);
      if (!ef.z3_image.contains(kz)) out.memberships_ok = false;
      tail.set_col(t, kz);
    }
    for (size_t i = 0; i < n; ++i) {
      Vec img = tail.apply(cur.kaehler().d().col(i));
      if (!ef.b3_meet.contains(img)) out.memberships_ok = false;
    }
    Vec flat(triples.size() * dim_module);
    for (size_t t = 0; t < dim_module; ++t)
      for (size_t r = 0; r < triples.size(); ++r) flat[t * triples.size() + r] = tail.at(r, t);
    flat_tails.push_back(std::move(flat));
  }
  Subspace tail_span(triples.size() * dim_module);
  for (const auto& v : flat_tails) tail_span.insert(v);
  out.tail_rank_ok = (tail_span.dim() == out.term_pair);

  // kernel of the tail equals the classes of the head image
  Mat tail_mat(triples.size() * dim_module, h2g.dim_h);
  for (size_t c = 0; c < flat_tails.size(); ++c) tail_mat.set_col(c, flat_tails[c]);
  Subspace tail_kernel = kernel(tail_mat);
  Subspace head_classes(h2g.dim_h);
  for (const auto& v : phi_vectors) head_classes.insert(h2g.class_proj.apply(v));
  out.kernel_equals_head_image = (tail_kernel == head_classes);
  return out;
}

ZusmanovichReport zusmanovich(const CurrentAlgebra& cur) {
  ZusmanovichReport out;
  const auto& k = cur.fiber();
  const auto& a = cur.scalars();
  out.fiber_h2 = second_homology(k).dim_h2;
  out.coinvariants = cur.sym_k().size() - fiber_action_span(k).dim();
  out.cyclic_dim = first_cyclic_homology(a, cur.kaehler()).dim;
  out.sym_kernel_dim = cur.sym_kernel().dim();
  out.cyclic_full_dim = cur.cyclic().full.dim();
  const size_t nbar = k.dim() - cur.derived_fiber().dim();
  out.four_factor_sum = a.dim() * out.fiber_h2 + out.cyclic_dim * out.coinvariants +
                        binomial(nbar, 2) * out.sym_kernel_dim +
                        binomial(nbar + 1, 2) * out.cyclic_full_dim;
  ExactFormsReport ef = exact_forms(k);
  out.coupled_correction = cur.kaehler().exact_part().dim() * ef.b3_meet.dim();
  out.predicted = out.four_factor_sum + out.coupled_correction;
  out.brute = second_homology(cur.algebra()).dim_h2;
  out.match = (out.predicted == out.brute);
  return out;
}

UniversalCocycle universal_cocycle(const CurrentAlgebra& cur, const BoundaryData& bd) {
  UniversalCocycle out;
  const auto& k = cur.fiber();
  Subspace z2k = kernel(wedge_bracket(k));
  Mat pk = projection_onto(z2k);
  Mat bd2(cur.dim_c2(), cur.dim_c2());
  for (size_t i = 0; i < cur.scalars().dim(); ++i)
    for (size_t r = 0; r < pk.rows(); ++r)
      for (size_t c = 0; c < pk.cols(); ++c)
        if (!pk.at(r, c).is_zero()) bd2.at(cur.c2_index(i, r), cur.c2_index(i, c)) = pk.at(r, c);
  Mat t = cur.s1() * cur.p1() + cur.s2() * (bd2 * cur.p2()) + cur.s3() * cur.p3();
  for (size_t c = 0; c < t.cols(); ++c)
    if (!bd.cycles.contains(t.col(c)))
      throw std::logic_error("universal projection does not land in the cycles");
  out.kills_boundaries = true;
  for (const auto& b : bd.brute.basis())
    if (!bd.brute.contains(t.apply(b))) out.kills_boundaries = false;
  QuotientView view = quotient_view(bd.cycles, bd.brute);
  out.dim_h2 = view.dim;
  out.map = view.proj * t;
  for (const auto& b : bd.brute.basis())
    if (!is_zero_vec(out.map.apply(b))) out.kills_boundaries = false;
  // induced classes span the second cohomology
  Subspace work = image(ce_differential(cur.algebra(), trivial_module(cur.algebra(), 1), 1));
  size_t base = work.dim();
  for (size_t r = 0; r < out.map.rows(); ++r) work.insert(out.map.row(r));
  out.classes_span = (work.dim() == base + out.dim_h2);
  return out;
}

}  // namespace curco
