#include "curco/forms.hpp"

#include <array>

namespace curco {

namespace {

// block-diagonal application of a value map to outer cochain coordinates
Mat block_values(size_t blocks, const Mat& value_map) {
  Mat out(blocks * value_map.rows(), blocks * value_map.cols());
  for (size_t b = 0; b < blocks; ++b)
    for (size_t r = 0; r < value_map.rows(); ++r)
      for (size_t c = 0; c < value_map.cols(); ++c) {
        const Rat& v = value_map.at(r, c);
        if (!v.is_zero()) out.at(b * value_map.rows() + r, b * value_map.cols() + c) = v;
      }
  return out;
}

}  // namespace

InvariantForms sym_invariant_forms(const LieAlgebra& l) {
  InvariantForms out;
  out.n = l.dim();
  KModule sym = sym_forms_module(l);
  out.invariants = kernel(ce_differential(l, sym, 0));
  // forms vanishing on l x l'
  SymPairs pairs(l.dim());
  Subspace derived = derived_subalgebra(l);
  Mat constraints(l.dim() * derived.dim(), pairs.size());
  for (size_t a = 0; a < l.dim(); ++a)
    for (size_t w = 0; w < derived.dim(); ++w) {
      const Vec& wv = derived.basis()[w];
      for (size_t b = 0; b < l.dim(); ++b)
        if (!wv[b].is_zero()) constraints.at(a * derived.dim() + w, pairs.index(a, b)) += wv[b];
    }
  out.quotient_forms = kernel(constraints);
  if (!out.invariants.contains(out.quotient_forms))
    throw std::logic_error("forms killing the commutator are expected to be invariant");
  return out;
}

Mat gram_of(size_t n, std::span<const Rat> sym_coords) {
  SymPairs pairs(n);
  Mat g(n, n);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    g.at(i, j) = sym_coords[p];
    g.at(j, i) = sym_coords[p];
  }
  return g;
}

Vec sym_coords_of_gram(const Mat& gram) {
  SymPairs pairs(gram.rows());
  Vec v(pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    v[p] = gram.at(i, j);
  }
  return v;
}

bool is_invariant_form(const LieAlgebra& l, const Mat& gram) {
  const size_t n = l.dim();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        Rat v;
        const Vec& xy = l.bracket(x, y);
        const Vec& xz = l.bracket(x, z);
        for (size_t m = 0; m < n; ++m) {
          if (!xy[m].is_zero()) v += xy[m] * gram.at(m, z);
          if (!xz[m].is_zero()) v += xz[m] * gram.at(y, m);
        }
        if (!v.is_zero()) return false;
      }
  return true;
}

Vec koszul_cochain(const LieAlgebra& l, std::span<const Rat> sym_coords) {
  const size_t n = l.dim();
  Mat gram = gram_of(n, sym_coords);
  if (!is_invariant_form(l, gram))
    throw std::invalid_argument("koszul_cochain: form is not invariant");
  auto value = [&](size_t x, size_t y, size_t z) {
    Rat v;
    const Vec& br = l.bracket(x, y);
    for (size_t m = 0; m < n; ++m)
      if (!br[m].is_zero()) v += br[m] * gram.at(m, z);
    return v;
  };
  // alternation under the two generating transpositions, on all index triples
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        if (!(value(x, y, z) + value(y, x, z)).is_zero() ||
            !(value(x, y, z) + value(x, z, y)).is_zero())
          throw std::logic_error("koszul cochain of an invariant form must be alternating");
      }
  WedgeTriples triples(n);
  Vec out(triples.size());
  for (size_t t = 0; t < triples.size(); ++t) {
    auto [i, j, k] = triples.list[t];
    out[t] = value(i, j, k);
  }
  Mat d3 = ce_differential(l, trivial_module(l, 1), 3);
  if (!is_zero_vec(d3.apply(out)))
    throw std::logic_error("koszul cochain of an invariant form must be closed");
  return out;
}

ExactFormsReport exact_forms(const LieAlgebra& l) {
  ExactFormsReport out;
  InvariantForms inv = sym_invariant_forms(l);
  const size_t s = inv.invariants.dim();
  WedgeTriples triples(l.dim());
  Mat g(triples.size(), s);
  for (size_t i = 0; i < s; ++i) g.set_col(i, koszul_cochain(l, inv.invariants.basis()[i]));
  KModule triv = trivial_module(l, 1);
  Subspace b3 = image(ce_differential(l, triv, 2));
  Subspace z3 = kernel(ce_differential(l, triv, 3));
  out.z3_image = image(g);
  if (!z3.contains(out.z3_image)) throw std::logic_error("koszul image escaped the cocycles");
  out.b3_meet = meet(b3, out.z3_image);
  // forms whose koszul cochain is a coboundary
  Mat mod_b3 = quotient_map(triples.size(), b3);
  Subspace coeff_kernel = kernel(mod_b3 * g);
  std::vector<Vec> exact_vecs;
  for (const auto& c : coeff_kernel.basis()) {
    Vec v(inv.invariants.ambient());
    for (size_t i = 0; i < s; ++i) add_scaled(v, c[i], inv.invariants.basis()[i]);
    exact_vecs.push_back(std::move(v));
  }
  out.exact_forms = Subspace::span(exact_vecs, inv.invariants.ambient());
  out.descent_image_dim = out.z3_image.dim() - out.b3_meet.dim();
  // kernel of the koszul map inside the invariants
  Subspace coeff_ker_g = kernel(g);
  std::vector<Vec> ker_vecs;
  for (const auto& c : coeff_ker_g.basis()) {
    Vec v(inv.invariants.ambient());
    for (size_t i = 0; i < s; ++i) add_scaled(v, c[i], inv.invariants.basis()[i]);
    ker_vecs.push_back(std::move(v));
  }
  out.kernel_is_quotient_forms = (Subspace::span(ker_vecs, inv.invariants.ambient()) == inv.quotient_forms);
  out.dim_h2 = cohomology(l, triv, 2).dim_h;
  out.dim_h1_coad = cohomology(l, coadjoint_module(l), 1).dim_h;
  out.dim_identity_ok = (out.exact_forms.dim() + out.dim_h2 == out.dim_h1_coad);
  return out;
}

CentroidReport centroid(const LieAlgebra& l, const std::optional<Mat>& kappa0) {
  const size_t n = l.dim();
  CentroidReport out;
  // unknowns M in row-major coordinates; commutant of all ad x
  std::vector<Mat> ads;
  for (size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Mat eqs(n * n * n, n * n);
  for (size_t x = 0; x < n; ++x) {
    const Mat& a = ads[x];
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        size_t row = (x * n + r) * n + c;
        for (size_t m = 0; m < n; ++m) {
          if (!a.at(m, c).is_zero()) eqs.at(row, r * n + m) += a.at(m, c);
          if (!a.at(r, m).is_zero()) eqs.at(row, m * n + c) -= a.at(r, m);
        }
      }
  }
  Subspace cent = kernel(eqs);
  // kill l', image inside the center
  Subspace derived = derived_subalgebra(l);
  Subspace zc = center(l);
  Mat qz = quotient_map(n, zc);
  Mat eqs0((derived.dim() + qz.rows()) * n, n * n);
  size_t row = 0;
  for (size_t w = 0; w < derived.dim(); ++w) {
    const Vec& wv = derived.basis()[w];
    for (size_t r = 0; r < n; ++r, ++row)
      for (size_t c = 0; c < n; ++c)
        if (!wv[c].is_zero()) eqs0.at(row, r * n + c) = wv[c];
  }
  for (size_t t = 0; t < qz.rows(); ++t)
    for (size_t j = 0; j < n; ++j, ++row)
      for (size_t r = 0; r < n; ++r)
        if (!qz.at(t, r).is_zero()) eqs0.at(row, r * n + j) = qz.at(t, r);
  Subspace cent0 = kernel(eqs0);
  out.dim_cent = cent.dim();
  out.dim_cent0 = cent0.dim();
  out.cent0_inside_cent = cent.contains(cent0);
  if (!out.cent0_inside_cent) throw std::logic_error("degenerate centroid part escaped the centroid");
  out.dim_cent_red = cent.dim() - cent0.dim();
  if (kappa0) {
    const Mat& k0 = *kappa0;
    if (k0.rows() != n || k0.cols() != n || !(k0 == k0.transposed()))
      throw std::invalid_argument("centroid: reference form must be a symmetric n x n matrix");
    if (!is_invariant_form(l, k0)) throw std::invalid_argument("centroid: reference form must be invariant");
    if (det(k0).is_zero()) throw std::invalid_argument("centroid: reference form must be nondegenerate");
    // A is symmetric for the induced transpose iff k0 A is a symmetric matrix
    Mat sym_eqs(n * n, n * n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = r + 1; c < n; ++c) {
        size_t erow = r * n + c;
        for (size_t m = 0; m < n; ++m) {
          if (!k0.at(r, m).is_zero()) sym_eqs.at(erow, m * n + c) += k0.at(r, m);
          if (!k0.at(c, m).is_zero()) sym_eqs.at(erow, m * n + r) -= k0.at(c, m);
        }
      }
    Subspace symmetric = kernel(sym_eqs);
    Subspace cent_plus = meet(cent, symmetric);
    Subspace cent0_plus = meet(cent0, symmetric);
    CentroidReport::Quadratic q;
    q.dim_sym_part = cent_plus.dim();
    q.dim_sym_part0 = cent0_plus.dim();
    InvariantForms inv = sym_invariant_forms(l);
    q.sym_part_matches_invariants = (cent_plus.dim() == inv.invariants.dim());
    Mat g(WedgeTriples(n).size(), inv.invariants.dim());
    for (size_t i = 0; i < inv.invariants.dim(); ++i)
      g.set_col(i, koszul_cochain(l, inv.invariants.basis()[i]));
    q.red_matches_koszul_image = (out.dim_cent_red == rank(g));
    out.quadratic = q;
  }
  return out;
}

RadicalProbeReport radical_probe(const LieAlgebra& l) {
  const size_t n = l.dim();
  RadicalProbeReport out;
  InvariantForms inv = sym_invariant_forms(l);
  const size_t s = inv.invariants.dim();
  Subspace common = Subspace::full(n);
  for (size_t i = 0; i < s; ++i) common = meet(common, kernel(gram_of(n, inv.invariants.basis()[i])));
  out.common_radical = common;
  out.common_radical_dim = common.dim();
  out.best_form = Vec(SymPairs(n).size());
  out.best_rank = 0;
  auto consider = [&](const Vec& coeffs) {
    Vec form(inv.invariants.ambient());
    for (size_t i = 0; i < s; ++i) add_scaled(form, coeffs[i], inv.invariants.basis()[i]);
    size_t r = rank(gram_of(n, form));
    if (r > out.best_rank) {
      out.best_rank = r;
      out.best_form = form;
    }
  };
  if (s > 0) {
    const std::array<long, 5> weights{0, 1, -1, 2, -2};
    std::vector<size_t> idx;
    for (size_t i = 0; i < s; ++i) idx.push_back(i);
    // combinations over up to three basis forms
    auto scan = [&](const std::vector<size_t>& chosen) {
      Vec coeffs(s);
      size_t combos = 1;
      for (size_t t = 0; t < chosen.size(); ++t) combos *= weights.size();
      for (size_t code = 0; code < combos; ++code) {
        size_t c = code;
        for (size_t t = 0; t < chosen.size(); ++t) {
          coeffs[chosen[t]] = Rat(weights[c % weights.size()]);
          c /= weights.size();
        }
        consider(coeffs);
        for (size_t t = 0; t < chosen.size(); ++t) coeffs[chosen[t]] = Rat(0);
      }
    };
    for (size_t i = 0; i < s; ++i)
      for (size_t j = i; j < s; ++j)
        for (size_t k = j; k < s; ++k) scan({i, j, k});
  }
  out.radical_matches_common = (kernel(gram_of(n, out.best_form)) == common);
  return out;
}

TransferReport transfer_sequence(const LieAlgebra& l) {
  TransferReport out;
  const size_t n = l.dim();
  KModule triv = trivial_module(l, 1);
  KModule coad = coadjoint_module(l);
  KModule sym = sym_forms_module(l);
  Cohomology h2 = cohomology(l, triv, 2);
  Cohomology h1_coad = cohomology(l, coad, 1);
  InvariantForms inv = sym_invariant_forms(l);
  Cohomology h3 = cohomology(l, triv, 3);
  Cohomology h2_coad = cohomology(l, coad, 2);
  Cohomology h1_sym = cohomology(l, sym, 1);
  out.dim_h2 = h2.dim_h;
  out.dim_h1_coad = h1_coad.dim_h;
  out.dim_inv = inv.invariants.dim();
  out.dim_h3 = h3.dim_h;
  out.dim_h2_coad = h2_coad.dim_h;
  out.dim_h1_sym = h1_sym.dim_h;

  Mat curry2 = curry_head(l, triv, 1, 1);  // C^2 -> C^1(l, l*)
  Mat curry3 = curry_head(l, triv, 2, 1);  // C^3 -> C^2(l, l*)
  Mat s_map = symmetrize_map(l);           // C^1(l, l*) -> sym coords
  Mat curry_coad = curry_head(l, coad, 1, 1);
  Mat beta2 = block_values(n, s_map) * curry_coad;  // C^2(l,l*) -> C^1(l, sym)

  // sign conventions certified on the cochain level
  Mat d1 = ce_differential(l, triv, 1);
  Mat d2 = ce_differential(l, triv, 2);
  Mat d0_coad = ce_differential(l, coad, 0);
  Mat d1_coad = ce_differential(l, coad, 1);
  Mat d0_sym = ce_differential(l, sym, 0);
  if (!(curry2 * d1 == d0_coad * curry_head(l, triv, 0, 1)))
    throw std::logic_error("curried differential identity fails in low degree");
  if (!(curry3 * d2 == d1_coad * curry2))
    throw std::logic_error("curried differential identity fails in degree two");
  if (!(s_map * d0_coad).is_zero())
    throw std::logic_error("symmetrization must kill coboundaries of linear maps");
  if (!(beta2 * d1_coad == d0_sym * s_map))
    throw std::logic_error("symmetrized curry does not intertwine the differentials");
  out.cochain_composites_vanish = (s_map * curry2).is_zero() && (beta2 * curry3).is_zero();

  // descend to cohomology
  auto descend = [](const Mat& cochain_map, const Cohomology& src, const Cohomology& dst) {
    Mat m(dst.dim_h, src.dim_h);
    for (size_t i = 0; i < src.dim_h; ++i) {
      Vec v = cochain_map.apply(src.reps[i]);
      if (!dst.cocycles.contains(v))
        throw std::logic_error("descended map does not preserve cocycles");
      m.set_col(i, dst.class_proj.apply(v));
    }
    return m;
  };
  Mat a2 = descend(curry2, h2, h1_coad);
  Mat b1(inv.invariants.dim(), h1_coad.dim_h);
  for (size_t i = 0; i < h1_coad.dim_h; ++i) {
    Vec v = s_map.apply(h1_coad.reps[i]);
    if (!inv.invariants.contains(v))
      throw std::logic_error("symmetrized cocycle is not an invariant form");
    b1.set_col(i, inv.invariants.coords_of(v));
  }
  Mat g(h3.dim_h, inv.invariants.dim());
  for (size_t i = 0; i < inv.invariants.dim(); ++i) {
    Vec v = koszul_cochain(l, inv.invariants.basis()[i]);
    g.set_col(i, h3.class_proj.apply(v));
  }
  Mat a3 = descend(curry3, h3, h2_coad);
  Mat b2 = descend(beta2, h2_coad, h1_sym);

  out.head_injective = (kernel(a2).dim() == 0);
  out.exact_at_h1_coad = (image(a2) == kernel(b1));
  out.exact_at_invariants = (image(b1) == kernel(g));
  out.exact_at_h3 = (image(g) == kernel(a3));
  out.exact_at_h2_coad = (image(a3) == kernel(b2));
  out.head = std::move(a2);
  out.symmetrized = std::move(b1);
  out.koszul = std::move(g);
  out.curried = std::move(a3);
  out.tail = std::move(b2);
  return out;
}

}  // namespace curco
