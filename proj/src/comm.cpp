#include "curco/comm.hpp"

#include <sstream>

namespace curco {

namespace {

Vec tensor_of(size_t n, std::span<const Rat> a, std::span<const Rat> b) {
  Vec t(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) t[i * n + j] = a[i] * b[j];
  }
  return t;
}

Vec wedge_of(const WedgePairs& pairs, std::span<const Rat> a, std::span<const Rat> b) {
  Vec w(pairs.size());
  for (size_t i = 0; i < pairs.n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < pairs.n; ++j) {
      if (b[j].is_zero() || i == j) continue;
      Rat c = a[i] * b[j];
      if (pairs.sign(i, j) < 0) c = -c;
      w[pairs.index(i, j)] += c;
    }
  }
  return w;
}

}  // namespace

CommAlgebra CommAlgebra::make(size_t dim, std::vector<std::string> basis_names, Vec unit,
                              const std::vector<ProductEntry>& entries) {
  CommAlgebra a;
  a.dim_ = dim;
  if (basis_names.empty())
    for (size_t i = 0; i < dim; ++i) basis_names.push_back("a" + std::to_string(i));
  if (basis_names.size() != dim) throw validation_error("basis name count does not match dimension");
  a.names_ = std::move(basis_names);
  if (unit.size() != dim) throw validation_error("unit row length does not match dimension");
  a.unit_ = std::move(unit);
  a.table_.assign(dim * dim, Vec(dim));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) throw validation_error("product index out of range");
    if (e.i > e.j) throw validation_error("product table must list pairs with i <= j only");
    for (const auto& [k, c] : e.coeffs) {
      if (k >= dim) throw validation_error("product coefficient index out of range");
      a.table_[e.i * dim + e.j][k] += c;
    }
  }
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < i; ++j) a.table_[i * dim + j] = a.table_[j * dim + i];
  // unit law
  for (size_t i = 0; i < dim; ++i) {
    Vec ei(dim);
    ei[i] = Rat(1);
    if (a.product(a.unit_, ei) != ei)
      throw validation_error("unit law fails on basis element " + a.names_[i]);
  }
  // associativity on all basis triples
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) {
        Vec ek(dim);
        ek[k] = Rat(1);
        Vec ei(dim);
        ei[i] = Rat(1);
        Vec lhs = a.product(a.product(i, j), ek);
        Vec rhs = a.product(ei, a.product(j, k));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails on (" << a.names_[i] << "," << a.names_[j] << "," << a.names_[k]
             << ")";
          throw validation_error(os.str());
        }
      }
  return a;
}

Vec CommAlgebra::product(std::span<const Rat> a, std::span<const Rat> b) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j)
      if (!b[j].is_zero()) add_scaled(out, a[i] * b[j], product(i, j));
  }
  return out;
}

Mat CommAlgebra::mult(size_t i) const {
  Mat m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) m.set_col(j, product(i, j));
  return m;
}

DiagonalIdeal diagonal_ideal(const CommAlgebra& a) {
  const size_t n = a.dim();
  DiagonalIdeal out;
  Mat mu(n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mu.set_col(i * n + j, a.product(i, j));
  out.ideal = kernel(mu);
  std::vector<Vec> gens;
  for (size_t i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = Rat(1);
    for (size_t j = 0; j < n; ++j) {
      Vec ej(n);
      ej[j] = Rat(1);
      for (size_t k = 0; k < n; ++k) {
        Vec ek(n);
        ek[k] = Rat(1);
        Vec g = tensor_of(n, ei, a.product(j, k));
        Vec t = tensor_of(n, a.product(i, j), ek);
        for (size_t m = 0; m < g.size(); ++m) g[m] -= t[m];
        t = tensor_of(n, a.product(i, k), ej);
        for (size_t m = 0; m < g.size(); ++m) g[m] -= t[m];
        t = tensor_of(n, a.product(a.product(i, j), ek), a.unit());
        for (size_t m = 0; m < g.size(); ++m) g[m] += t[m];
        gens.push_back(std::move(g));
      }
    }
  }
  out.square = Subspace::span(gens, n * n);
  if (!out.ideal.contains(out.square))
    throw std::logic_error("square of the diagonal ideal escaped the ideal");
  return out;
}

KaehlerModule::KaehlerModule(const CommAlgebra& a) : ideal_(diagonal_ideal(a)) {
  const size_t n = a.dim();
  QuotientView view = quotient_view(ideal_.ideal, ideal_.square);
  dim_ = view.dim;
  class_proj_ = std::move(view.proj);
  d_ = Mat(dim_, n);
  for (size_t i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = Rat(1);
    Vec t = tensor_of(n, a.unit(), ei);
    Vec s = tensor_of(n, ei, a.unit());
    for (size_t m = 0; m < t.size(); ++m) t[m] -= s[m];
    d_.set_col(i, class_proj_.apply(t));
  }
  // A-action on classes: a.(b (x) c) = ab (x) c on representatives
  action_.assign(n, Mat(dim_, dim_));
  for (size_t i = 0; i < n; ++i) {
    Mat left = a.mult(i);
    for (size_t t = 0; t < dim_; ++t) {
      const Vec& rep = view.reps[t];
      Vec acted(n * n);
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
          const Rat& c = rep[p * n + q];
          if (c.is_zero()) continue;
          for (size_t r = 0; r < n; ++r)
            if (!left.at(r, p).is_zero()) acted[r * n + q] += c * left.at(r, p);
        }
      action_[i].set_col(t, class_proj_.apply(acted));
    }
  }
  // Leibniz on all basis pairs
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec lhs = d_.apply(a.product(i, j));
      Vec rhs = add(action_[i].apply(d_.col(j)), action_[j].apply(d_.col(i)));
      if (lhs != rhs)
        throw std::logic_error("Leibniz rule fails on (" + a.names()[i] + "," + a.names()[j] + ")");
    }
}

Vec KaehlerModule::act(std::span<const Rat> a, std::span<const Rat> w) const {
  Vec out(dim_);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) add_scaled(out, a[i], action_[i].apply(w));
  return out;
}

Vec KaehlerModule::class_of(std::span<const Rat> tensor_vec) const {
  if (!ideal_.ideal.contains(tensor_vec))
    throw std::invalid_argument("class_of: vector is not in the diagonal ideal");
  return class_proj_.apply(tensor_vec);
}

Subspace KaehlerModule::exact_part() const {
  Subspace s(dim_);
  for (size_t c = 0; c < d_.cols(); ++c) s.insert(d_.col(c));
  return s;
}

FirstHochschild first_hochschild(const CommAlgebra& a, const KaehlerModule& k) {
  const size_t n = a.dim();
  FirstHochschild out;
  std::vector<Vec> gens;
  for (size_t i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = Rat(1);
    for (size_t j = 0; j < n; ++j) {
      Vec ej(n);
      ej[j] = Rat(1);
      for (size_t l = 0; l < n; ++l) {
        Vec el(n);
        el[l] = Rat(1);
        Vec g = tensor_of(n, a.product(i, j), el);
        Vec t = tensor_of(n, a.product(i, l), ej);
        for (size_t m = 0; m < g.size(); ++m) g[m] += t[m];
        t = tensor_of(n, ei, a.product(j, l));
        for (size_t m = 0; m < g.size(); ++m) g[m] -= t[m];
        gens.push_back(std::move(g));
      }
    }
  }
  out.relations = Subspace::span(gens, n * n);
  out.quotient = quotient_view(Subspace::full(n * n), out.relations);
  // comparison map a (x) b -> a d(b) on tensor coordinates
  Mat theta(k.dim(), n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) theta.set_col(i * n + j, k.action(i).apply(k.d().col(j)));
  for (const auto& r : out.relations.basis())
    if (!is_zero_vec(theta.apply(r)))
      throw std::logic_error("comparison map does not kill the relation span");
  if (out.quotient.dim != k.dim())
    throw std::logic_error("first Hochschild homology dimension differs from the differential module");
  Mat iso(k.dim(), out.quotient.dim);
  for (size_t t = 0; t < out.quotient.dim; ++t) iso.set_col(t, theta.apply(out.quotient.reps[t]));
  if (rank(iso) != k.dim())
    throw std::logic_error("comparison map fails to be an isomorphism");
  out.iso_to_kaehler = std::move(iso);
  return out;
}

CyclicSpans cyclic_spans(const CommAlgebra& a) {
  const size_t n = a.dim();
  WedgePairs pairs(n);
  CyclicSpans out{Subspace(pairs.size()), Subspace(pairs.size())};
  for (size_t i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = Rat(1);
    for (size_t j = 0; j < n; ++j) {
      Vec ej(n);
      ej[j] = Rat(1);
      for (size_t l = 0; l < n; ++l) {
        Vec el(n);
        el[l] = Rat(1);
        Vec t = wedge_of(pairs, a.product(i, j), el);
        t = add(t, wedge_of(pairs, a.product(j, l), ei));
        t = add(t, wedge_of(pairs, a.product(l, i), ej));
        out.full.insert(t);
        Vec t0 = sub(t, wedge_of(pairs, a.product(a.product(i, j), el), a.unit()));
        out.reduced.insert(std::move(t0));
      }
    }
  }
  return out;
}

Mat wedge_differential(const CommAlgebra& a, const KaehlerModule& k) {
  const size_t n = a.dim();
  WedgePairs pairs(n);
  Mat g(k.dim(), pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    Vec v = sub(k.action(i).apply(k.d().col(j)), k.action(j).apply(k.d().col(i)));
    g.set_col(p, v);
  }
  CyclicSpans spans = cyclic_spans(a);
  if (image(g).dim() != k.dim())
    throw std::logic_error("wedge differential is not surjective onto the differential module");
  if (!(kernel(g) == spans.reduced))
    throw std::logic_error("kernel of the wedge differential differs from the reduced cyclic span");
  return g;
}

Subspace sym_mult_kernel(const CommAlgebra& a) {
  const size_t n = a.dim();
  SymPairs sym(n);
  Mat mu(n, sym.size());
  for (size_t c = 0; c < sym.size(); ++c) {
    auto [i, j] = sym.list[c];
    mu.set_col(c, a.product(i, j));
  }
  Subspace ker = kernel(mu);
  // the diagonal ideal splits as wedge part plus this kernel
  Mat we = wedge_embed_tensor(n);
  Mat se = sym_embed_tensor(n);
  Subspace wedge_part(n * n);
  for (size_t c = 0; c < we.cols(); ++c) wedge_part.insert(we.col(c));
  Subspace ker_part(n * n);
  for (const auto& r : ker.basis()) ker_part.insert(se.apply(r));
  DiagonalIdeal ideal = diagonal_ideal(a);
  if (meet(wedge_part, ker_part).dim() != 0 || !(join(wedge_part, ker_part) == ideal.ideal))
    throw std::logic_error("diagonal ideal fails to split into wedge and symmetric kernel parts");
  return ker;
}

CyclicHomology first_cyclic_homology(const CommAlgebra& a, const KaehlerModule& k) {
  const size_t n = a.dim();
  CyclicHomology out;
  out.by_exact = quotient_view(Subspace::full(k.dim()), k.exact_part());
  out.dim = out.by_exact.dim;
  CyclicSpans spans = cyclic_spans(a);
  WedgePairs pairs(n);
  size_t by_wedge = pairs.size() - spans.full.dim();
  out.dims_agree = (by_wedge == out.dim);
  // induced map [a^b] -> [a d(b)]
  Mat m(out.dim, pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    m.set_col(p, out.by_exact.proj.apply(k.action(i).apply(k.d().col(j))));
  }
  bool kills = true;
  for (const auto& r : spans.full.basis())
    if (!is_zero_vec(m.apply(r))) kills = false;
  out.wedge_iso_ok = kills && (rank(m) == out.dim) && out.dims_agree;
  return out;
}

Mat wedge_embed_tensor(size_t n) {
  WedgePairs pairs(n);
  Mat e(n * n, pairs.size());
  Rat half(1, 2);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs.list[p];
    e.at(i * n + j, p) = half;
    e.at(j * n + i, p) = -half;
  }
  return e;
}

Mat sym_embed_tensor(size_t n) {
  SymPairs sym(n);
  Mat e(n * n, sym.size());
  Rat half(1, 2);
  for (size_t p = 0; p < sym.size(); ++p) {
    auto [i, j] = sym.list[p];
    if (i == j) {
      e.at(i * n + i, p) = Rat(1);
    } else {
      e.at(i * n + j, p) = half;
      e.at(j * n + i, p) = half;
    }
  }
  return e;
}

}  // namespace curco
