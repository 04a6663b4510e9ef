#include "curco/lie.hpp"

#include <sstream>

#include "curco/indexing.hpp"

namespace curco {

LieAlgebra LieAlgebra::make(size_t dim, std::vector<std::string> basis_names,
                            const std::vector<BracketEntry>& entries) {
  LieAlgebra l;
  l.dim_ = dim;
  if (basis_names.empty())
    for (size_t i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
  if (basis_names.size() != dim) throw validation_error("basis name count does not match dimension");
  l.names_ = std::move(basis_names);
  l.table_.assign(dim * dim, Vec(dim));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) throw validation_error("bracket index out of range");
    if (e.i == e.j) {
      for (const auto& [k, c] : e.coeffs)
        if (!c.is_zero())
          throw validation_error("antisymmetry violation: nonzero bracket [" + l.names_[e.i] + "," +
                                 l.names_[e.i] + "]");
      continue;
    }
    if (e.i > e.j) throw validation_error("bracket table must list pairs with i < j only");
    for (const auto& [k, c] : e.coeffs) {
      if (k >= dim) throw validation_error("bracket coefficient index out of range");
      l.table_[e.i * dim + e.j][k] += c;
    }
  }
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) l.table_[j * dim + i][k] = -l.table_[i * dim + j][k];
  // Jacobi identity on all basis triples, reporting the first violation
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      for (size_t k = j + 1; k < dim; ++k) {
        Vec acc(dim);
        auto cyc = [&](size_t a, size_t b, size_t c) {
          const Vec& ab = l.bracket(a, b);
          for (size_t m = 0; m < dim; ++m)
            if (!ab[m].is_zero()) add_scaled(acc, ab[m], l.bracket(m, c));
        };
        cyc(i, j, k);
        cyc(j, k, i);
        cyc(k, i, j);
        if (!is_zero_vec(acc)) {
          std::ostringstream os;
          os << "Jacobi identity fails on (" << l.names_[i] << "," << l.names_[j] << "," << l.names_[k]
             << ")";
          throw validation_error(os.str());
        }
      }
  return l;
}

Vec LieAlgebra::bracket(std::span<const Rat> x, std::span<const Rat> y) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      add_scaled(out, x[i] * y[j], bracket(i, j));
    }
  }
  return out;
}

Mat LieAlgebra::ad(size_t i) const {
  Mat m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) m.set_col(j, bracket(i, j));
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j)
      if (!is_zero_vec(bracket(i, j))) return false;
  return true;
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  Subspace s(l.dim());
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t j = i + 1; j < l.dim(); ++j) s.insert(l.bracket(i, j));
  return s;
}

Subspace center(const LieAlgebra& l) {
  // x central iff (ad x)(e_j) = 0 for all j; stack those conditions
  const size_t n = l.dim();
  Mat m(n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      const Vec& b = l.bracket(i, j);
      for (size_t k = 0; k < n; ++k) m.at(j * n + k, i) = b[k];
    }
  return kernel(m);
}

KModule::KModule(const LieAlgebra& l, std::vector<Mat> action) : action_(std::move(action)) {
  if (action_.size() != l.dim()) throw validation_error("module needs one action matrix per basis element");
  dim_ = action_.empty() ? 0 : action_[0].rows();
  trivial_ = true;
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw validation_error("module action matrices must be square of equal size");
    if (!m.is_zero()) trivial_ = false;
  }
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t j = i + 1; j < l.dim(); ++j) {
      Mat lhs(dim_, dim_);
      const Vec& b = l.bracket(i, j);
      for (size_t k = 0; k < l.dim(); ++k)
        if (!b[k].is_zero()) lhs = lhs + action_[k] * b[k];
      Mat rhs = action_[i] * action_[j] - action_[j] * action_[i];
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "module action is not a homomorphism on pair (" << l.names()[i] << "," << l.names()[j] << ")";
        throw validation_error(os.str());
      }
    }
}

KModule trivial_module(const LieAlgebra& l, size_t z_dim) {
  return KModule(l, std::vector<Mat>(l.dim(), Mat(z_dim, z_dim)));
}

KModule adjoint_module(const LieAlgebra& l) {
  std::vector<Mat> act;
  for (size_t i = 0; i < l.dim(); ++i) act.push_back(l.ad(i));
  return KModule(l, std::move(act));
}

KModule coadjoint_module(const LieAlgebra& l) {
  std::vector<Mat> act;
  for (size_t i = 0; i < l.dim(); ++i) act.push_back(l.ad(i).transposed() * Rat(-1));
  return KModule(l, std::move(act));
}

KModule sym_forms_module(const LieAlgebra& l) {
  const size_t n = l.dim();
  SymPairs sym(n);
  std::vector<Mat> act(n, Mat(sym.size(), sym.size()));
  for (size_t x = 0; x < n; ++x) {
    for (size_t col = 0; col < sym.size(); ++col) {
      auto [a, b] = sym.list[col];
      // basis form k_ab has k(e_a,e_b)=k(e_b,e_a)=1; evaluate x.k on pairs
      for (size_t row = 0; row < sym.size(); ++row) {
        auto [y, z] = sym.list[row];
        Rat v;
        const Vec& xy = l.bracket(x, y);
        const Vec& xz = l.bracket(x, z);
        // -k([x,y],z) term
        if (a == b) {
          if (z == a) v -= xy[a];
          if (y == a) v -= xz[a];
        } else {
          if (z == a) v -= xy[b];
          if (z == b) v -= xy[a];
          if (y == a) v -= xz[b];
          if (y == b) v -= xz[a];
        }
        if (!v.is_zero()) act[x].at(row, col) = v;
      }
    }
  }
  return KModule(l, std::move(act));
}

}  // namespace curco
