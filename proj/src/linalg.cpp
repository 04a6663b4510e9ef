#include "curco/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace curco {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Vec Mat::row(size_t r) const {
  Vec v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Mat::set_row(size_t r, const Vec& v) {
  for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Mat::set_col(size_t c, const Vec& v) {
  for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Mat::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  Vec w(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    Rat acc;
    for (size_t c = 0; c < cols_; ++c) {
      const Rat& m = at(r, c);
      if (!m.is_zero() && !v[c].is_zero()) acc += m * v[c];
    }
    w[r] = std::move(acc);
  }
  return w;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  Mat out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& m = at(i, k);
      if (m.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += m * o.at(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum size mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum size mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::operator*(const Rat& s) const {
  Mat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x.is_zero(); });
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!g.domain.empty() && !f.codomain.empty() && g.domain != f.codomain)
    throw std::invalid_argument("composition label mismatch: '" + f.codomain + "' vs '" + g.domain + "'");
  return LinearMap{g.mat * f.mat, f.domain, g.codomain};
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Rat(1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec v(a);
  for (size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec v(a);
  for (size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec w(v);
  for (auto& x : w) x *= c;
  return w;
}

void add_scaled(Vec& target, const Rat& c, const Vec& v) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < target.size(); ++i)
    if (!v[i].is_zero()) target[i] += c * v[i];
}

bool is_zero_vec(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

Subspace Subspace::full(size_t ambient) {
  Subspace s(ambient);
  for (size_t i = 0; i < ambient; ++i) s.insert(unit_vec(ambient, i));
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("span: row length does not match ambient dimension");
    s.insert(v);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient dimension mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Rat f = c;  // pivot entries are 1
    const Vec& prow = rows_[r];
    for (size_t k = pivots_[r]; k < ambient_; ++k)
      if (!prow[k].is_zero()) v[k] -= f * prow[k];
  }
  return v;
}

bool Subspace::contains(std::span<const Rat> v) const {
  return is_zero_vec(reduce(Vec(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::coords_of(std::span<const Rat> v) const {
  Vec c(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  size_t lead = ambient_;
  for (size_t k = 0; k < ambient_; ++k)
    if (!v[k].is_zero()) {
      lead = k;
      break;
    }
  if (lead == ambient_) return false;
  // normalize the new pivot to 1
  Rat inv = v[lead].inv();
  for (size_t k = lead; k < ambient_; ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  // eliminate the new pivot column from existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][lead];
    if (c.is_zero()) continue;
    for (size_t k = lead; k < ambient_; ++k)
      if (!v[k].is_zero()) rows_[r][k] -= c * v[k];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace kernel(const Mat& m) {
  // reduce the row space first; the kernel only depends on it
  Subspace rowspace(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) rowspace.insert(m.row(r));
  const auto& rows = rowspace.basis();
  const auto& piv = rowspace.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : piv) is_pivot[p] = true;
  Subspace ker(m.cols());
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Rat(1);
    for (size_t r = 0; r < rows.size(); ++r) v[piv[r]] = -rows[r][f];
    ker.insert(std::move(v));
  }
  return ker;
}

Subspace image(const Mat& m) {
  Subspace im(m.rows());
  for (size_t c = 0; c < m.cols(); ++c) im.insert(m.col(c));
  return im;
}

Subspace meet(const Subspace& s, const Subspace& t) {
  if (s.ambient() != t.ambient()) throw std::invalid_argument("meet: ambient dimension mismatch");
  const size_t n = s.ambient(), a = s.dim(), b = t.dim();
  // solve x·S - y·T = 0; the meet is spanned by the x·S
  Mat m(n, a + b);
  for (size_t i = 0; i < a; ++i) m.set_col(i, s.basis()[i]);
  for (size_t j = 0; j < b; ++j) {
    Vec col = t.basis()[j];
    for (auto& x : col) x = -x;
    m.set_col(a + j, col);
  }
  Subspace out(n);
  Subspace ker = kernel(m);
  for (const auto& k : ker.basis()) {
    Vec v(n);
    for (size_t i = 0; i < a; ++i) add_scaled(v, k[i], s.basis()[i]);
    out.insert(std::move(v));
  }
  return out;
}

Subspace join(const Subspace& s, const Subspace& t) {
  if (s.ambient() != t.ambient()) throw std::invalid_argument("join: ambient dimension mismatch");
  Subspace out = s;
  for (const auto& r : t.basis()) out.insert(r);
  return out;
}

Mat quotient_map(size_t ambient, const Subspace& s) {
  if (s.ambient() != ambient) throw std::invalid_argument("quotient_map: ambient dimension mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (size_t p : s.pivots()) is_pivot[p] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat q(free.size(), ambient);
  for (size_t j = 0; j < free.size(); ++j) {
    q.at(j, free[j]) = Rat(1);
    for (size_t r = 0; r < s.dim(); ++r) q.at(j, s.pivots()[r]) = -s.basis()[r][free[j]];
  }
  return q;
}

size_t rank(const Mat& m) {
  Subspace rowspace(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) rowspace.insert(m.row(r));
  return rowspace.dim();
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const size_t n = m.rows();
  std::vector<Vec> a(n);
  for (size_t i = 0; i < n; ++i) a[i] = m.row(i);
  Rat d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv = a[col][col].inv();
    for (size_t r = col + 1; r < n; ++r) {
      Rat f = a[r][col] * inv;
      if (f.is_zero()) continue;
      for (size_t k = col; k < n; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const size_t n = m.rows();
  // Gauss-Jordan on [m | I]
  std::vector<Vec> a(n, Vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = Rat(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    Rat inv = a[col][col].inv();
    for (size_t k = 0; k < 2 * n; ++k)
      if (!a[col][k].is_zero()) a[col][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a[r][col];
      if (f.is_zero()) continue;
      for (size_t k = col; k < 2 * n; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  Mat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
  return out;
}

std::optional<Vec> solve(const Mat& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  const size_t n = a.cols();
  Subspace aug(n + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    Vec row(n + 1);
    for (size_t c = 0; c < n; ++c) row[c] = a.at(r, c);
    row[n] = b[r];
    aug.insert(std::move(row));
  }
  Vec x(n);
  for (size_t r = 0; r < aug.dim(); ++r) {
    size_t p = aug.pivots()[r];
    if (p == n) return std::nullopt;  // inconsistent system
    x[p] = aug.basis()[r][n];
  }
  return x;
}

QuotientView quotient_view(const Subspace& z, const Subspace& b) {
  if (z.ambient() != b.ambient()) throw std::invalid_argument("quotient_view: ambient mismatch");
  if (!z.contains(b)) throw std::invalid_argument("quotient_view: denominator not contained in numerator");
  const size_t n = z.ambient();
  QuotientView view;
  Subspace work = b;
  for (const auto& row : z.basis())
    if (work.insert(row)) view.reps.push_back(row);
  view.dim = view.reps.size();
  // complete [b; reps] to a basis of the ambient space with standard vectors
  std::vector<Vec> basis_rows;
  for (const auto& r : b.basis()) basis_rows.push_back(r);
  for (const auto& r : view.reps) basis_rows.push_back(r);
  Subspace filled = work;
  std::vector<Vec> completion;
  for (size_t i = 0; i < n && filled.dim() < n; ++i) {
    Vec e = unit_vec(n, i);
    if (filled.insert(e)) completion.push_back(std::move(e));
  }
  for (auto& r : completion) basis_rows.push_back(std::move(r));
  // coordinates w.r.t. the row basis M: t with v = M^T t, i.e. t = (M^T)^{-1} v
  Mat mt(n, n);
  for (size_t j = 0; j < n; ++j) mt.set_col(j, basis_rows[j]);
  auto inv = inverse(mt);
  if (!inv) throw std::logic_error("quotient_view: completed basis not invertible");
  Mat proj(view.dim, n);
  for (size_t i = 0; i < view.dim; ++i)
    for (size_t c = 0; c < n; ++c) proj.at(i, c) = inv->at(b.dim() + i, c);
  view.proj = std::move(proj);
  return view;
}

}  // namespace curco
