#include "curco/catalog.hpp"

#include <stdexcept>

#include "curco/cochain.hpp"
#include "curco/forms.hpp"

namespace curco {

namespace {

long parse_param(const std::vector<std::string>& params, size_t idx, const std::string& what) {
  if (idx >= params.size()) throw std::invalid_argument("missing parameter: " + what);
  try {
    size_t pos = 0;
    long v = std::stol(params[idx], &pos);
    if (pos != params[idx].size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("bad integer parameter '" + params[idx] + "' for " + what);
  }
}

// representative of i mod 3 in {-1,0,1}
long hat(long i) {
  long r = ((i % 3) + 3) % 3;
  return ((r + 1) % 3) - 1;
}

LieEntry make_oscillator() {
  // basis x, y, c, d with [x,y] = c, [d,x] = x, [d,y] = -y
  std::vector<BracketEntry> entries;
  entries.push_back({0, 1, {{2, Rat(1)}}});
  entries.push_back({0, 3, {{0, Rat(-1)}}});
  entries.push_back({1, 3, {{1, Rat(1)}}});
  LieEntry e;
  e.name = "oscillator";
  e.algebra = LieAlgebra::make(4, {"x", "y", "c", "d"}, entries);
  SymPairs sym(4);
  Vec k1(sym.size());
  k1[sym.index(3, 3)] = Rat(1);
  Vec k2(sym.size());
  k2[sym.index(0, 1)] = Rat(1);
  k2[sym.index(2, 3)] = Rat(1);
  e.form_witnesses["kappa1"] = std::move(k1);
  e.form_witnesses["kappa2"] = std::move(k2);
  return e;
}

LieEntry make_pelc(long n) {
  if (n < 1) throw std::invalid_argument("pelc: parameter must be >= 1");
  const size_t dim = size_t(n) + 1;
  std::vector<std::string> names;
  for (size_t i = 0; i < dim; ++i) names.push_back("T" + std::to_string(i));
  std::vector<BracketEntry> entries;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j) {
      long h = hat(long(i) - long(j));
      if (h == 0 || i + j > size_t(n)) continue;
      entries.push_back({i, j, {{i + j, Rat(h)}}});
    }
  LieEntry e;
  e.name = "pelc";
  e.algebra = LieAlgebra::make(dim, std::move(names), entries);
  if (n % 3 == 0) {
    SymPairs sym(dim);
    Vec kappa(sym.size());
    for (size_t i = 0; i < dim; ++i)
      if (size_t(n) >= i && size_t(n) - i >= i) kappa[sym.index(i, size_t(n) - i)] = Rat(1);
    e.form_witnesses["kappa"] = std::move(kappa);
    WedgePairs pairs(dim);
    Vec eta(pairs.size());
    for (size_t i = 0; i < dim; ++i) {
      size_t j = size_t(n) - i;
      if (j <= i) continue;  // a_{n/2} vanishes and lower pairs repeat by antisymmetry
      // a_i = (2/n) i - 1
      eta[pairs.index(i, j)] = Rat(2 * long(i), n) - Rat(1);
    }
    e.cochain_witnesses["eta"] = std::move(eta);
  }
  return e;
}

}  // namespace

LieEntry twisted_cotangent(const LieAlgebra& base, const Vec& twist) {
  const size_t m = base.dim();
  WedgeTriples triples(m);
  if (twist.size() != triples.size())
    throw std::invalid_argument("cotangent twist must be given in wedge triple coordinates");
  if (!is_zero_vec(ce_differential(base, trivial_module(base, 1), 3).apply(twist)))
    throw std::invalid_argument("cotangent twist must be a closed 3-cochain");
  // basis: duals first, then the base
  std::vector<std::string> names;
  for (size_t i = 0; i < m; ++i) names.push_back(base.names()[i] + "*");
  for (size_t i = 0; i < m; ++i) names.push_back(base.names()[i]);
  std::vector<BracketEntry> entries;
  // [f_i, x_j] = sum_l c^i_{jl} f_l
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      BracketEntry e;
      e.i = i;
      e.j = m + j;
      for (size_t l = 0; l < m; ++l) {
        const Rat& c = base.bracket(j, l)[i];
        if (!c.is_zero()) e.coeffs.emplace_back(l, c);
      }
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  // [x_i, x_j] = [x_i,x_j]_base + sum_l twist(x_i,x_j,x_l) f_l
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      BracketEntry e;
      e.i = m + i;
      e.j = m + j;
      const Vec& br = base.bracket(i, j);
      for (size_t l = 0; l < m; ++l)
        if (!br[l].is_zero()) e.coeffs.emplace_back(m + l, br[l]);
      for (size_t l = 0; l < m; ++l) {
        if (l == i || l == j) continue;
        size_t a = i, b = j, c = l;
        int sign = 1;
        if (b > c) {
          std::swap(b, c);
          sign = -sign;
        }
        if (a > b) {
          std::swap(a, b);
          sign = -sign;
        }
        if (b > c) {
          std::swap(b, c);
          sign = -sign;
        }
        Rat v = twist[triples.index(a, b, c)];
        if (!v.is_zero()) e.coeffs.emplace_back(l, sign > 0 ? v : -v);
      }
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  LieEntry out;
  out.name = "cotangent";
  out.algebra = LieAlgebra::make(2 * m, std::move(names), entries);
  SymPairs sym(2 * m);
  Vec kappa(sym.size());
  for (size_t i = 0; i < m; ++i) kappa[sym.index(i, m + i)] = Rat(1);
  out.form_witnesses["kappa"] = std::move(kappa);
  return out;
}

LieEntry lie_catalog(const std::string& name, const std::vector<std::string>& params) {
  if (name == "abelian") {
    long n = parse_param(params, 0, "abelian dimension");
    if (n < 0) throw std::invalid_argument("abelian: dimension must be >= 0");
    LieEntry e;
    e.name = "abelian";
    e.algebra = LieAlgebra::make(size_t(n), {}, {});
    return e;
  }
  if (name == "heisenberg") {
    LieEntry e;
    e.name = "heisenberg";
    e.algebra = LieAlgebra::make(3, {"x", "y", "c"}, {{0, 1, {{2, Rat(1)}}}});
    return e;
  }
  if (name == "oscillator") return make_oscillator();
  if (name == "sl2") {
    // basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    std::vector<BracketEntry> entries;
    entries.push_back({0, 1, {{2, Rat(1)}}});
    entries.push_back({0, 2, {{0, Rat(-2)}}});
    entries.push_back({1, 2, {{1, Rat(2)}}});
    LieEntry e;
    e.name = "sl2";
    e.algebra = LieAlgebra::make(3, {"e", "f", "h"}, entries);
    SymPairs sym(3);
    Vec killing(sym.size());
    killing[sym.index(0, 1)] = Rat(4);
    killing[sym.index(2, 2)] = Rat(8);
    e.form_witnesses["killing"] = std::move(killing);
    return e;
  }
  if (name == "pelc") return make_pelc(parse_param(params, 0, "pelc parameter"));
  if (name == "cotangent") {
    if (params.empty()) throw std::invalid_argument("cotangent: missing base algebra name");
    LieEntry base = lie_catalog(params[0], {params.begin() + 1, params.end()});
    LieEntry out = twisted_cotangent(base.algebra, Vec(WedgeTriples(base.algebra.dim()).size()));
    out.name = "cotangent";
    return out;
  }
  throw std::invalid_argument("unknown Lie algebra catalog entry '" + name + "'");
}

CommAlgebra comm_catalog(const std::string& name, const std::vector<std::string>& params) {
  if (name == "field") {
    return CommAlgebra::make(1, {"1"}, {Rat(1)}, {{0, 0, {{0, Rat(1)}}}});
  }
  if (name == "dual_numbers" || name == "trunc_poly") {
    long n = (name == "dual_numbers") ? 2 : parse_param(params, 0, "truncation order");
    if (n < 1) throw std::invalid_argument("trunc_poly: order must be >= 1");
    std::vector<std::string> names{"1"};
    for (long i = 1; i < n; ++i) names.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    if (name == "dual_numbers") names = {"1", "eps"};
    Vec unit(static_cast<size_t>(n), Rat(0));
    unit[0] = Rat(1);
    std::vector<ProductEntry> entries;
    for (size_t i = 0; i < size_t(n); ++i)
      for (size_t j = i; j < size_t(n); ++j)
        if (i + j < size_t(n)) entries.push_back({i, j, {{i + j, Rat(1)}}});
    return CommAlgebra::make(size_t(n), std::move(names), std::move(unit), entries);
  }
  if (name == "function_alg") {
    long n = parse_param(params, 0, "number of points");
    if (n < 1) throw std::invalid_argument("function_alg: need at least one point");
    std::vector<std::string> names;
    for (long i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    Vec unit(static_cast<size_t>(n), Rat(1));
    std::vector<ProductEntry> entries;
    for (size_t i = 0; i < size_t(n); ++i) entries.push_back({i, i, {{i, Rat(1)}}});
    return CommAlgebra::make(size_t(n), std::move(names), std::move(unit), entries);
  }
  if (name == "group_alg_z2") {
    std::vector<ProductEntry> entries{{0, 0, {{0, Rat(1)}}}, {0, 1, {{1, Rat(1)}}}, {1, 1, {{0, Rat(1)}}}};
    return CommAlgebra::make(2, {"1", "s"}, {Rat(1), Rat(0)}, entries);
  }
  throw std::invalid_argument("unknown commutative algebra catalog entry '" + name + "'");
}

PelcWitnessReport pelc_exactness_witness(size_t m) {
  if (m < 1) throw std::invalid_argument("pelc witness: parameter must be >= 1");
  PelcWitnessReport out;
  out.n = 3 * m;
  LieEntry e = make_pelc(long(out.n));
  const Vec& kappa = e.form_witnesses.at("kappa");
  const Vec& eta = e.cochain_witnesses.at("eta");
  Vec gk = koszul_cochain(e.algebra, kappa);
  Vec deta = ce_differential(e.algebra, trivial_module(e.algebra, 1), 2).apply(eta);
  out.primitive_ok = true;
  for (size_t t = 0; t < gk.size(); ++t)
    if (deta[t] != -gk[t]) out.primitive_ok = false;
  out.nondegenerate = !det(gram_of(e.algebra.dim(), kappa)).is_zero();
  return out;
}

std::pair<std::string, std::vector<std::string>> split_catalog_ref(const std::string& ref) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = ref.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(ref.substr(start));
      break;
    }
    parts.push_back(ref.substr(start, colon - start));
    start = colon + 1;
  }
  std::string name = parts.empty() ? "" : parts[0];
  return {name, {parts.begin() + (parts.empty() ? 0 : 1), parts.end()}};
}

std::vector<CatalogInfo> catalog_list() {
  return {
      {"abelian:N", "lie", "abelian Lie algebra of dimension N"},
      {"heisenberg", "lie", "dim 3, [x,y] = c"},
      {"oscillator", "lie", "dim 4 split oscillator; forms kappa1, kappa2"},
      {"sl2", "lie", "dim 3 simple; form killing"},
      {"pelc:N", "lie", "dim N+1 solvable family; kappa/eta attached when 3 | N"},
      {"cotangent:BASE", "lie", "dual semidirect extension of a catalog base; form kappa"},
      {"field", "commutative", "the base field, dim 1"},
      {"dual_numbers", "commutative", "K[eps]/(eps^2)"},
      {"trunc_poly:N", "commutative", "K[t]/(t^N)"},
      {"function_alg:N", "commutative", "K^N with pointwise product"},
      {"group_alg_z2", "commutative", "group algebra of Z/2"},
  };
}

}  // namespace curco
