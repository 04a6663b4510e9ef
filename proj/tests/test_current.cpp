#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curco/catalog.hpp"
#include "curco/current.hpp"

using namespace curco;

namespace {

std::mt19937_64 rng(987654);

Rat random_rat() {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  return Rat(num(rng), den(rng));
}

CommAlgebra comm(const std::string& ref) {
  auto [name, params] = split_catalog_ref(ref);
  return comm_catalog(name, params);
}

LieAlgebra lie(const std::string& ref) {
  auto [name, params] = split_catalog_ref(ref);
  return lie_catalog(name, params).algebra;
}

// a random functional on the wedge square vanishing on the boundaries
CochainTriple random_cocycle(const CurrentAlgebra& cur, const BoundaryData& bd) {
  Mat q = quotient_map(cur.wedge_g().size(), bd.brute);
  Mat func(1, cur.wedge_g().size());
  Vec coeff(q.rows());
  for (auto& c : coeff) c = random_rat();
  for (size_t t = 0; t < cur.wedge_g().size(); ++t) {
    Rat v;
    for (size_t r = 0; r < q.rows(); ++r)
      if (!coeff[r].is_zero() && !q.at(r, t).is_zero()) v += coeff[r] * q.at(r, t);
    func.at(0, t) = v;
  }
  return extract(cur, func);
}

CochainTriple random_triple(const CurrentAlgebra& cur, size_t z_dim) {
  CochainTriple f = CochainTriple::zero(cur, z_dim);
  auto fill = [&](Mat& m) {
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_rat();
  };
  fill(f.f1);
  fill(f.f2);
  fill(f.f3);
  return f;
}

}  // namespace

TEST_CASE("current algebra over the base field reproduces the fiber") {
  CurrentAlgebra cur(comm("field"), lie("heisenberg"));
  CHECK(cur.algebra().dim() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) CHECK(cur.algebra().bracket(i, j) == cur.fiber().bracket(i, j));
  // degenerate components; the middle projection is the identity
  CHECK(cur.dim_c1() == 0);
  CHECK(cur.dim_c3() == 0);
  CHECK(cur.dim_c2() == cur.wedge_k().size());
  CHECK(cur.p2() == Mat::identity(cur.wedge_k().size()));
}

TEST_CASE("dimensions of current algebras and their commutators") {
  CurrentAlgebra c1(comm("dual_numbers"), lie("heisenberg"));
  CHECK(c1.algebra().dim() == 6);
  CHECK(derived_subalgebra(c1.algebra()).dim() == 2);

  CurrentAlgebra c2(comm("dual_numbers"), lie("oscillator"));
  CHECK(c2.algebra().dim() == 8);
  CHECK(derived_subalgebra(c2.algebra()).dim() == 6);
}

TEST_CASE("decomposition dimension identity and round trips") {
  for (const char* aref : {"dual_numbers", "trunc_poly:3", "function_alg:2"})
    for (const char* kref : {"abelian:2", "heisenberg", "sl2"}) {
      CurrentAlgebra cur(comm(aref), lie(kref));
      size_t n = cur.scalars().dim(), nk = cur.fiber().dim();
      CHECK(cur.wedge_g().size() ==
            binomial(n, 2) * binomial(nk + 1, 2) + n * binomial(nk, 2) +
                cur.sym_kernel().dim() * binomial(nk, 2));
      // sections invert the projections on random elements
      for (int trial = 0; trial < 5; ++trial) {
        Vec w(cur.wedge_g().size());
        for (auto& x : w) x = random_rat();
        Vec back = add(add(cur.s1().apply(cur.p1().apply(w)), cur.s2().apply(cur.p2().apply(w))),
                       cur.s3().apply(cur.p3().apply(w)));
        CHECK(back == w);
      }
    }
}

TEST_CASE("cycles of a current algebra with abelian fiber fill the wedge square") {
  CurrentAlgebra cur(comm("dual_numbers"), lie("abelian:2"));
  Subspace z = cycles_decomposed(cur);
  CHECK(z.dim() == cur.wedge_g().size());
}

TEST_CASE("cycles over the base field reduce to the fiber cycles") {
  CurrentAlgebra cur(comm("field"), lie("oscillator"));
  Subspace z = cycles_decomposed(cur);
  Subspace zk = kernel(wedge_bracket(cur.fiber()));
  CHECK(z.dim() == zk.dim());
}

TEST_CASE("boundary families match the brute-force boundaries") {
  for (const char* aref : {"field", "dual_numbers", "function_alg:2"})
    for (const char* kref : {"abelian:2", "heisenberg", "oscillator", "sl2"}) {
      CAPTURE(aref);
      CAPTURE(kref);
      CurrentAlgebra cur(comm(aref), lie(kref));
      BoundaryData bd = boundary_data(cur);
      CHECK(bd.families_match);
      if (cur.fiber().is_abelian()) CHECK(bd.brute.dim() == 0);
    }
}

TEST_CASE("projections preserve the boundaries as the component description says") {
  CurrentAlgebra cur(comm("dual_numbers"), lie("oscillator"));
  BoundaryData bd = boundary_data(cur);
  // p1 + p2 and p3 keep boundaries inside boundaries
  for (const auto& b : bd.brute.basis()) {
    Vec part12 = add(cur.s1().apply(cur.p1().apply(b)), cur.s2().apply(cur.p2().apply(b)));
    CHECK(bd.brute.contains(part12));
    CHECK(bd.brute.contains(cur.s3().apply(cur.p3().apply(b))));
  }
  // the middle projection lands exactly on A (x) B_2(k)
  Subspace mid(cur.dim_c2());
  for (const auto& b : bd.brute.basis()) mid.insert(cur.p2().apply(b));
  Subspace expected(cur.dim_c2());
  Subspace b2k = image(wedge_boundary(cur.fiber()));
  for (size_t i = 0; i < cur.scalars().dim(); ++i)
    for (const auto& w : b2k.basis()) {
      Vec v(cur.dim_c2());
      for (size_t wk = 0; wk < cur.wedge_k().size(); ++wk) v[cur.c2_index(i, wk)] = w[wk];
      expected.insert(std::move(v));
    }
  CHECK(mid == expected);
  // the third projection lands exactly on I_A (x) (k ^ k')
  Subspace third(cur.dim_c3());
  for (const auto& b : bd.brute.basis()) third.insert(cur.p3().apply(b));
  WedgePairs pk(cur.fiber().dim());
  Subspace kwk(pk.size());
  for (size_t x = 0; x < cur.fiber().dim(); ++x)
    for (const auto& w : cur.derived_fiber().basis()) {
      Vec v(pk.size());
      for (size_t b = 0; b < cur.fiber().dim(); ++b) {
        if (w[b].is_zero() || b == x) continue;
        Rat c = w[b];
        if (pk.sign(x, b) < 0) c = -c;
        v[pk.index(x, b)] += c;
      }
      kwk.insert(std::move(v));
    }
  Subspace third_expected(cur.dim_c3());
  for (size_t t = 0; t < cur.sym_kernel().dim(); ++t)
    for (const auto& w : kwk.basis()) {
      Vec v(cur.dim_c3());
      for (size_t m = 0; m < pk.size(); ++m) v[cur.c3_index(t, m)] = w[m];
      third_expected.insert(std::move(v));
    }
  CHECK(third == third_expected);
}

TEST_CASE("first projection image and the two outer containments") {
  for (const char* aref : {"dual_numbers", "trunc_poly:3"}) {
    CurrentAlgebra cur(comm(aref), lie("oscillator"));
    BoundaryData bd = boundary_data(cur);
    const LieAlgebra& k = cur.fiber();
    // acted span z.(x v y) and the pairing span x v w, w in k'
    SymPairs sym(k.dim());
    Subspace acted(sym.size());
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
        acted.insert(std::move(v));
      }
    Subspace kvk(sym.size());
    for (size_t x = 0; x < k.dim(); ++x)
      for (const auto& w : cur.derived_fiber().basis()) {
        Vec v(sym.size());
        for (size_t b = 0; b < k.dim(); ++b)
          if (!w[b].is_zero()) v[sym.index(x, b)] += w[b];
        kvk.insert(std::move(v));
      }
    // the wedge square tensored with the acted span sits inside the boundaries
    for (size_t w = 0; w < cur.wedge_a().size(); ++w)
      for (const auto& sv : acted.basis()) {
        Vec c1(cur.dim_c1());
        for (size_t s = 0; s < sym.size(); ++s) c1[cur.c1_index(w, s)] = sv[s];
        CHECK(bd.brute.contains(cur.s1().apply(c1)));
      }
    // so does the reduced cyclic span paired with k v k'
    for (const auto& tau : cur.cyclic().reduced.basis())
      for (const auto& sv : kvk.basis()) {
        Vec c1(cur.dim_c1());
        for (size_t w = 0; w < cur.wedge_a().size(); ++w)
          for (size_t s = 0; s < sym.size(); ++s)
            if (!tau[w].is_zero() && !sv[s].is_zero()) c1[cur.c1_index(w, s)] += tau[w] * sv[s];
        CHECK(bd.brute.contains(cur.s1().apply(c1)));
      }
    // image of the first projection: wedge x acted plus full cyclic x pairing
    Subspace expected(cur.dim_c1());
    for (size_t w = 0; w < cur.wedge_a().size(); ++w)
      for (const auto& sv : acted.basis()) {
        Vec c1(cur.dim_c1());
        for (size_t s = 0; s < sym.size(); ++s) c1[cur.c1_index(w, s)] = sv[s];
        expected.insert(std::move(c1));
      }
    for (const auto& tau : cur.cyclic().full.basis())
      for (const auto& sv : kvk.basis()) {
        Vec c1(cur.dim_c1());
        for (size_t w = 0; w < cur.wedge_a().size(); ++w)
          for (size_t s = 0; s < sym.size(); ++s)
            if (!tau[w].is_zero() && !sv[s].is_zero()) c1[cur.c1_index(w, s)] += tau[w] * sv[s];
        expected.insert(std::move(c1));
      }
    Subspace first(cur.dim_c1());
    for (const auto& b : bd.brute.basis()) first.insert(cur.p1().apply(b));
    CHECK(first == expected);
  }
}

TEST_CASE("zero is a cocycle and random triples agree with the boundary verdict") {
  for (const char* aref : {"dual_numbers", "group_alg_z2"})
    for (const char* kref : {"heisenberg", "oscillator"}) {
      CurrentAlgebra cur(comm(aref), lie(kref));
      BoundaryData bd = boundary_data(cur);
      CHECK(cocycle_check(cur, bd, CochainTriple::zero(cur, 1)).is_cocycle);
      for (int trial = 0; trial < 10; ++trial) {
        // throws if the condition verdict ever disagrees with the boundary one
        cocycle_check(cur, bd, random_triple(cur, 1));
        CochainTriple f = random_cocycle(cur, bd);
        CHECK(cocycle_check(cur, bd, f).is_cocycle);
      }
    }
}

TEST_CASE("a non-closed fiber cochain violates the coupling condition over the field") {
  CurrentAlgebra cur(comm("field"), lie("oscillator"));
  BoundaryData bd = boundary_data(cur);
  CochainTriple f = CochainTriple::zero(cur, 1);
  // x ^ c is not closed on the oscillator
  f.f2.at(0, cur.c2_index(0, cur.wedge_k().index(0, 2))) = Rat(1);
  CocycleReport rep = cocycle_check(cur, bd, f);
  CHECK(!rep.is_cocycle);
  CHECK(rep.violated == "c");
}

TEST_CASE("a cocycle splits into outer and middle cocycle parts") {
  // f1 + f2 + f3 is a cocycle iff f1 + f2 and f3 are
  CurrentAlgebra cur(comm("dual_numbers"), lie("oscillator"));
  BoundaryData bd = boundary_data(cur);
  for (int trial = 0; trial < 10; ++trial) {
    CochainTriple f = random_cocycle(cur, bd);
    CochainTriple f12 = f;
    f12.f3 = Mat(1, cur.dim_c3());
    CochainTriple f3 = CochainTriple::zero(cur, 1);
    f3.f3 = f.f3;
    CHECK(cocycle_check(cur, bd, f12).is_cocycle);
    CHECK(cocycle_check(cur, bd, f3).is_cocycle);
  }
}

TEST_CASE("coboundaries round trip with a certified witness") {
  CurrentAlgebra cur(comm("dual_numbers"), lie("oscillator"));
  const size_t ng = cur.algebra().dim();
  for (int trial = 0; trial < 5; ++trial) {
    Mat ell(2, ng);
    for (size_t r = 0; r < 2; ++r)
      for (size_t c = 0; c < ng; ++c) ell.at(r, c) = random_rat();
    Mat func = (ell * wedge_bracket(cur.algebra())) * Rat(-1);
    CochainTriple f = extract(cur, func);
    CHECK(f.f1.is_zero());
    CHECK(f.f3.is_zero());
    CoboundaryReport rep = coboundary_test(cur, f);
    CHECK(rep.is_coboundary);
    REQUIRE(rep.witness.has_value());
    CHECK(((*rep.witness * wedge_bracket(cur.algebra())) * Rat(-1)) == func);
  }
  // nonzero first component can never bound
  CochainTriple f = CochainTriple::zero(cur, 1);
  f.f1.at(0, 0) = Rat(1);
  CHECK(!coboundary_test(cur, f).is_coboundary);
  CHECK(coboundary_test(cur, f).obstruction == "first component nonzero");
}

TEST_CASE("a nonzero fiber class over the base field is not a coboundary") {
  CurrentAlgebra cur(comm("field"), lie("heisenberg"));
  BoundaryData bd = boundary_data(cur);
  // x ^ c represents a nonzero class on the heisenberg algebra
  CochainTriple f = CochainTriple::zero(cur, 1);
  f.f2.at(0, cur.c2_index(0, cur.wedge_k().index(0, 2))) = Rat(1);
  CHECK(cocycle_check(cur, bd, f).is_cocycle);
  CoboundaryReport rep = coboundary_test(cur, f);
  CHECK(!rep.is_coboundary);
}

TEST_CASE("coupled construction over the dual numbers and the oscillator") {
  LieEntry osc = lie_catalog("oscillator");
  CurrentAlgebra cur(comm("dual_numbers"), osc.algebra);
  BoundaryData bd = boundary_data(cur);
  const Vec& kappa2 = osc.form_witnesses.at("kappa2");
  Vec gk = koszul_cochain(osc.algebra, kappa2);
  auto eta = solve_primitive(osc.algebra, trivial_module(osc.algebra, 1), 2, gk);
  REQUIRE(eta.has_value());
  CoupledReport rep = coupled_construct(cur, bd, kappa2, *eta);
  CHECK(rep.coupled);
  CHECK(!rep.f1_alone_cocycle);
  CHECK(!rep.f.f1.is_zero());
  CHECK(!rep.f.f2.is_zero());
  // existence criterion agrees
  CoupledExistence ex = coupled_existence(cur);
  CHECK(ex.possible());
}

TEST_CASE("no coupled cocycles when the differential vanishes") {
  LieEntry osc = lie_catalog("oscillator");
  CurrentAlgebra cur(comm("function_alg:2"), osc.algebra);
  BoundaryData bd = boundary_data(cur);
  const Vec& kappa2 = osc.form_witnesses.at("kappa2");
  Vec gk = koszul_cochain(osc.algebra, kappa2);
  auto eta = solve_primitive(osc.algebra, trivial_module(osc.algebra, 1), 2, gk);
  REQUIRE(eta.has_value());
  CoupledReport rep = coupled_construct(cur, bd, kappa2, *eta);
  CHECK(!rep.coupled);  // the differential module is zero
  CHECK(rep.f1_alone_cocycle);
  CHECK(!coupled_existence(cur).possible());
}

TEST_CASE("no coupled cocycles over a simple fiber") {
  LieEntry s = lie_catalog("sl2");
  CurrentAlgebra cur(comm("dual_numbers"), s.algebra);
  CHECK(!coupled_existence(cur).possible());
  // the construction preconditions cannot be met: killing has no primitive
  BoundaryData bd = boundary_data(cur);
  Vec gk = koszul_cochain(s.algebra, s.form_witnesses.at("killing"));
  CHECK(!solve_primitive(s.algebra, trivial_module(s.algebra, 1), 2, gk).has_value());
  WedgePairs pk(3);
  Vec eta(pk.size());
  CHECK_THROWS_AS(coupled_construct(cur, bd, s.form_witnesses.at("killing"), eta),
                  std::invalid_argument);
}

TEST_CASE("coupled construction with a two-dimensional coefficient space") {
  // truncated polynomials of order three have a two-dimensional module of
  // differentials, so the constructed cochain has vector values
  LieEntry osc = lie_catalog("oscillator");
  CurrentAlgebra cur(comm("trunc_poly:3"), osc.algebra);
  BoundaryData bd = boundary_data(cur);
  const Vec& kappa2 = osc.form_witnesses.at("kappa2");
  Vec gk = koszul_cochain(osc.algebra, kappa2);
  auto eta = solve_primitive(osc.algebra, trivial_module(osc.algebra, 1), 2, gk);
  REQUIRE(eta.has_value());
  CoupledReport rep = coupled_construct(cur, bd, kappa2, *eta);
  CHECK(rep.f.z_dim() == 2);
  CHECK(rep.coupled);
  SplitF1 split = split_invariant_part(cur, bd, rep.f);
  CHECK(!split.f1_1.is_zero());
  CochainTriple g = rep.f;
  g.f1 = split.f1_0 + split.f1_1;
  CHECK(cocycle_check(cur, bd, g).is_cocycle);
}

TEST_CASE("splitting the first component of a coupled cocycle") {
  LieEntry osc = lie_catalog("oscillator");
  CurrentAlgebra cur(comm("dual_numbers"), osc.algebra);
  BoundaryData bd = boundary_data(cur);
  const Vec& kappa2 = osc.form_witnesses.at("kappa2");
  Vec gk = koszul_cochain(osc.algebra, kappa2);
  auto eta = solve_primitive(osc.algebra, trivial_module(osc.algebra, 1), 2, gk);
  REQUIRE(eta.has_value());
  CochainTriple f = coupled_construct(cur, bd, kappa2, *eta).f;
  SplitF1 split = split_invariant_part(cur, bd, f);
  CHECK(!split.f1_1.is_zero());
  CHECK(split.f1_0 + split.f1_1 == f.f1);
  // the reassembled cochain is still a cocycle
  CochainTriple g = f;
  g.f1 = split.f1_0 + split.f1_1;
  CHECK(cocycle_check(cur, bd, g).is_cocycle);
  // non-cocycles are rejected
  CochainTriple bad = CochainTriple::zero(cur, 1);
  bad.f1.at(0, 0) = Rat(1);
  if (!cocycle_check(cur, bd, CochainTriple::zero(cur, 1)).is_cocycle)
    CHECK(false);  // unreachable; keeps the structure explicit
  CHECK_THROWS_AS(split_invariant_part(cur, bd, bad), std::invalid_argument);
}

TEST_CASE("every cocycle splits into four cocycles in the uncoupled situations") {
  // either the fiber has no exact form with nonzero koszul cochain, or the
  // differential of the scalars vanishes
  for (const char* pair : {"dual_numbers|sl2", "function_alg:2|oscillator"}) {
    std::string p(pair);
    auto bar = p.find('|');
    CurrentAlgebra cur(comm(p.substr(0, bar)), lie(p.substr(bar + 1)));
    CHECK(!coupled_existence(cur).possible());
    BoundaryData bd = boundary_data(cur);
    for (int trial = 0; trial < 5; ++trial) {
      CochainTriple f = random_cocycle(cur, bd);
      SplitF1 split = split_invariant_part(cur, bd, f);
      CochainTriple part = CochainTriple::zero(cur, 1);
      part.f1 = split.f1_0;
      CHECK(cocycle_check(cur, bd, part).is_cocycle);
      part.f1 = split.f1_1;
      CHECK(cocycle_check(cur, bd, part).is_cocycle);
      part.f1 = Mat(1, cur.dim_c1());
      part.f2 = f.f2;
      CHECK(cocycle_check(cur, bd, part).is_cocycle);
      part.f2 = Mat(1, cur.dim_c2());
      part.f3 = f.f3;
      CHECK(cocycle_check(cur, bd, part).is_cocycle);
    }
  }
}

TEST_CASE("main sequence dimensions over the base field") {
  CurrentAlgebra cur(comm("field"), lie("heisenberg"));
  H2SequenceReport rep = h2_sequence(cur);
  CHECK(rep.term_pullback == 0);
  CHECK(rep.term_fiberwise == 2);  // H^2 of heisenberg
  CHECK(rep.term_pair == 0);
  CHECK(rep.dim_h2_brute == 2);
  CHECK(rep.exact());
}

TEST_CASE("main sequence for the dual numbers over the oscillator") {
  CurrentAlgebra cur(comm("dual_numbers"), lie("oscillator"));
  H2SequenceReport rep = h2_sequence(cur);
  CHECK(rep.term_pullback == 1);
  CHECK(rep.term_fiberwise == 0);
  CHECK(rep.term_pair == 1);
  CHECK(rep.dim_h2_brute == 2);
  CHECK(rep.exact());
}

TEST_CASE("main sequence for the dual numbers over sl2") {
  CurrentAlgebra cur(comm("dual_numbers"), lie("sl2"));
  H2SequenceReport rep = h2_sequence(cur);
  CHECK(rep.term_pullback == 0);
  CHECK(rep.term_fiberwise == 0);
  CHECK(rep.term_pair == 0);
  CHECK(rep.dim_h2_brute == 0);
  CHECK(rep.exact());
}

TEST_CASE("independent dimension prediction matches the brute force") {
  CurrentAlgebra c1(comm("field"), lie("heisenberg"));
  ZusmanovichReport r1 = zusmanovich(c1);
  CHECK(r1.predicted == 2);
  CHECK(r1.match);

  CurrentAlgebra c2(comm("dual_numbers"), lie("abelian:2"));
  ZusmanovichReport r2 = zusmanovich(c2);
  CHECK(r2.brute == binomial(4, 2));
  CHECK(r2.match);

  // the four splitting factors alone undercount exactly by the coupled classes
  CurrentAlgebra c3(comm("dual_numbers"), lie("oscillator"));
  ZusmanovichReport r3 = zusmanovich(c3);
  CHECK(r3.four_factor_sum == 1);
  CHECK(r3.coupled_correction == 1);
  CHECK(r3.brute == 2);
  CHECK(r3.match);
}

TEST_CASE("universal cocycle properties") {
  CurrentAlgebra c1(comm("dual_numbers"), lie("abelian:2"));
  BoundaryData bd1 = boundary_data(c1);
  UniversalCocycle u1 = universal_cocycle(c1, bd1);
  CHECK(u1.kills_boundaries);
  CHECK(u1.classes_span);
  CHECK(u1.dim_h2 == binomial(4, 2));  // boundaries vanish, the map is onto the cycles

  CurrentAlgebra c2(comm("dual_numbers"), lie("heisenberg"));
  BoundaryData bd2 = boundary_data(c2);
  UniversalCocycle u2 = universal_cocycle(c2, bd2);
  CHECK(u2.kills_boundaries);
  CHECK(u2.classes_span);
  CHECK(u2.dim_h2 == cohomology(c2.algebra(), trivial_module(c2.algebra(), 1), 2).dim_h);
}
