#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curco/catalog.hpp"
#include "curco/cochain.hpp"
#include "curco/forms.hpp"

using namespace curco;

namespace {

LieAlgebra heisenberg() { return lie_catalog("heisenberg").algebra; }
LieAlgebra abelian(size_t n) { return lie_catalog("abelian", {std::to_string(n)}).algebra; }

std::vector<LieAlgebra> battery() {
  return {abelian(2), heisenberg(), lie_catalog("oscillator").algebra, lie_catalog("sl2").algebra,
          lie_catalog("pelc", {"6"}).algebra};
}

}  // namespace

TEST_CASE("invariant forms of the standard examples") {
  LieEntry osc = lie_catalog("oscillator");
  InvariantForms inv = sym_invariant_forms(osc.algebra);
  CHECK(inv.invariants.dim() == 2);
  CHECK(inv.invariants.contains(osc.form_witnesses.at("kappa1")));
  CHECK(inv.invariants.contains(osc.form_witnesses.at("kappa2")));
  // forms on the quotient by the commutator: only the d,d entry survives
  CHECK(inv.quotient_forms.dim() == 1);
  CHECK(inv.quotient_forms.contains(osc.form_witnesses.at("kappa1")));

  CHECK(sym_invariant_forms(abelian(3)).invariants.dim() == 6);

  LieEntry s = lie_catalog("sl2");
  InvariantForms invs = sym_invariant_forms(s.algebra);
  CHECK(invs.invariants.dim() == 1);
  CHECK(invs.invariants.contains(s.form_witnesses.at("killing")));
  CHECK(invs.quotient_forms.dim() == 0);
}

TEST_CASE("koszul cochains are alternating, closed, and reject non-invariants") {
  LieEntry osc = lie_catalog("oscillator");
  const auto& k2 = osc.form_witnesses.at("kappa2");
  Vec g = koszul_cochain(osc.algebra, k2);
  CHECK(!is_zero_vec(g));
  // k([x,y],c) = k(c,c) = 0 while k([x,y],d) = k(c,d) = 1
  WedgeTriples triples(4);
  CHECK(g[triples.index(0, 1, 2)] == Rat(0));
  CHECK(g[triples.index(0, 1, 3)] == Rat(1));

  CHECK(is_zero_vec(koszul_cochain(abelian(3), Vec(SymPairs(3).size(), Rat(1)))));

  LieEntry s = lie_catalog("sl2");
  Vec gk = koszul_cochain(s.algebra, s.form_witnesses.at("killing"));
  Subspace z3 = kernel(ce_differential(s.algebra, trivial_module(s.algebra, 1), 3));
  CHECK(z3.dim() == 1);
  CHECK(z3.contains(gk));
  // a non-invariant form is rejected
  SymPairs sym(3);
  Vec bad(sym.size());
  bad[sym.index(0, 0)] = Rat(1);
  CHECK_THROWS_AS(koszul_cochain(s.algebra, bad), std::invalid_argument);
}

TEST_CASE("exact forms of the oscillator fill the whole invariant space") {
  ExactFormsReport r = exact_forms(lie_catalog("oscillator").algebra);
  CHECK(r.exact_forms.dim() == 2);
  CHECK(r.z3_image.dim() == 1);
  CHECK(r.b3_meet.dim() == 1);
  CHECK(r.descent_image_dim == 0);
  CHECK(r.kernel_is_quotient_forms);
  CHECK(r.dim_identity_ok);
  CHECK(r.dim_h2 == 0);
  CHECK(r.dim_h1_coad == 2);
}

TEST_CASE("exact forms of sl2 vanish") {
  ExactFormsReport r = exact_forms(lie_catalog("sl2").algebra);
  CHECK(r.exact_forms.dim() == 0);
  CHECK(r.z3_image.dim() == 1);
  CHECK(r.b3_meet.dim() == 0);
  CHECK(r.descent_image_dim == 1);
  CHECK(r.kernel_is_quotient_forms);
  CHECK(r.dim_identity_ok);
}

TEST_CASE("exact forms of an abelian algebra are everything with zero image") {
  ExactFormsReport r = exact_forms(abelian(3));
  CHECK(r.exact_forms.dim() == 6);
  CHECK(r.z3_image.dim() == 0);
  CHECK(r.b3_meet.dim() == 0);
  CHECK(r.kernel_is_quotient_forms);
  CHECK(r.dim_identity_ok);
}

TEST_CASE("eq-sym dimension identity across the battery") {
  for (const auto& l : battery()) {
    ExactFormsReport r = exact_forms(l);
    CHECK(r.dim_identity_ok);
    CHECK(r.kernel_is_quotient_forms);
    CHECK(r.descent_image_dim == r.z3_image.dim() - r.b3_meet.dim());
  }
}

TEST_CASE("centroid of the oscillator") {
  LieEntry osc = lie_catalog("oscillator");
  Mat k2 = gram_of(4, osc.form_witnesses.at("kappa2"));
  CentroidReport r = centroid(osc.algebra, k2);
  CHECK(r.cent0_inside_cent);
  CHECK(r.dim_cent_red == 1);
  REQUIRE(r.quadratic.has_value());
  CHECK(r.quadratic->dim_sym_part == 2);
  CHECK(r.quadratic->sym_part_matches_invariants);
  CHECK(r.quadratic->red_matches_koszul_image);
}

TEST_CASE("centroid of an abelian algebra is everything with trivial quotient") {
  LieAlgebra ab = abelian(3);
  CentroidReport r = centroid(ab);
  CHECK(r.dim_cent == 9);
  CHECK(r.dim_cent0 == 9);
  CHECK(r.dim_cent_red == 0);
}

TEST_CASE("centroid of sl2 is the scalar line") {
  LieEntry s = lie_catalog("sl2");
  Mat killing = gram_of(3, s.form_witnesses.at("killing"));
  CentroidReport r = centroid(s.algebra, killing);
  CHECK(r.dim_cent == 1);
  CHECK(r.dim_cent0 == 0);
  CHECK(r.dim_cent_red == 1);
  REQUIRE(r.quadratic.has_value());
  CHECK(r.quadratic->dim_sym_part == 1);
  CHECK(r.quadratic->sym_part_matches_invariants);
  CHECK(r.quadratic->red_matches_koszul_image);
  // degenerate reference forms are rejected
  CHECK_THROWS_AS(centroid(s.algebra, Mat(3, 3)), std::invalid_argument);
}

TEST_CASE("radical probe on the examples") {
  RadicalProbeReport r1 = radical_probe(lie_catalog("sl2").algebra);
  CHECK(r1.common_radical_dim == 0);
  CHECK(r1.best_rank == 3);
  CHECK(r1.radical_matches_common);

  RadicalProbeReport r2 = radical_probe(abelian(3));
  CHECK(r2.common_radical_dim == 0);
  CHECK(r2.best_rank == 3);
  CHECK(r2.radical_matches_common);

  RadicalProbeReport r3 = radical_probe(lie_catalog("oscillator").algebra);
  CHECK(r3.common_radical_dim == 0);
  CHECK(r3.best_rank == 4);
  CHECK(r3.radical_matches_common);

  // heisenberg: the center pairs trivially with everything invariant
  RadicalProbeReport r4 = radical_probe(heisenberg());
  CHECK(r4.common_radical_dim == 1);
  CHECK(r4.best_rank == 2);
  CHECK(r4.radical_matches_common);
}

TEST_CASE("transfer sequence is exact for the battery") {
  for (const auto& l : battery()) {
    TransferReport r = transfer_sequence(l);
    CHECK(r.head_injective);
    CHECK(r.exact_at_h1_coad);
    CHECK(r.exact_at_invariants);
    CHECK(r.exact_at_h3);
    CHECK(r.exact_at_h2_coad);
    CHECK(r.cochain_composites_vanish);
    CHECK(r.ok());
  }
}

TEST_CASE("transfer sequence at a larger solvable example") {
  TransferReport r = transfer_sequence(lie_catalog("pelc", {"9"}).algebra);
  CHECK(r.ok());
  CHECK(r.dim_inv == 4);
  CHECK(r.dim_h3 == 3);
}

TEST_CASE("transfer sequence dimensions for the oscillator") {
  TransferReport r = transfer_sequence(lie_catalog("oscillator").algebra);
  CHECK(r.dim_h2 == 0);
  CHECK(r.dim_h1_coad == 2);
  CHECK(r.dim_inv == 2);
  CHECK(r.dim_h3 == 1);
}

TEST_CASE("cotangent form is invariant and its koszul cochain is exact") {
  for (const char* base : {"heisenberg", "abelian:2", "oscillator", "sl2"}) {
    auto [name, params] = split_catalog_ref(base);
    LieEntry b = lie_catalog(name, params);
    LieEntry t = lie_catalog("cotangent", {name, params.empty() ? "" : params[0]});
    if (params.empty()) t = lie_catalog("cotangent", {name});
    const auto& kappa = t.form_witnesses.at("kappa");
    CHECK(is_invariant_form(t.algebra, gram_of(t.algebra.dim(), kappa)));
    Vec g = koszul_cochain(t.algebra, kappa);
    Subspace b3 = image(ce_differential(t.algebra, trivial_module(t.algebra, 1), 2));
    CHECK(b3.contains(g));
  }
}

TEST_CASE("twisted cotangent over sl2 by its koszul three-cocycle") {
  LieEntry s = lie_catalog("sl2");
  Vec twist = koszul_cochain(s.algebra, s.form_witnesses.at("killing"));
  LieEntry t = twisted_cotangent(s.algebra, twist);
  CHECK(t.algebra.dim() == 6);
  const auto& kappa = t.form_witnesses.at("kappa");
  CHECK(is_invariant_form(t.algebra, gram_of(6, kappa)));
  // the koszul cochain of kappa is a coboundary iff the pulled-back twist is
  Vec g = koszul_cochain(t.algebra, kappa);
  // pull the twist back through the projection onto the base
  WedgeTriples base_triples(3);
  WedgeTriples total_triples(6);
  Vec pulled(total_triples.size());
  for (size_t i = 0; i < base_triples.size(); ++i) {
    auto [x, y, z] = base_triples.list[i];
    pulled[total_triples.index(3 + x, 3 + y, 3 + z)] = twist[i];
  }
  Subspace b3 = image(ce_differential(t.algebra, trivial_module(t.algebra, 1), 2));
  CHECK(b3.contains(g) == b3.contains(pulled));

  // with eta((f,x),(f',x')) = f(x') - f'(x): koszul(kappa) + d eta = -2 pulled
  WedgePairs pairs(6);
  Vec eta(pairs.size());
  for (size_t i = 0; i < 3; ++i) eta[pairs.index(i, 3 + i)] = Rat(1);
  Vec deta = ce_differential(t.algebra, trivial_module(t.algebra, 1), 2).apply(eta);
  Vec lhs = add(g, deta);
  CHECK(lhs == scale(Rat(-2), pulled));

  // a non-closed twist is rejected
  Vec bad_twist(base_triples.size());
  bad_twist[0] = Rat(1);
  LieAlgebra osc = lie_catalog("oscillator").algebra;
  Vec bad4(WedgeTriples(4).size());
  bad4[WedgeTriples(4).index(0, 1, 3)] = Rat(1);
  // d of this cochain on the oscillator is nonzero
  if (!is_zero_vec(ce_differential(osc, trivial_module(osc, 1), 3).apply(bad4)))
    CHECK_THROWS_AS(twisted_cotangent(osc, bad4), std::invalid_argument);
}
