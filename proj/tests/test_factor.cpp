#include "rootedpoly/corpus.hpp"
#include "rootedpoly/factor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rootedpoly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Graph twig() { return rooted(complete_graph(2), 0); }

const Mode kChar = Mode::CharacteristicStandard;
const Mode kGen = Mode::Generic;

double deviation(const NumPoly& a, const Poly& exact) { return coefficient_deviation(a, UPoly::from_poly(exact)); }

std::vector<Attachment> placed(const Product<Rational>& prod, const std::vector<Graph>& gamma, Mode m) {
  std::vector<Attachment> out;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const auto& place = prod.placement[k];
    out.push_back(Attachment::of(gamma[k], m, [&](int v) {
      return Var::x(static_cast<std::uint32_t>(place[static_cast<std::size_t>(v)] + 1));
    }));
  }
  return out;
}

Side side_of(const Graph& h, Mode m, const Rational& loop = Rational(0)) {
  return make_side(Attachment::of(h, m), Rational(loop_sign(m)) * loop, unit(m));
}

}  // namespace

// ------------------------------------------------------------- attachments

TEST(Attachment, Polynomials) {
  const auto k1 = Attachment::of(single_vertex(Rational(2)), kGen);
  EXPECT_EQ(k1.full, P("x*w1 + 2*w1"));
  EXPECT_EQ(k1.root_stripped, P("x*w1"));
  EXPECT_EQ(k1.minus_root, Poly(1L));
  EXPECT_EQ(k1.root_loop, 2);
  const auto k2 = Attachment::of(twig(), kChar);
  EXPECT_EQ(k2.full, P("x^2 - 1"));
  EXPECT_EQ(k2.minus_root, P("x"));
}

TEST(Factor, DetachUnitAndShift) {
  EXPECT_EQ(detach_unit(P("x1*x2*w1^2 + w2"), {Var::x(1)}, Poly(Var::w(1))), P("x1*x2*w1 + w2"));
  EXPECT_THROW(detach_unit(P("x1*w2"), {Var::x(1)}, Poly(Var::w(1))), Error);
  EXPECT_EQ(shift(P("x^2"), Var::x(), Rational(1)), P("x^2 + 2*x + 1"));
}

// ------------------------------------------------------------- coalescence

TEST(Coalescence, WithUnity) {
  const Graph g = rooted(complete_graph(2), 0);
  const auto h = Attachment::of(single_vertex(), kGen, [](int) { return Var::x(1); });
  EXPECT_EQ(coalescence_poly(circuit_poly(g), h, Var::x(1), unit(kGen)), circuit_poly(g));
}

TEST(Coalescence, TwoTwigsMakeAPath) {
  const Graph g = twig();
  const Graph co = coalesce(g, twig());
  const auto h = Attachment::of(twig(), kGen, [](int v) { return Var::x(v == 0 ? 1U : 3U); });
  EXPECT_EQ(coalescence_poly(circuit_poly(g), h, Var::x(1), unit(kGen)), circuit_poly(co));
  EXPECT_EQ(to_simple(circuit_poly(co)), to_simple(circuit_poly(path_graph(3))));
}

TEST(Coalescence, RootLoopsOnBothSides) {
  Graph g = rooted(complete_graph(3), 0);
  g.set_loop(0, Rational(2));
  Graph h = rooted(path_graph(3), 1);
  h.set_loop(1, Rational(-1, 2));
  h.set_loop(0, Rational(3));
  const Graph co = coalesce(g, h);
  const auto a = Attachment::of(h, kGen, [](int v) { return Var::x(v == 1 ? 1U : v == 0 ? 4U : 5U); });
  EXPECT_EQ(coalescence_poly(circuit_poly(g), a, Var::x(1), unit(kGen)), circuit_poly(co));
}

// --------------------------------------------------------- rooted products

TEST(RootedProduct, AllUnitsGiveTheCore) {
  Graph core = cycle_graph(4);
  core.set_loop(2, Rational(5));
  const std::vector<Graph> gamma(4, single_vertex());
  const auto prod = rooted_product(core, gamma);
  const auto at = placed(prod, gamma, kGen);
  EXPECT_EQ(rooted_product_poly(circuit_poly(core), at, CoreForm::RootLoopsStripped, {}, unit(kGen)),
            circuit_poly(core));
}

TEST(RootedProduct, ThistleIsThePath) {
  const std::vector<Graph> gamma(2, twig());
  const auto prod = rooted_product(complete_graph(2), gamma);
  const auto at = placed(prod, gamma, kGen);
  const Poly got = rooted_product_poly(circuit_poly(complete_graph(2)), at, CoreForm::RootLoopsStripped, {}, unit(kGen));
  EXPECT_EQ(got, circuit_poly(prod.graph));
  EXPECT_EQ(to_simple(got), to_simple(circuit_poly(path_graph(4))));
}

TEST(RootedProduct, LoopedTriangleBothForms) {
  Graph core = complete_graph(3);
  core.set_loop(0, Rational(1));
  const std::vector<Graph> gamma(3, twig());
  const auto prod = rooted_product(core, gamma);
  const auto at = placed(prod, gamma, kGen);
  const Poly oracle = circuit_poly(prod.graph);
  const Poly u = unit(kGen);
  EXPECT_EQ(rooted_product_poly(circuit_poly(core), at, CoreForm::RootLoopsStripped, {}, u), oracle);
  EXPECT_EQ(rooted_product_poly(circuit_poly(strip_all_loops(core)), at, CoreForm::CoreLoopsStripped,
                                {Rational(1), Rational(0), Rational(0)}, u),
            oracle);
  EXPECT_EQ(simple_rooted_product_poly(to_simple(circuit_poly(core)), Attachment::of(twig(), kGen), 3, u),
            to_simple(oracle));
}

TEST(RootedProduct, ArityMismatch) {
  const std::vector<Attachment> two(2, Attachment::of(twig(), kGen));
  EXPECT_THROW(rooted_product_poly(circuit_poly(complete_graph(3)), two, CoreForm::RootLoopsStripped, {}, unit(kGen)),
               InputError);
  EXPECT_THROW(rooted_product_poly(circuit_poly(complete_graph(2)), two, CoreForm::CoreLoopsStripped,
                                   {Rational(1)}, unit(kGen)),
               InputError);
}

TEST(SimpleRootedProduct, Examples) {
  const Poly u = unit(kChar);
  const Poly bg = simple_circuit_poly(cycle_graph(5), kChar);
  EXPECT_EQ(simple_rooted_product_poly(bg, Attachment::of(single_vertex(), kChar), 5, u), bg);
  EXPECT_EQ(simple_rooted_product_poly(P("x^2 - 1"), Attachment::of(twig(), kChar), 2, u), P("x^4 - 3*x^2 + 1"));
  const auto thistle = rooted_product(complete_graph(3), std::vector<Graph>(3, twig())).graph;
  EXPECT_EQ(simple_rooted_product_poly(P("x^3 - 3*x - 2"), Attachment::of(twig(), kChar), 3, u),
            simple_circuit_poly(thistle, kChar));
}

TEST(SimpleRootedProduct, SubstitutionAgreesWithExpansion) {
  for (const auto& core : connected_cores(4)) {
    for (const auto& h : standard_attachments()) {
      const Poly cp = circuit_poly(core.graph);
      const auto a = Attachment::of(h.graph, kGen);
      const int p = core.graph.order();
      EXPECT_EQ(simple_rooted_product_by_substitution(cp, a, p, unit(kGen)),
                simple_rooted_product_poly(to_simple(cp), a, p, unit(kGen)))
          << core.name << " " << h.name;
    }
  }
}

TEST(SimpleRootedProduct, NonMonicCoreRejected) {
  try {
    normalized_gamma(P("2*x^2 - 1"), 2, Poly(1L));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("gamma_0 != 1"), std::string::npos);
  }
}

// ------------------------------------------------------------ spectral form

TEST(SpectralProduct, Examples) {
  const auto h = Attachment::of(twig(), kChar);
  const Poly u = unit(kChar);
  const RootSet lam = shifted_core_roots(P("x^2 - 1"), h, 2, u);
  EXPECT_LT(deviation(spectral_product_form(lam, h.root_stripped, h.minus_root), P("x^4 - 3*x^2 + 1")), 1e-9);
  EXPECT_LT(deviation(spectral_product_by_loops(lam, twig(), kChar), P("x^4 - 3*x^2 + 1")), 1e-9);

  const RootSet zeros = shifted_core_roots(P("x^3"), h, 3, u);
  EXPECT_LT(deviation(spectral_product_form(zeros, h.root_stripped, h.minus_root), pow(h.root_stripped, 3)), 1e-12);
}

TEST(SpectralProduct, RootDivisibilityOnStar) {
  const auto h = Attachment::of(twig(), kChar);
  const Poly bg = char_poly_det(star_graph(3));
  const Poly prod = simple_rooted_product_poly(bg, h, 4, unit(kChar));
  const auto r = root_divisibility_report(bg, h, prod);
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.divisor, P("x^4 - 2*x^2 + 1"));
  EXPECT_TRUE(r.divides);
}

// ------------------------------------------------------ restricted products

TEST(Bipartite, Delta) {
  auto delta = [](const Graph& g) {
    std::vector<Poly> d = bipartite_delta(g, kChar).delta;
    return d;
  };
  EXPECT_EQ(delta(path_graph(4)), (std::vector<Poly>{Poly(1L), Poly(-3L), Poly(1L)}));
  EXPECT_EQ(delta(star_graph(3)), (std::vector<Poly>{Poly(1L), Poly(-3L)}));
  EXPECT_EQ(delta(complete_graph(2)), (std::vector<Poly>{Poly(1L), Poly(-1L)}));
  EXPECT_EQ(bipartite_delta(path_graph(4), kGen).delta, (std::vector<Poly>{Poly(1L), P("3*w2"), P("w2^2")}));
  EXPECT_THROW(bipartite_delta(complete_graph(3), kChar), InputError);
}

TEST(Restricted, MethylpentaneThreeRoutes) {
  const Graph t = methylpentane_tree();
  const Graph k1 = single_vertex();
  const Poly expected = P("x^9 - 8*x^7 + 18*x^5 - 12*x^3");
  const Poly u = unit(kChar);

  const Graph built = restricted_rooted_product(t, k1, twig()).graph;
  EXPECT_EQ(simple_circuit_poly(built, kChar), expected);
  EXPECT_EQ(char_poly_det(built), expected);

  const auto e = bipartite_delta(t, kChar);
  const Side s1 = side_of(k1, kChar), s2 = side_of(twig(), kChar);
  EXPECT_EQ(restricted_product_poly(e, s1, s2), expected);
  EXPECT_EQ(restricted_product_by_substitution(bipartite_y_poly(t, kChar), 3, 3, s1, s2, u), expected);

  // Reciprocal product: same polynomial.
  EXPECT_EQ(simple_circuit_poly(restricted_rooted_product(t, twig(), k1).graph, kChar), expected);
  EXPECT_TRUE(reciprocal_check(t, k1, twig(), kChar));

  const MuSquares mu = mu_squares(char_poly_det(t), 3, 3);
  EXPECT_LT(deviation(restricted_spectral_form(mu, s1, s2), expected), 1e-8);
  EXPECT_LT(deviation(restricted_spectral_by_join(mu, k1, twig(), kChar), expected), 1e-8);
}

TEST(Restricted, UnitsAndSmallCases) {
  const Graph p4 = path_graph(4);
  const auto e = bipartite_delta(p4, kChar);
  EXPECT_EQ(restricted_product_poly(e, side_of(single_vertex(), kChar), side_of(single_vertex(), kChar)),
            char_poly_det(p4));

  Graph k2 = complete_graph(2);
  k2.set_parts(std::vector<int>{1, 2});
  const auto e2 = bipartite_delta(k2, kChar);
  EXPECT_EQ(restricted_product_poly(e2, side_of(twig(), kChar), side_of(twig(), kChar)), char_poly_det(p4));
}

TEST(Restricted, OneSidedForms) {
  // Attachments on one part only; the other part carries loop b.
  Graph t = star_graph(3);
  t.set_parts(oriented_parts(t));
  const Graph h = rooted(complete_graph(3), 0);
  for (Mode m : {kGen, kChar}) {
    const Poly u = unit(m);
    for (const Rational& b : {Rational(0), Rational(2)}) {
      Graph tl = t;
      for (int v = 0; v < 4; ++v) {
        if ((*t.parts())[static_cast<std::size_t>(v)] == 2) tl.set_loop(v, b);
      }
      const auto e = bipartite_delta(tl, m);
      const Poly built = to_simple(mode_circuit_poly(restricted_rooted_product(tl, h, single_vertex()).graph, m, 12));
      EXPECT_EQ(restricted_product_poly(e, side_of(h, m), bare_side(Rational(loop_sign(m)) * b, u)), built);
    }
  }
}

TEST(MuSquares, Examples) {
  const auto p4 = mu_squares(char_poly_det(path_graph(4)), 2, 2);
  ASSERT_EQ(p4.mu2.roots.size(), 2U);
  EXPECT_NEAR(p4.mu2.roots[0].value.real(), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(p4.mu2.roots[1].value.real(), (3 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(p4.q.to_poly(), P("x^2 - 3*x + 1"));

  const auto star = mu_squares(char_poly_det(star_graph(3)), 3, 1);
  ASSERT_EQ(star.mu2.roots.size(), 1U);
  EXPECT_NEAR(star.mu2.roots[0].value.real(), 3.0, 1e-12);

  const auto k2 = mu_squares(P("x^2 - 1"), 1, 1);
  EXPECT_NEAR(k2.mu2.roots[0].value.real(), 1.0, 1e-12);

  EXPECT_THROW(mu_squares(P("x^3 - 3*x - 2"), 2, 1), InputError);
}

TEST(RestrictedSpectral, DisjointUnionLimit) {
  // Two isolated vertices: mu^2 = 0, so the product is a disjoint union.
  const auto mu = mu_squares(P("x^2"), 1, 1);
  const Side s1 = side_of(twig(), kChar), s2 = side_of(rooted(complete_graph(3), 0), kChar);
  EXPECT_LT(deviation(restricted_spectral_form(mu, s1, s2), s1.ph * s2.ph), 1e-12);
}

TEST(RestrictedSpectral, PathWithTwigs) {
  const Graph p4 = path_graph(4);
  const auto e = bipartite_delta(p4, kChar);
  const Side s = side_of(twig(), kChar);
  const Poly exact = restricted_product_poly(e, s, s);
  const auto mu = mu_squares(char_poly_det(p4), 2, 2);
  EXPECT_LT(deviation(restricted_spectral_form(mu, s, s), exact), 1e-9);
  EXPECT_LT(deviation(restricted_spectral_by_join(mu, twig(), twig(), kChar), exact), 1e-9);
}

TEST(Reciprocal, Examples) {
  EXPECT_TRUE(reciprocal_check(methylpentane_tree(), twig(), twig(), kChar));
  Graph c4 = cycle_graph(4);
  EXPECT_TRUE(reciprocal_check(c4, twig(), single_vertex(), kChar));
  EXPECT_TRUE(reciprocal_check(c4, twig(), single_vertex(), kGen));
  try {
    reciprocal_check(path_graph(3), twig(), single_vertex(), kChar);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("parts unequal"), std::string::npos);
  }
}

TEST(Reciprocal, ExpansionRouteBeyondTheCap) {
  const Graph t = methylpentane_tree();
  const Graph h1 = rooted(complete_graph(3), 0), h2 = rooted(path_graph(3), 1);
  EXPECT_TRUE(reciprocal_check(t, h1, h2, kChar, 9));
}

TEST(ReciprocalProperty, RandomEquipartiteInstances) {
  std::mt19937 rng(42);
  const auto atts = standard_attachments();
  std::vector<Graph> cores;
  for (const auto& t : bipartite_graphs(6)) {
    const auto [p1, p2] = part_sizes(*t.parts());
    if (p1 == p2) cores.push_back(t);
  }
  std::uniform_int_distribution<std::size_t> pc(0, cores.size() - 1), pa(0, atts.size() - 1);
  for (int rep = 0; rep < 25; ++rep) {
    const Graph& t = cores[pc(rng)];
    EXPECT_TRUE(reciprocal_check(t, atts[pa(rng)].graph, atts[pa(rng)].graph, kChar, 12));
  }
}

// ------------------------------------------------------------ divisibility

TEST(ZeroDivisibility, Examples) {
  {
    const Graph t = star_graph(3);
    const Side s1 = side_of(twig(), kChar), s2 = side_of(single_vertex(), kChar);
    const auto e = bipartite_delta(t, kChar);
    const Poly prod = restricted_product_poly(e, s1, s2);
    const auto r = zero_divisibility_report(char_poly_det(t), s1.ph, s2.ph, prod, 3, 1);
    EXPECT_EQ(r.valuation, 2);
    EXPECT_EQ(r.s, 2);
    EXPECT_EQ(r.divisor, P("x^4 - 2*x^2 + 1"));
    EXPECT_TRUE(r.divides);
    EXPECT_EQ(r.divisor * r.quotient, prod);
  }
  {
    const Graph t = path_graph(6);
    const Side s = side_of(twig(), kChar);
    const Poly prod = restricted_product_poly(bipartite_delta(t, kChar), s, s);
    const auto r = zero_divisibility_report(char_poly_det(t), s.ph, s.ph, prod, 3, 3);
    EXPECT_EQ(r.s, 0);
    EXPECT_EQ(r.divisor, Poly(1L));
    EXPECT_TRUE(r.divides);
  }
}

TEST(ZeroDivisibility, ExponentCountsVanishingMuSquares) {
  // C4: x^4 - 4x^2 has 0 as a double root, but only one mu^2 vanishes, so
  // the divisor is (PH1 PH2)^1. Reading s as the multiplicity of 0 would ask
  // for (PH1 PH2)^2, which does not divide.
  const Graph t = cycle_graph(4);
  const Side s = side_of(twig(), kChar);
  const Poly prod = restricted_product_poly(bipartite_delta(t, kChar), s, s);
  Graph core = t;
  core.set_parts(oriented_parts(t));
  EXPECT_EQ(prod, simple_circuit_poly(restricted_rooted_product(core, twig(), twig()).graph, kChar));
  const auto r = zero_divisibility_report(char_poly_det(t), s.ph, s.ph, prod, 2, 2);
  EXPECT_EQ(r.valuation, 2);
  EXPECT_EQ(r.s, 1);
  EXPECT_TRUE(r.divides);
  EXPECT_FALSE(divides(pow(s.ph, 2) * pow(s.ph, 2), prod).has_value());
}

TEST(CommonMultiplicity, Examples) {
  EXPECT_EQ(common_multiplicity(P("x^2 - 1"), P("x - 1"), Rational(1)), 1);
  EXPECT_EQ(common_multiplicity(P("x^2"), P("x^3"), Rational(0)), 2);
  EXPECT_EQ(common_multiplicity(P("x^4 - 3*x^2"), P("x^2 - 3"), Complex(std::sqrt(3.0)), 1e-8), 1);
  EXPECT_EQ(common_multiplicity(P("x^2 - 1"), P("x + 2"), Rational(1)), 0);
}
