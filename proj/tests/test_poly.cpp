#include "rootedpoly/poly.hpp"
#include "rootedpoly/upoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rootedpoly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

const Poly x = Var::x();

Poly random_poly(std::mt19937& rng, std::vector<Var> vars = {Var::x(), Var::x(1), Var::x(2), Var::w(1), Var::w(3),
                                                              Var::y(2)}) {
  std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), den(1, 3), exp(0, 2), pick(0, static_cast<int>(vars.size()) - 1);
  std::vector<Poly::Term> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Factor> f;
    for (int k = 0; k < 2; ++k) f.emplace_back(vars[static_cast<std::size_t>(pick(rng))], exp(rng));
    terms.emplace_back(Monomial::from_factors(f), Rational(coef(rng), den(rng)));
  }
  return Poly::from_terms(terms);
}

}  // namespace

TEST(Poly, RingExamples) {
  EXPECT_EQ(mul(x + Poly(1L), x - Poly(1L)), P("x^2 - 1"));
  EXPECT_EQ(add(P("x^2 + 3*x"), Poly()), P("x^2 + 3*x"));
  EXPECT_EQ(pow(Poly(Var::x(1)) * Poly(Var::w(1)), 2), P("x1^2*w1^2"));
  EXPECT_EQ(pow(P("x - 2"), 0), Poly(1L));
}

TEST(Poly, CanonicalText) {
  EXPECT_EQ(P("-12*x^3 + 18*x^5 + x^9 - 8*x^7").to_string(), "x^9 - 8*x^7 + 18*x^5 - 12*x^3");
  EXPECT_EQ((Poly(Rational(1, 2)) * Poly(Var::w(3))).to_string(), "1/2*w3");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(P("w2 + x1*x2*w1^2").to_string(), "x1*x2*w1^2 + w2");
}

TEST(Poly, ParseRejectsGarbage) {
  EXPECT_THROW(parse_poly("x^"), InputError);
  EXPECT_THROW(parse_poly("3 + * x"), InputError);
  EXPECT_THROW(parse_poly("q7"), InputError);
}

TEST(Poly, Substitute) {
  EXPECT_EQ(substitute(P("x^2 - 1"), Var::x(), P("x + 1")), P("x^2 + 2*x"));
  EXPECT_EQ(substitute(P("w3"), Var::w(3), P("1/2*w3")), P("1/2*w3"));
  const Poly p = P("x1*x2*w1^2 + w2");
  EXPECT_EQ(substitute(p, Var::x(1), Poly(Var::x(1))), p);
}

TEST(Poly, MultilinearRatioSubstitute) {
  const Poly a = Var::y(1), b = Var::w(5), c = Var::w(6), d = Var::w(7);
  const std::vector<RatioTarget> two{{Var::x(1), a, b}, {Var::x(2), c, d}};
  EXPECT_EQ(multilinear_ratio_substitute(P("x1*x2 + 1"), two), a * c + b * d);

  const std::vector<RatioTarget> one{{Var::x(1), P("x^2 - 1"), P("x")}};
  EXPECT_EQ(multilinear_ratio_substitute(P("x1"), one), P("x^2 - 1"));

  const std::vector<RatioTarget> k2{{Var::x(1), x, Poly(1L)}, {Var::x(2), x, Poly(1L)}};
  EXPECT_EQ(multilinear_ratio_substitute(P("x1*x2*w1^2 + w2"), k2), P("x^2*w1^2 + w2"));

  EXPECT_THROW(multilinear_ratio_substitute(P("x1^2"), one), InputError);
}

TEST(Poly, RatioSubstituteWithUnitDenominatorsIsPlainSubstitution) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    // Targets must not mention x1, x2, or sequential substitution differs.
    const std::vector<Var> free{Var::x(), Var::w(1), Var::w(3), Var::y(2)};
    const Poly q1 = random_poly(rng, free), q2 = random_poly(rng, free);
    const Poly p = P("3*x1*x2*w1 - x1 + 1/2*x2*w2 + 5");
    const std::vector<RatioTarget> t{{Var::x(1), q1, Poly(1L)}, {Var::x(2), q2, Poly(1L)}};
    EXPECT_EQ(multilinear_ratio_substitute(p, t), substitute(substitute(p, Var::x(1), q1), Var::x(2), q2));
  }
}

TEST(Poly, Divides) {
  auto q = divides(P("x^2"), P("x^4 - 3*x^2"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("x^2 - 3"));
  EXPECT_FALSE(divides(P("x"), P("x^2 - 1")));
  const Poly p = P("x^3 - 2*x + 7");
  ASSERT_TRUE(divides(p, p));
  EXPECT_EQ(*divides(p, p), Poly(1L));
  EXPECT_THROW(divides(P("x1 + 1"), P("x1^2 - 1")), InputError);
}

TEST(Poly, DividesWithSymbolicCoefficients) {
  const Poly d = P("x^2 - 1");
  const Poly q = P("x*w1 + w2^2");
  auto r = divides(d, d * q);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, q);
}

TEST(Poly, Eval) {
  EXPECT_EQ(eval(P("x^2 - 1"), std::map<Var, Rational>{{Var::x(), Rational(2)}}), Rational(3));
  EXPECT_EQ(eval(P("x^2 - 1"), std::map<Var, Rational>{{Var::x(), Rational(1)}}), Rational(0));
  const double v = eval(P("x^9 - 8*x^7 + 18*x^5 - 12*x^3"), std::map<Var, double>{{Var::x(), 1.41421356237}});
  EXPECT_NEAR(v, 0.0, 1e-6);
  EXPECT_THROW(eval(P("x + w1"), std::map<Var, Rational>{{Var::x(), Rational(1)}}), InputError);
}

TEST(Poly, CoeffsInX) {
  EXPECT_EQ(coeffs_in_x(P("x^2 - 1")), (std::vector<Poly>{Poly(1L), Poly(), Poly(-1L)}));
  EXPECT_EQ(coeffs_in_x(P("x^3")), (std::vector<Poly>{Poly(1L), Poly(), Poly(), Poly()}));
  const auto c = coeffs_in_x(P("x^2*w1^2 + w2"));
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[0], P("w1^2"));
  EXPECT_EQ(c[2], P("w2"));
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperty, PrintParseRoundTrip) {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const Poly a = random_poly(rng) * random_poly(rng);
    EXPECT_EQ(parse_poly(a.to_string()), a) << a.to_string();
  }
}

TEST(PolyProperty, DivisionQuotientMultipliesBack) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int rep = 0; rep < 100; ++rep) {
    Poly d = P("x^2") + Poly(Rational(c(rng))) * x + Poly(Rational(c(rng) == 0 ? 1 : c(rng)));
    Poly p = P("x^5") + Poly(Rational(c(rng))) * P("x^3") + Poly(Rational(c(rng)));
    for (const Poly& cand : {p, p * d}) {
      if (auto q = divides(d, cand)) {
        EXPECT_EQ(d * *q, cand);
      }
    }
    EXPECT_TRUE(divides(d, p * d).has_value());
  }
}

TEST(UPoly, GcdAndSquarefree) {
  const UPoly a = UPoly::from_poly(P("x^4 - 3*x^2"));
  EXPECT_EQ(a.valuation(), 2);
  EXPECT_EQ(gcd(a, UPoly::from_poly(P("x^3 - 3*x"))).to_poly(), P("x^3 - 3*x"));
  const UPoly f = UPoly::from_poly(Poly(3L) * x * pow(P("x - 1"), 3) * pow(P("x + 2"), 2));
  const auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], std::make_pair(UPoly::from_poly(P("x")), 1));
  EXPECT_EQ(parts[1], std::make_pair(UPoly::from_poly(P("x + 2")), 2));
  EXPECT_EQ(parts[2], std::make_pair(UPoly::from_poly(P("x - 1")), 3));
  UPoly back = UPoly::constant(f.lead());
  for (const auto& [g, m] : parts) back = back * pow(g, m);
  EXPECT_EQ(back, f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_EQ(gcd(parts[i].first, parts[j].first).degree(), 0);
  }
}

TEST(UPoly, DivmodAndExactDivide) {
  const UPoly a = UPoly::from_poly(P("x^3 - 1"));
  const UPoly b = UPoly::from_poly(P("x - 1"));
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q.to_poly(), P("x^2 + x + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_FALSE(exact_divide(a, UPoly::from_poly(P("x + 1"))).has_value());
  EXPECT_THROW(UPoly::from_poly(P("x*w1")), InputError);
}
