#include "rootedpoly/corpus.hpp"
#include "rootedpoly/graph_json.hpp"
#include "rootedpoly/oracle.hpp"
#include "rootedpoly/spectra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rootedpoly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Poly random_int_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> c(-6, 6);
  Poly p = pow(Poly(Var::x()), static_cast<std::uint32_t>(degree));
  for (int k = 0; k < degree; ++k) p += Poly(Rational(c(rng))) * pow(Poly(Var::x()), static_cast<std::uint32_t>(k));
  return p;
}

}  // namespace

TEST(Roots, Examples) {
  const auto a = roots(P("x^2 - 1"));
  ASSERT_EQ(a.roots.size(), 2U);
  EXPECT_NEAR(a.roots[0].value.real(), 1.0, 1e-14);
  EXPECT_NEAR(a.roots[1].value.real(), -1.0, 1e-14);

  const auto b = roots(P("x^2"));
  ASSERT_EQ(b.roots.size(), 1U);
  EXPECT_EQ(b.roots[0].multiplicity, 2);
  EXPECT_EQ(b.roots[0].value, Complex(0.0));

  const auto c = roots(P("x^2 + 1"));
  ASSERT_EQ(c.roots.size(), 2U);
  EXPECT_NEAR(std::abs(c.roots[0].value - Complex(0, 1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c.roots[1].value - Complex(0, -1)), 0.0, 1e-14);

  EXPECT_THROW(roots(P("3")), InputError);
}

TEST(Roots, MethylpentaneProduct) {
  const auto rs = roots(P("x^9 - 8*x^7 + 18*x^5 - 12*x^3"));
  const std::vector<double> want{2.17533, 1.41421, 1.12603, 0.0, -1.12603, -1.41421, -2.17533};
  ASSERT_EQ(rs.roots.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(rs.roots[i].value.real(), want[i], 1e-3);
    EXPECT_EQ(rs.roots[i].value.imag(), 0.0);
    EXPECT_EQ(rs.roots[i].multiplicity, want[i] == 0.0 ? 3 : 1);
  }
  EXPECT_EQ(rs.multiplicity_near(Complex(0), 1e-6), 3);
}

TEST(Roots, HighMultiplicity) {
  const auto rs = roots(pow(P("x - 2"), 6) * pow(P("x^2 + 3"), 2));
  ASSERT_EQ(rs.roots.size(), 3U);
  EXPECT_EQ(rs.roots[0].multiplicity, 6);
  EXPECT_NEAR(rs.roots[0].value.real(), 2.0, 1e-12);
  EXPECT_EQ(rs.total_multiplicity(), 10);
}

TEST(MultiplicityAt, Examples) {
  EXPECT_EQ(multiplicity_at(P("x^4 - 3*x^2"), Rational(0)), 2);
  EXPECT_EQ(multiplicity_at(P("x^2 - 1"), Rational(1)), 1);
  EXPECT_EQ(multiplicity_at(P("x^2 - 1"), Rational(2)), 0);
  EXPECT_EQ(multiplicity_at(pow(P("2*x - 1"), 3), Rational(1, 2)), 3);
}

TEST(NumPoly, Arithmetic) {
  const NumPoly a{Complex(-1), Complex(0), Complex(1)};
  const NumPoly b{Complex(1), Complex(1)};
  EXPECT_EQ(num_mul(a, b), (NumPoly{Complex(-1), Complex(-1), Complex(1), Complex(1)}));
  EXPECT_EQ(num_eval(a, Complex(3)), Complex(8));
  EXPECT_EQ(num_pow(b, 2), (NumPoly{Complex(1), Complex(2), Complex(1)}));
  EXPECT_DOUBLE_EQ(coefficient_deviation(to_numpoly(P("x^2 - 1")), UPoly::from_poly(P("x^2 - 1"))), 0.0);
}

TEST(SpectraProperty, ReconstructionAndMultiplicities) {
  std::mt19937 rng(21);
  for (int rep = 0; rep < 80; ++rep) {
    const int deg = 1 + rep % 12;
    Poly p = random_int_poly(rng, deg);
    if (rep % 3 == 0) p = p * pow(P("x - 1"), 2);
    const UPoly up = UPoly::from_poly(p);
    const auto rs = roots(up);
    EXPECT_EQ(rs.total_multiplicity(), up.degree());
    EXPECT_LT(coefficient_deviation(reconstruct(rs), up), 1e-8) << p.to_string();
  }
}

TEST(SpectraProperty, RealCoefficientsGiveConjugateClosedRoots) {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 40; ++rep) {
    const auto rs = roots(random_int_poly(rng, 2 + rep % 9));
    for (const auto& r : rs.roots) {
      EXPECT_EQ(rs.multiplicity_near(std::conj(r.value), 1e-7), rs.multiplicity_near(r.value, 1e-7));
    }
  }
}

TEST(SpectraProperty, BipartiteSpectraAreSymmetric) {
  for (const auto& t : bipartite_graphs(7)) {
    const auto rs = roots(char_poly_det(t));
    for (const auto& r : rs.roots) {
      EXPECT_EQ(rs.multiplicity_near(-r.value, 1e-7), r.multiplicity) << graph_to_json(t).dump();
    }
  }
}

TEST(SpectraProperty, SortedDescending) {
  std::mt19937 rng(29);
  for (int rep = 0; rep < 30; ++rep) {
    const auto rs = roots(random_int_poly(rng, 3 + rep % 8));
    for (std::size_t i = 1; i < rs.roots.size(); ++i) {
      const Complex a = rs.roots[i - 1].value, b = rs.roots[i].value;
      EXPECT_TRUE(a.real() > b.real() || (a.real() == b.real() && a.imag() >= b.imag()));
    }
  }
}
