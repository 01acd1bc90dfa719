#pragma once

// Composition identities for circuit polynomials of rooted products:
// coalescence, generalized and restricted rooted products, their expansion
// and spectral forms, and the divisibility statements that follow.
//
// Conventions. Every fixed point of a cover contributes (x_i + b_i) * u,
// where u is w_1 (generic) or its value under a mode. Substituting a ratio
// for a vertex variable replaces the pair x_i * u, so target variables are
// first "detached": each monomial is divided by u^k, k being its degree in
// the targets. Loop weights are carried sign-adjusted (loop_sign(mode) * b).

#include "rootedpoly/graph.hpp"
#include "rootedpoly/oracle.hpp"
#include "rootedpoly/poly.hpp"
#include "rootedpoly/spectra.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace rootedpoly {

/// Polynomials of a rooted graph H needed when H is attached somewhere.
struct Attachment {
  Poly full;           ///< P(H)
  Poly minus_root;     ///< P(H_{-r}); 1 when H = K1
  Poly root_stripped;  ///< P(H^triangle)
  Rational root_loop;  ///< signed loop weight at the root
  int order = 1;

  /// Computes the three polynomials with the oracle under mode m. Vertex v of
  /// H becomes variable var_of(v); by default every vertex maps to the simple x.
  static Attachment of(const Graph& h, Mode m, const std::function<Var(int)>& var_of = {},
                       int cap = default_oracle_cap());
};

/// Divides every monomial of p by unit^k, k = total degree in `targets`.
/// unit is a nonzero constant or the variable w1. Throws Error when some
/// monomial is not divisible.
Poly detach_unit(const Poly& p, const std::vector<Var>& targets, const Poly& unit);

/// p(v -> v + c).
Poly shift(const Poly& p, Var v, const Rational& c);

/// For each target (v, N, D, n): p must have degree <= n in v; returns
/// prod D^n * p(v -> N / D).
struct HomogeneousTarget {
  Var var;
  Poly numerator;
  Poly denominator;
  std::uint32_t degree;
};
Poly homogeneous_ratio_substitute(const Poly& p, const std::vector<HomogeneousTarget>& targets);

// ------------------------------------------------------------- coalescence

/// P(G o H) from P(G) (multilinear in root_var) and H's polynomials:
/// P(H_{-r}) * P(G)(root_var -> P(H^triangle) / P(H_{-r})), with H's root loop
/// moved onto the core first.
Poly coalescence_poly(const Poly& bg, const Attachment& h, Var root_var, const Poly& unit);

// --------------------------------------------------------- rooted products

enum class CoreForm {
  /// core_poly is P(G) with its loops; x_i -> P(H_i^triangle) / P(L_i).
  RootLoopsStripped,
  /// core_poly is P(G^box); x_i -> P(H_i) / P(L_i), core loops go into H_i.
  CoreLoopsStripped,
};

/// P(G(Gamma)) where core_poly is in x_1..x_p. core_loops (signed) are only
/// read in CoreLoopsStripped form; may be empty for a loopless core.
Poly rooted_product_poly(const Poly& core_poly, const std::vector<Attachment>& gamma, CoreForm form,
                         const std::vector<Rational>& core_loops, const Poly& unit);

/// gamma'_0..gamma'_p: coefficient of x^{p-g} divided by unit^{p-g}.
/// Throws InputError when gamma'_0 != 1.
std::vector<Poly> normalized_gamma(const Poly& bg_simple, int p, const Poly& unit);

/// Expansion form: sum_g gamma'_g N^{p-g} D^g with N = P(H^triangle),
/// D = P(H_{-r}), gamma' taken from P(G)(x -> x + root loop of H).
Poly simple_rooted_product_poly(const Poly& bg_simple, const Attachment& h, int p, const Poly& unit);

/// Substitution form for identical attachments: the multivariate core
/// polynomial with every x_i -> N / D, then made simple.
Poly simple_rooted_product_by_substitution(const Poly& core_multivariate, const Attachment& h, int p,
                                           const Poly& unit);

/// Roots lambda_i of the normalized core polynomial after moving H's root
/// loop onto the core: prod (x - lambda_i) = sum_g gamma'_g x^{p-g}.
RootSet shifted_core_roots(const Poly& bg_simple, const Attachment& h, int p, const Poly& unit);

/// prod_i [N - lambda_i D], numerically.
NumPoly spectral_product_form(const RootSet& lambdas, const Poly& bh_tri, const Poly& bh_minus_r);

/// prod_i P(H_{lambda_i}) where H_{lambda} is H with root loop -lambda / (s u),
/// evaluated by the oracle with floating weights.
NumPoly spectral_product_by_loops(const RootSet& lambdas, const Graph& h, Mode m, int cap = default_oracle_cap());

// ---------------------------------------------------- restricted products

struct BipartiteExpansion {
  std::vector<Poly> delta;  ///< delta'_0 .. delta'_{p2}, delta'_0 = 1
  int p1 = 0;
  int p2 = 0;
};

/// Parts of t with part 1 the larger side (relabelled when necessary).
std::vector<int> oriented_parts(const Graph& t);

/// P(T^box; y1, y2): the x variables of part-k vertices become y_k.
Poly bipartite_y_poly(const Graph& t, Mode m, int cap = default_oracle_cap());

/// delta' of T^box under m. Throws InputError ("not bipartite-consistent")
/// on a monomial whose part degrees do not drop synchronously.
BipartiteExpansion bipartite_delta(const Graph& t, Mode m, int cap = default_oracle_cap());

/// The four polynomials of one side of a restricted product.
struct Side {
  Poly ph;  ///< P(H_k) including any loop common to part k of the core
  Poly pl;  ///< P(L_k)
};

/// Side for attachment h at a part whose core vertices carry the signed loop
/// part_loop: PH = P(H) + part_loop * u * P(L).
Side make_side(const Attachment& h, const Rational& part_loop, const Poly& unit);
/// Side of a bare core vertex (no attachment) with signed loop b:
/// PH = (x + b) u, PL = 1.
Side bare_side(const Rational& b, const Poly& unit);

/// Expansion form: sum_k delta'_k PH1^{p1-k} PH2^{p2-k} (PL1 PL2)^k.
Poly restricted_product_poly(const BipartiteExpansion& e, const Side& s1, const Side& s2);

/// Substitution form: u-detached P(T^box; y1, y2) with y_k -> PH_k / PL_k,
/// homogenized by PL1^{p1} PL2^{p2}.
Poly restricted_product_by_substitution(const Poly& y_poly, int p1, int p2, const Side& s1, const Side& s2,
                                        const Poly& unit);

struct MuSquares {
  UPoly q;  ///< monic; P(T^box; x) = lead * x^{p1-p2} q(x^2)
  RootSet mu2;
  int p1 = 0;
  int p2 = 0;
};

/// Throws InputError ("spectrum not symmetric") if the simple polynomial has
/// mixed parity or is not divisible by x^{p1-p2}.
MuSquares mu_squares(const Poly& t_simple, int p1, int p2);

/// PH1^{p1-p2} prod_i [PH1 PH2 - mu_i^2 PL1 PL2], numerically.
NumPoly restricted_spectral_form(const MuSquares& mu, const Side& s1, const Side& s2);

/// PH1^{p1-p2} prod_i P(H_{mu_i^2}) with H_{mu^2} the edge join of H1 and H2
/// (part loops moved onto their roots) with weight -mu^2 / w2, evaluated by
/// the oracle with floating weights.
NumPoly restricted_spectral_by_join(const MuSquares& mu, const Graph& h1, const Graph& h2, Mode m,
                                    int cap = default_oracle_cap());

/// Reciprocal products on an equipartite core have equal polynomials.
/// Throws InputError ("parts unequal") when p1 != p2. Uses the oracle on both
/// constructed products when they fit under cap, the expansion form otherwise.
bool reciprocal_check(const Graph& t, const Graph& h1, const Graph& h2, Mode m, int cap = default_oracle_cap());

// ------------------------------------------------------------ divisibility

struct ZeroDivisibility {
  int valuation = 0;  ///< multiplicity of 0 in P(T^box; x)
  int s = 0;          ///< p1 - p2 + number of vanishing mu_i^2
  bool applicable = false;
  Poly divisor;
  bool divides = false;
  Poly quotient;
};

/// PH1^s PH2^{s - p1 + p2} divides P(T(Gamma); x) when s >= p1 - p2.
ZeroDivisibility zero_divisibility_report(const Poly& t_simple, const Poly& ph1, const Poly& ph2,
                                          const Poly& product, int p1, int p2);

struct RootDivisibility {
  int k = 0;  ///< multiplicity of 0 in the shifted core polynomial
  Poly divisor;
  bool divides = false;
};

/// If 0 is a k-fold root of the core polynomial (H's root loop moved onto
/// the core), P(H^triangle)^k divides P(G(H)).
RootDivisibility root_divisibility_report(const Poly& bg_simple, const Attachment& h, const Poly& product);

/// m(lambda) = min of the multiplicities of lambda in both polynomials:
/// exact when lambda is rational, by root clustering within tol otherwise.
int common_multiplicity(const Poly& a, const Poly& b, const Rational& lambda);
int common_multiplicity(const Poly& a, const Poly& b, Complex lambda, double tol);

}  // namespace rootedpoly
