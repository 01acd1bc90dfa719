#pragma once

// Dendrimer polynomials and spectra by factorization alone: the monodendron
// tiers are composed on the polynomial side and the dendrimer graph itself is
// never built.

#include "rootedpoly/factor.hpp"
#include "rootedpoly/graph.hpp"
#include "rootedpoly/oracle.hpp"
#include "rootedpoly/spectra.hpp"
#include "rootedpoly/upoly.hpp"

#include <vector>

namespace rootedpoly {

/// Vertex count of the dendrimer described by spec.
long dendrimer_order(const DendrimerSpec& spec);

struct DendrimerPolys {
  /// tier[j] = (P(M^j), P(M^j - root)), simple, j = 0..generations.
  std::vector<std::pair<UPoly, UPoly>> tier;
  /// q_site[k] for the unit and for the unit less its root: the unit
  /// polynomial's part with exactly k attach sites present (u detached).
  std::vector<UPoly> unit_q;
  std::vector<UPoly> unit_minus_root_q;
  /// Normalized coefficients gamma'_0.. of the core polynomial.
  std::vector<Rational> core_gamma;
  UPoly total;  ///< simple polynomial of the dendrimer
};

/// Exact simple polynomial of the dendrimer under a numeric mode.
DendrimerPolys dendrimer_polynomials(const DendrimerSpec& spec, Mode m);

/// Coprime squarefree factors f_i with P = c * prod f_i^{m_i}, found by trial
/// division with the tier polynomials and refined by gcds when needed.
std::vector<std::pair<UPoly, int>> dendrimer_factor_basis(const DendrimerPolys& d);

/// Roots of the dendrimer polynomial: multiplicities from the factor basis,
/// values by weighted Aberth iteration on a structured evaluator of the tier
/// recursion (never the expanded coefficients). Residuals are the last
/// Aberth corrections.
RootSet dendrimer_spectrum(const DendrimerSpec& spec, Mode m, double cluster_tol = kDefaultClusterTol);

}  // namespace rootedpoly
