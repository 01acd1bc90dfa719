#pragma once

// Numeric roots of exact univariate polynomials, with multiplicities.

#include "rootedpoly/poly.hpp"
#include "rootedpoly/upoly.hpp"

#include <complex>
#include <vector>

namespace rootedpoly {

using Complex = std::complex<double>;

/// Polynomial with floating coefficients, ascending powers.
using NumPoly = std::vector<Complex>;

NumPoly to_numpoly(const UPoly& p);
/// p must be univariate in Var::x().
NumPoly to_numpoly(const Poly& p);
NumPoly num_add(const NumPoly& a, const NumPoly& b);
NumPoly num_sub(const NumPoly& a, const NumPoly& b);
NumPoly num_mul(const NumPoly& a, const NumPoly& b);
NumPoly num_scale(NumPoly a, Complex s);
NumPoly num_pow(const NumPoly& a, int n);
Complex num_eval(const NumPoly& p, Complex x);

/// max_k |approx_k - exact_k| / max(|exact_k|, 1) over all coefficients.
double coefficient_deviation(const NumPoly& approx, const UPoly& exact);

inline constexpr double kDefaultClusterTol = 1e-7;

struct Root {
  Complex value;
  int multiplicity = 1;
  /// |p(value)| for the polynomial the root was found for.
  double residual = 0.0;
};

struct RootSet {
  std::vector<Root> roots;  ///< descending real part, then imaginary part
  int source_degree = 0;
  double cluster_tol = kDefaultClusterTol;

  int total_multiplicity() const;
  /// Roots repeated by multiplicity, in order.
  std::vector<Complex> expanded() const;
  /// Sum of the multiplicities of the roots within tol of z.
  int multiplicity_near(Complex z, double tol) const;
};

/// All complex roots: squarefree decomposition over Q, companion-matrix
/// eigenvalues per squarefree part, Newton polish, Durand-Kerner fallback,
/// then clusters closer than cluster_tol merged. Throws for degree < 1.
RootSet roots(const UPoly& p, double cluster_tol = kDefaultClusterTol);
RootSet roots(const Poly& p, double cluster_tol = kDefaultClusterTol);

/// Roots of a squarefree polynomial: companion eigenvalues with Newton
/// polish, Durand-Kerner when that fails.
std::vector<Complex> squarefree_roots(const UPoly& g);

/// Largest k with (x - lambda)^k dividing p (p univariate in x, nonzero).
int multiplicity_at(const Poly& p, const Rational& lambda);
int multiplicity_at(const UPoly& p, const Rational& lambda);

/// Monic prod (x - r) over the expanded roots.
NumPoly reconstruct(const RootSet& rs);

/// Merges values closer than tol into weighted clusters and sorts them.
/// Cluster centers are multiplicity-weighted means.
std::vector<Root> merge_clusters(std::vector<Root> roots, double tol);
void sort_roots(std::vector<Root>& roots);

}  // namespace rootedpoly
