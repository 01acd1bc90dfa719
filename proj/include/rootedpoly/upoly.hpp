#pragma once

// Dense univariate polynomials with exact rational coefficients. Used where
// degrees run into the hundreds (dendrimers) and for gcd / squarefree work.

#include "rootedpoly/poly.hpp"
#include "rootedpoly/rational.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace rootedpoly {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients in ascending order of powers.
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly constant(const Rational& c);
  /// x^n.
  static UPoly monomial(int n, const Rational& c = Rational(1));
  /// Throws InputError unless p is univariate in v.
  static UPoly from_poly(const Poly& p, Var v = Var::x());

  Poly to_poly(Var v = Var::x()) const;

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational operator[](int k) const;
  const Rational& lead() const { return c_.back(); }
  /// Multiplicity of the root 0.
  int valuation() const noexcept;

  UPoly derivative() const;
  UPoly monic() const;
  /// Scales to integer coefficients with gcd 1 and positive leading term.
  UPoly primitive() const;

  Rational eval(const Rational& x) const;
  template <typename C>
  C eval_as(const C& x) const {
    C acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + C(static_cast<typename C::value_type>(it->get_d()));
    }
    return acc;
  }

  UPoly& operator+=(const UPoly& b);
  UPoly& operator-=(const UPoly& b);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly pow(const UPoly& a, int n);

/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Quotient when b divides a exactly. Fails fast when the quotient would leave
/// the integers for primitive integer inputs.
std::optional<UPoly> exact_divide(const UPoly& a, const UPoly& b);

/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm: f = lead * prod a_i^i with a_i squarefree, pairwise
/// coprime and monic. Returns the (a_i, i) with positive degree.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// log2 |q| for q != 0, safe for values beyond the double range.
double log2_abs(const Rational& q);

}  // namespace rootedpoly
