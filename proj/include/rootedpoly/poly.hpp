#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Every polynomial result of the library is a Poly. Terms are kept in a
// canonical order (higher total degree first, then lexicographic in the
// variable order XSimple < X(1) < X(2) < ... < Y(1) < Y(2) < W(1) < ...),
// so structural equality is polynomial equality.

#include "rootedpoly/error.hpp"
#include "rootedpoly/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootedpoly {

enum class VarKind : std::uint8_t { XSimple = 0, X = 1, Y = 2, W = 3 };

/// A polynomial indeterminate: the simple x, a per-vertex x_i, a part
/// variable y_1/y_2 or a cycle-length weight w_i. Indices are 1-based.
struct Var {
  VarKind kind = VarKind::XSimple;
  std::uint32_t index = 0;

  static constexpr Var x() { return {VarKind::XSimple, 0}; }
  static constexpr Var x(std::uint32_t i) { return {VarKind::X, i}; }
  static constexpr Var y(std::uint32_t i) { return {VarKind::Y, i}; }
  static constexpr Var w(std::uint32_t i) { return {VarKind::W, i}; }

  std::string name() const;

  friend constexpr auto operator<=>(const Var&, const Var&) = default;
};

/// Product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t exponent(Var v) const noexcept;

  /// Copy of this monomial with v removed.
  Monomial without(Var v) const;
  /// Returns nullopt when `divisor` does not divide this monomial.
  std::optional<Monomial> divided_by(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Canonical order: total degree descending, then lexicographic by variable
/// order with larger exponents first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)
  Poly(Var v);              // NOLINT(google-explicit-constructor)
  Poly(Monomial m, Rational c);
  /// Terms may be unsorted and contain duplicates or zero coefficients.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero when absent).
  Rational constant() const;
  std::size_t size() const noexcept { return terms_.size(); }

  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(Var v) const noexcept;
  std::vector<Var> variables() const;
  bool is_univariate_in(Var v) const noexcept;

  /// Sum of the terms whose exponent of v equals `exponent`, with v removed.
  Poly coefficient(Var v, std::uint32_t exponent) const;
  /// Coefficient of the monomial m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  /// Applies f to every variable; f must be injective on the variables present
  /// or the images get merged by multiplication.
  Poly rename(const std::function<Var(Var)>& f) const;

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical text, e.g. `x^9 - 8*x^7 + 18*x^5 - 12*x^3` or `1/2*w3`.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& a, std::uint32_t n);

/// Replaces every occurrence of v by q and re-expands exactly.
Poly substitute(const Poly& p, Var v, const Poly& q);

struct RatioTarget {
  Var var;
  Poly numerator;
  Poly denominator;
};

/// For p of degree <= 1 in every target variable, returns
/// prod_i D_i * p(v_i -> N_i / D_i), a polynomial. Throws InputError
/// ("not multilinear") otherwise.
Poly multilinear_ratio_substitute(const Poly& p, std::span<const RatioTarget> targets);

/// Exact division of p by a divisor univariate in Var::x(). Coefficients of p
/// in other variables are allowed. Returns the quotient when the remainder is
/// zero. Throws InputError ("unsupported divisor") for other divisors.
std::optional<Poly> divides(const Poly& divisor, const Poly& p);

/// Coefficients of descending powers of Var::x(); leading coefficient first.
std::vector<Poly> coeffs_in_x(const Poly& p);

/// Parses the canonical text form (and any equivalent sum of products).
Poly parse_poly(std::string_view text);

template <typename T>
T eval(const Poly& p, const std::map<Var, T>& assignment,
       const std::function<T(const Rational&)>& lift) {
  T total = lift(Rational(0));
  for (const auto& [mono, coeff] : p.terms()) {
    T term = lift(coeff);
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw InputError("eval: no value for " + v.name());
      for (std::uint32_t k = 0; k < e; ++k) term = term * it->second;
    }
    total = total + term;
  }
  return total;
}

Rational eval(const Poly& p, const std::map<Var, Rational>& assignment);
double eval(const Poly& p, const std::map<Var, double>& assignment);

}  // namespace rootedpoly
