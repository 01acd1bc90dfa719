#include "rootedpoly/upoly.hpp"

#include <algorithm>
#include <cmath>

namespace rootedpoly {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(int n, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_poly(const Poly& p, Var v) {
  if (!p.is_univariate_in(v)) throw InputError("expected a polynomial univariate in " + v.name());
  std::vector<Rational> c(p.degree_in(v) + 1);
  for (const auto& [m, coeff] : p.terms()) c[m.exponent(v)] = coeff;
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(Var v) const {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) terms.emplace_back(Monomial(v, static_cast<std::uint32_t>(k)), c_[k]);
  }
  return Poly::from_terms(std::move(terms));
}

Rational UPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

int UPoly::valuation() const noexcept {
  int v = 0;
  while (v < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(v)] == 0) ++v;
  return v;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = Rational(1) / lead();
  return *this * inv;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class den = 1;
  for (const auto& q : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints(c_.size());
  mpz_class content = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    ints[k] = c_[k].get_num() * (den / c_[k].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[k].get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = Rational(ints[k] / content);
  return UPoly(std::move(out));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Rational& s) {
  if (s == 0) return {};
  for (auto& c : a.c_) c *= s;
  return a;
}

UPoly pow(const UPoly& a, int n) {
  UPoly result = UPoly::constant(1);
  UPoly base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv = Rational(1) / b.lead();
  const auto& bc = b.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  Rational t;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Rational q = rem[k] * inv;
    for (std::size_t i = 0; i <= db; ++i) {
      mpq_mul(t.get_mpq_t(), q.get_mpq_t(), bc[i].get_mpq_t());
      rem[k - db + i] -= t;
    }
    quot[k - db] = q;
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::optional<UPoly> exact_divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.is_zero()) return UPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  // Cheap rejection: the lowest nonzero coefficient must divide as well.
  if (a.valuation() < b.valuation()) return std::nullopt;
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.is_zero() ? UPoly{} : a.primitive();
  UPoly y = b.is_zero() ? UPoly{} : b.primitive();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? UPoly{} : r.primitive();
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  const UPoly fm = f.monic();
  const UPoly df = fm.derivative();
  UPoly a = gcd(fm, df);
  UPoly b = divmod(fm, a).first;
  UPoly c = divmod(df, a).first;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const UPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

double log2_abs(const Rational& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::abs(mn)) - std::log2(md) + static_cast<double>(en - ed);
}

}  // namespace rootedpoly
