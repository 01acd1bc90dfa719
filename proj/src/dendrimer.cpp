#include "rootedpoly/dendrimer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rootedpoly {

long dendrimer_order(const DendrimerSpec& spec) {
  spec.validate();
  const long d = spec.progressive_degree();
  long copies = 0;
  long layer = 1;
  for (int j = 0; j < spec.generations; ++j) {
    copies += layer;
    layer *= d;
  }
  return spec.core.order() * (1 + (spec.unit.order() - 1) * copies);
}

namespace {

// Part of P(H) (or of P(H - r)) with exactly k attach sites present, u
// detached from the sites, for k = 0..d.
std::vector<UPoly> site_expansion(const Graph& g, const std::vector<int>& sites, Mode m) {
  const Var site = Var::y(1);
  const Poly p = mode_circuit_poly(g, m).rename([&](Var v) {
    if (v.kind != VarKind::X) return v;
    const int vertex = static_cast<int>(v.index) - 1;
    return std::find(sites.begin(), sites.end(), vertex) != sites.end() ? site : Var::x();
  });
  const Poly detached = detach_unit(p, {site}, unit(m));
  std::vector<UPoly> q;
  for (std::size_t k = 0; k <= sites.size(); ++k) {
    q.push_back(UPoly::from_poly(detached.coefficient(site, static_cast<std::uint32_t>(k))));
  }
  return q;
}

UPoly combine(const std::vector<UPoly>& q, const UPoly& a, const UPoly& b) {
  const auto d = q.size() - 1;
  std::vector<UPoly> apow{UPoly::constant(1)};
  std::vector<UPoly> bpow{UPoly::constant(1)};
  for (std::size_t k = 1; k <= d; ++k) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  UPoly out;
  for (std::size_t k = 0; k <= d; ++k) {
    if (q[k].is_zero()) continue;
    out += q[k] * apow[k] * bpow[d - k];
  }
  return out;
}

Rational numeric_unit(Mode m) {
  const auto u = w_value(m, 1);
  if (!u || *u == 0 || m == Mode::Farrell) {
    throw InputError("dendrimer polynomials need a numeric mode, got " + std::string(mode_name(m)));
  }
  return *u;
}

}  // namespace

DendrimerPolys dendrimer_polynomials(const DendrimerSpec& spec, Mode m) {
  spec.validate();
  const Rational u = numeric_unit(m);
  const int r = *spec.unit.root();
  DendrimerPolys out;
  out.unit_q = site_expansion(spec.unit, spec.attach_sites, m);
  if (spec.unit.order() > 1) {
    std::vector<int> shifted;
    for (int s : spec.attach_sites) shifted.push_back(s < r ? s : s - 1);
    out.unit_minus_root_q = site_expansion(delete_root(spec.unit), shifted, m);
  }
  UPoly a = UPoly::monomial(1, u);
  UPoly b = UPoly::constant(1);
  out.tier.emplace_back(a, b);
  for (int j = 1; j <= spec.generations; ++j) {
    UPoly next_a = combine(out.unit_q, a, b);
    UPoly next_b = combine(out.unit_minus_root_q, a, b);
    a = std::move(next_a);
    b = std::move(next_b);
    out.tier.emplace_back(a, b);
  }
  const int p = spec.core.order();
  for (const auto& c : normalized_gamma(simple_circuit_poly(spec.core, m), p, Poly(u))) {
    out.core_gamma.push_back(c.constant());
  }
  std::vector<UPoly> apow{UPoly::constant(1)};
  std::vector<UPoly> bpow{UPoly::constant(1)};
  for (int k = 1; k <= p; ++k) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  for (int g = 0; g <= p; ++g) {
    const Rational& c = out.core_gamma[static_cast<std::size_t>(g)];
    if (c != 0) out.total += apow[static_cast<std::size_t>(p - g)] * bpow[static_cast<std::size_t>(g)] * c;
  }
  return out;
}

// ------------------------------------------------------------ factor basis

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2305843009213693951ULL;  // 2^61 - 1

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % kPrime); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

// Coefficients mod the prime, or nothing when a denominator or the leading
// coefficient vanishes there.
std::optional<std::vector<u64>> reduce_mod(const UPoly& f) {
  std::vector<u64> out;
  for (const auto& c : f.coefficients()) {
    const u64 den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    const u64 num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    out.push_back(mulmod(num, powmod(den, kPrime - 2)));
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

void trim_mod(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd(a, b) over GF(p); both nonzero.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const u64 f = mulmod(a.back(), inv);
      const auto off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = (a[off + i] + kPrime - mulmod(f, b[i])) % kPrime;
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool certainly_coprime(const UPoly& f, const UPoly& g) {
  auto a = reduce_mod(f);
  auto b = reduce_mod(g);
  return a && b && gcd_degree_mod(*a, *b) == 0;
}

bool certainly_squarefree(const UPoly& f) {
  if (f.degree() <= 1) return true;
  auto a = reduce_mod(f);
  auto b = reduce_mod(f.derivative());
  return a && b && gcd_degree_mod(*a, *b) == 0;
}

void push_factor(std::vector<UPoly>& basis, const UPoly& f) {
  if (f.degree() >= 1) basis.push_back(f.primitive());
}

// Splits the basis until its members are squarefree and pairwise coprime.
void refine(std::vector<UPoly>& basis) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      if (certainly_squarefree(basis[i])) continue;
      const UPoly f = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      for (const auto& [part, mult] : squarefree_decomposition(f)) push_factor(basis, part);
      changed = true;
    }
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        if (certainly_coprime(basis[i], basis[j])) continue;
        const UPoly h = gcd(basis[i], basis[j]);
        if (h.degree() < 1) continue;
        const UPoly fi = divmod(basis[i], h).first;
        const UPoly fj = divmod(basis[j], h).first;
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        push_factor(basis, fi);
        push_factor(basis, fj);
        push_factor(basis, h);
        changed = true;
      }
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> dendrimer_factor_basis(const DendrimerPolys& d) {
  std::vector<UPoly> basis;
  auto absorb = [&](UPoly g) {
    if (g.degree() < 1) return;
    for (const auto& f : basis) {
      while (g.degree() >= f.degree()) {
        auto q = exact_divide(g, f);
        if (!q) break;
        g = std::move(*q);
      }
    }
    push_factor(basis, g);
  };
  for (const auto& [a, b] : d.tier) {
    absorb(b);
    absorb(a);
  }
  absorb(d.total);
  refine(basis);
  std::sort(basis.begin(), basis.end(), [](const UPoly& a, const UPoly& b) { return a.degree() > b.degree(); });
  std::vector<std::pair<UPoly, int>> out;
  UPoly rest = d.total;
  for (const auto& f : basis) {
    int m = 0;
    while (rest.degree() >= f.degree()) {
      auto q = exact_divide(rest, f);
      if (!q) break;
      rest = std::move(*q);
      ++m;
    }
    if (m > 0) out.emplace_back(f, m);
  }
  if (rest.degree() != 0) throw Error("dendrimer factor basis does not cover the polynomial");
  return out;
}

// ---------------------------------------------------------------- spectrum

namespace {

using LDouble = long double;
using LComplex = std::complex<LDouble>;

// Value and first derivative.
struct Dual {
  LComplex v;
  LComplex d;
};

Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }

std::vector<LDouble> to_ld(const UPoly& p) {
  std::vector<LDouble> out;
  for (const auto& c : p.coefficients()) {
    long en = 0;
    long ed = 0;
    const double mn = mpz_get_d_2exp(&en, c.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, c.get_den_mpz_t());
    out.push_back(std::ldexp(static_cast<LDouble>(mn) / md, static_cast<int>(en - ed)));
  }
  return out;
}

Dual horner(const std::vector<LDouble>& c, LComplex z) {
  Dual acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc.d = acc.d * z + acc.v;
    acc.v = acc.v * z + *it;
  }
  return acc;
}

// Evaluates the dendrimer polynomial through the tier recursion.
class StructuredEvaluator {
 public:
  StructuredEvaluator(const DendrimerPolys& d, int generations, LDouble u) : generations_(generations), u_(u) {
    for (const auto& q : d.unit_q) qa_.push_back(to_ld(q));
    for (const auto& q : d.unit_minus_root_q) qb_.push_back(to_ld(q));
    for (const auto& c : d.core_gamma) gamma_.push_back(static_cast<LDouble>(to_double(c)));
  }

  Dual operator()(LComplex z) const {
    Dual a{z * u_, u_};
    Dual b{1, 0};
    for (int j = 0; j < generations_; ++j) {
      const Dual na = combine(qa_, a, b, z);
      const Dual nb = combine(qb_, a, b, z);
      a = na;
      b = nb;
    }
    const auto p = gamma_.size() - 1;
    Dual out{0, 0};
    for (std::size_t g = 0; g <= p; ++g) {
      if (gamma_[g] == 0) continue;
      Dual term{gamma_[g], 0};
      for (std::size_t k = 0; k < p - g; ++k) term = term * a;
      for (std::size_t k = 0; k < g; ++k) term = term * b;
      out = out + term;
    }
    return out;
  }

 private:
  static Dual combine(const std::vector<std::vector<LDouble>>& q, const Dual& a, const Dual& b, LComplex z) {
    if (q.empty()) return {1, 0};
    const auto d = q.size() - 1;
    Dual out{0, 0};
    for (std::size_t k = 0; k <= d; ++k) {
      if (q[k].empty()) continue;
      Dual term = horner(q[k], z);
      for (std::size_t i = 0; i < k; ++i) term = term * a;
      for (std::size_t i = k; i < d; ++i) term = term * b;
      out = out + term;
    }
    return out;
  }

  int generations_;
  LDouble u_;
  std::vector<std::vector<LDouble>> qa_;
  std::vector<std::vector<LDouble>> qb_;
  std::vector<LDouble> gamma_;
};

// Fujiwara's bound on the root moduli, robust to huge coefficients.
double root_bound(const UPoly& f) {
  const int n = f.degree();
  double best = -1e300;
  for (int k = 1; k <= n; ++k) {
    const auto& c = f.coefficients()[static_cast<std::size_t>(n - k)];
    if (c == 0) continue;
    double lg = (log2_abs(c) - log2_abs(f.lead())) / k;
    if (k == n) lg -= 1.0 / n;
    best = std::max(best, lg);
  }
  return best < -1e299 ? 1.0 : 2.0 * std::exp2(best);
}

}  // namespace

RootSet dendrimer_spectrum(const DendrimerSpec& spec, Mode m, double cluster_tol) {
  const DendrimerPolys d = dendrimer_polynomials(spec, m);
  const auto basis = dendrimer_factor_basis(d);
  const StructuredEvaluator eval(d, spec.generations, static_cast<LDouble>(to_double(numeric_unit(m))));

  std::vector<LComplex> z;
  std::vector<LDouble> weight;
  std::size_t element = 0;
  for (const auto& [f, mult] : basis) {
    std::vector<Complex> start;
    if (f.degree() <= 48) {
      start = squarefree_roots(f);
    } else {
      const double radius = root_bound(f);
      const double offset = 0.4 + 0.1 * static_cast<double>(element);
      for (int k = 0; k < f.degree(); ++k) {
        start.push_back(std::polar(radius, offset + 2.0 * std::numbers::pi * k / f.degree()));
      }
    }
    for (auto s : start) {
      z.emplace_back(s.real(), s.imag());
      weight.push_back(static_cast<LDouble>(mult));
    }
    ++element;
  }

  // Weighted Aberth iteration, Jacobi updates so the result does not depend
  // on the thread count.
  const auto n = static_cast<long>(z.size());
  std::vector<LComplex> step(z.size());
  for (int it = 0; it < 400; ++it) {
    LDouble worst = 0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (long i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const Dual pv = eval(z[iu]);
      if (pv.v == LComplex(0)) {
        step[iu] = 0;
        continue;
      }
      LComplex repel = 0;
      for (long j = 0; j < n; ++j) {
        if (j != i) repel += weight[static_cast<std::size_t>(j)] / (z[iu] - z[static_cast<std::size_t>(j)]);
      }
      step[iu] = weight[iu] / (pv.d / pv.v - repel);
      worst = std::max(worst, std::abs(step[iu]) / std::max<LDouble>(1, std::abs(z[iu])));
    }
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= step[i];
    if (worst < 1e-17L) break;
  }

  std::vector<Root> found;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex v(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
    if (std::abs(v.imag()) < 1e-10 * std::max(1.0, std::abs(v.real()))) v.imag(0.0);
    found.push_back({v, static_cast<int>(weight[i]), static_cast<double>(std::abs(step[i]))});
  }
  RootSet rs;
  rs.roots = merge_clusters(std::move(found), cluster_tol);
  rs.source_degree = d.total.degree();
  rs.cluster_tol = cluster_tol;
  if (rs.total_multiplicity() != rs.source_degree) throw Error("dendrimer spectrum lost roots");
  return rs;
}

}  // namespace rootedpoly
