#include "rootedpoly/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rootedpoly {

// ---------------------------------------------------------- NumPoly helpers

NumPoly to_numpoly(const UPoly& p) {
  NumPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(to_double(c), 0.0);
  return out;
}

NumPoly to_numpoly(const Poly& p) { return to_numpoly(UPoly::from_poly(p)); }

NumPoly num_add(const NumPoly& a, const NumPoly& b) {
  NumPoly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

NumPoly num_sub(const NumPoly& a, const NumPoly& b) { return num_add(a, num_scale(b, -1.0)); }

NumPoly num_mul(const NumPoly& a, const NumPoly& b) {
  if (a.empty() || b.empty()) return {};
  NumPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

NumPoly num_scale(NumPoly a, Complex s) {
  for (auto& c : a) c *= s;
  return a;
}

NumPoly num_pow(const NumPoly& a, int n) {
  NumPoly result{Complex(1)};
  for (int k = 0; k < n; ++k) result = num_mul(result, a);
  return result;
}

Complex num_eval(const NumPoly& p, Complex x) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double coefficient_deviation(const NumPoly& approx, const UPoly& exact) {
  const auto n = std::max(approx.size(), exact.coefficients().size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = k < approx.size() ? approx[k] : Complex(0);
    const double e = k < exact.coefficients().size() ? to_double(exact.coefficients()[k]) : 0.0;
    worst = std::max(worst, std::abs(a - e) / std::max(std::abs(e), 1.0));
  }
  return worst;
}

// ----------------------------------------------------------------- RootSet

int RootSet::total_multiplicity() const {
  return std::accumulate(roots.begin(), roots.end(), 0, [](int s, const Root& r) { return s + r.multiplicity; });
}

std::vector<Complex> RootSet::expanded() const {
  std::vector<Complex> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

int RootSet::multiplicity_near(Complex z, double tol) const {
  int m = 0;
  for (const auto& r : roots) {
    if (std::abs(r.value - z) <= tol) m += r.multiplicity;
  }
  return m;
}

NumPoly reconstruct(const RootSet& rs) {
  NumPoly out{Complex(1)};
  for (const auto& z : rs.expanded()) out = num_mul(out, NumPoly{-z, Complex(1)});
  return out;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
}

std::vector<Root> merge_clusters(std::vector<Root> roots, double tol) {
  const auto n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(roots[i].value - roots[j].value) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<Root> merged;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(merged.size());
      merged.push_back({Complex(0), 0, 0.0});
    }
    auto& m = merged[static_cast<std::size_t>(slot[r])];
    m.value += roots[i].value * static_cast<double>(roots[i].multiplicity);
    m.multiplicity += roots[i].multiplicity;
    m.residual = std::max(m.residual, roots[i].residual);
  }
  for (auto& m : merged) {
    m.value /= static_cast<double>(m.multiplicity);
    // Components this far below the modulus are rounding noise; they would
    // only perturb the ordering.
    const double noise = 1e-12 * std::abs(m.value);
    if (std::abs(m.value.real()) < noise) m.value.real(0.0);
    if (std::abs(m.value.imag()) < noise) m.value.imag(0.0);
  }
  sort_roots(merged);
  return merged;
}

// ------------------------------------------------------------ root finding

namespace {

using LComplex = std::complex<long double>;

std::vector<long double> to_long_double(const UPoly& p) {
  std::vector<long double> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    // Numerator and denominator separately keep the full double mantissa.
    long en = 0;
    long ed = 0;
    const double mn = mpz_get_d_2exp(&en, c.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, c.get_den_mpz_t());
    out.push_back(std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed)));
  }
  return out;
}

// Value and derivative by Horner.
std::pair<LComplex, LComplex> horner(const std::vector<long double>& c, LComplex z) {
  LComplex v = 0;
  LComplex d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

LComplex newton_polish(const std::vector<long double>& c, LComplex z) {
  for (int it = 0; it < 60; ++it) {
    auto [v, d] = horner(c, z);
    if (v == LComplex(0) || d == LComplex(0)) break;
    const LComplex step = v / d;
    z -= step;
    if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
  }
  return z;
}

// Parlett-Reinsch balancing followed by a dense eigensolve of the companion
// matrix of the monic polynomial c.
bool companion_roots(const std::vector<long double>& c, std::vector<Complex>& out) {
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = static_cast<double>(-c[static_cast<std::size_t>(i)] / c.back());
  for (bool changed = true; changed;) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double col = m.col(i).cwiseAbs().sum() - std::abs(m(i, i));
      const double row = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
      if (col == 0.0 || row == 0.0) continue;
      double f = 1.0;
      double cc = col;
      while (cc < row / 2.0) {
        cc *= 2.0;
        f *= 2.0;
      }
      while (cc >= row * 2.0) {
        cc /= 2.0;
        f /= 2.0;
      }
      if ((cc + row / f) < 0.95 * (col + row)) {
        changed = true;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) return false;
  out.clear();
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return std::all_of(out.begin(), out.end(), [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::vector<Complex> durand_kerner(const std::vector<long double>& c) {
  const auto n = c.size() - 1;
  std::vector<LComplex> z(n);
  // Cauchy-like radius bound for the starting circle.
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c.back()));
  radius = 1 + radius;
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 0.4L + 2.0L * 3.14159265358979323846L * static_cast<long double>(k) / static_cast<long double>(n));
  }
  for (int it = 0; it < 2000; ++it) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      LComplex denom = c.back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const LComplex step = horner(c, z[i]).first / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-18L) break;
  }
  std::vector<Complex> out;
  for (auto v : z) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return out;
}

}  // namespace

std::vector<Complex> squarefree_roots(const UPoly& g) {
  if (g.degree() < 1) return {};
  const auto c = to_long_double(g);
  if (g.degree() == 1) {
    const Rational r = -g[0] / g[1];
    return {Complex(to_double(r), 0.0)};
  }
  std::vector<Complex> raw;
  bool ok = companion_roots(c, raw);
  std::vector<Complex> polished;
  if (ok) {
    for (auto z : raw) {
      const LComplex p = newton_polish(c, LComplex(z.real(), z.imag()));
      polished.emplace_back(static_cast<double>(p.real()), static_cast<double>(p.imag()));
    }
    // Polishing must not have collapsed two simple roots onto one.
    for (std::size_t i = 0; ok && i < polished.size(); ++i) {
      for (std::size_t j = i + 1; j < polished.size(); ++j) {
        if (std::abs(polished[i] - polished[j]) < 1e-10 * std::max(1.0, std::abs(polished[i]))) {
          ok = false;
          break;
        }
      }
    }
  }
  if (!ok) {
    polished.clear();
    for (auto z : durand_kerner(c)) {
      const LComplex p = newton_polish(c, LComplex(z.real(), z.imag()));
      polished.emplace_back(static_cast<double>(p.real()), static_cast<double>(p.imag()));
    }
  }
  return polished;
}

RootSet roots(const UPoly& p, double cluster_tol) {
  if (p.degree() < 1) throw InputError("roots: polynomial has degree < 1");
  const auto c = to_long_double(p);
  std::vector<Root> found;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    const auto pc = to_long_double(part);
    const double scale = static_cast<double>(std::abs(pc.back()));
    for (auto z : squarefree_roots(part)) {
      if (std::abs(z.imag()) < 1e-14 * std::max(1.0, std::abs(z.real()))) z.imag(0.0);
      const auto v = horner(pc, LComplex(z.real(), z.imag())).first;
      found.push_back({z, mult, static_cast<double>(std::abs(v)) / scale});
    }
  }
  RootSet rs;
  rs.roots = merge_clusters(std::move(found), cluster_tol);
  rs.source_degree = p.degree();
  rs.cluster_tol = cluster_tol;
  return rs;
}

RootSet roots(const Poly& p, double cluster_tol) { return roots(UPoly::from_poly(p), cluster_tol); }

int multiplicity_at(const UPoly& p, const Rational& lambda) {
  if (p.is_zero()) throw InputError("multiplicity_at: zero polynomial");
  const UPoly factor({-lambda, Rational(1)});
  int k = 0;
  UPoly q = p;
  while (auto next = exact_divide(q, factor)) {
    q = std::move(*next);
    ++k;
  }
  return k;
}

int multiplicity_at(const Poly& p, const Rational& lambda) { return multiplicity_at(UPoly::from_poly(p), lambda); }

}  // namespace rootedpoly
