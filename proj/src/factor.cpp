#include "rootedpoly/factor.hpp"

#include <algorithm>

namespace rootedpoly {

namespace {

Poly rename_vertices(const Poly& p, const std::function<Var(int)>& var_of) {
  return p.rename([&](Var v) { return v.kind == VarKind::X ? var_of(static_cast<int>(v.index) - 1) : v; });
}

bool is_w1(const Poly& unit) { return unit == Poly(Var::w(1)); }

void check_unit(const Poly& unit) {
  if (!(is_w1(unit) || (unit.is_constant() && !unit.is_zero()))) {
    throw InputError("unit must be w1 or a nonzero constant, got " + unit.to_string());
  }
}

const Var kY1 = Var::y(1);
const Var kY2 = Var::y(2);

}  // namespace

Attachment Attachment::of(const Graph& h, Mode m, const std::function<Var(int)>& var_of, int cap) {
  const int r = h.require_root("attachment");
  const std::function<Var(int)> to_var = var_of ? var_of : [](int) { return Var::x(); };
  Attachment a;
  a.order = h.order();
  a.full = rename_vertices(mode_circuit_poly(h, m, cap), to_var);
  a.root_stripped = rename_vertices(mode_circuit_poly(strip_root_loops(h), m, cap), to_var);
  if (h.order() == 1) {
    a.minus_root = Poly(1L);
  } else {
    a.minus_root = rename_vertices(mode_circuit_poly(delete_root(h), m, cap),
                                   [&](int v) { return to_var(v < r ? v : v + 1); });
  }
  a.root_loop = Rational(loop_sign(m)) * h.loop(r);
  return a;
}

Poly detach_unit(const Poly& p, const std::vector<Var>& targets, const Poly& unit) {
  check_unit(unit);
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) {
    std::uint32_t k = 0;
    for (Var v : targets) k += mono.exponent(v);
    if (k == 0) {
      terms.emplace_back(mono, c);
    } else if (unit.is_constant()) {
      Rational coeff = c;
      const Rational u = unit.constant();
      for (std::uint32_t i = 0; i < k; ++i) coeff /= u;
      terms.emplace_back(mono, coeff);
    } else {
      auto reduced = mono.divided_by(Monomial(Var::w(1), k));
      if (!reduced) throw Error("detach_unit: term " + mono.to_string() + " lacks w1^" + std::to_string(k));
      terms.emplace_back(std::move(*reduced), c);
    }
  }
  return Poly::from_terms(std::move(terms));
}

Poly shift(const Poly& p, Var v, const Rational& c) {
  if (c == 0) return p;
  return substitute(p, v, Poly(v) + Poly(c));
}

Poly homogeneous_ratio_substitute(const Poly& p, const std::vector<HomogeneousTarget>& targets) {
  for (const auto& t : targets) {
    if (p.degree_in(t.var) > t.degree) {
      throw InputError("homogeneous substitution: degree of " + t.var.name() + " exceeds " + std::to_string(t.degree));
    }
  }
  auto rec = [&](auto&& self, const Poly& q, std::size_t i) -> Poly {
    if (q.is_zero()) return {};
    if (i == targets.size()) return q;
    const auto& t = targets[i];
    std::vector<Poly> npow{Poly(1L)};
    std::vector<Poly> dpow{Poly(1L)};
    for (std::uint32_t e = 1; e <= t.degree; ++e) {
      npow.push_back(npow.back() * t.numerator);
      dpow.push_back(dpow.back() * t.denominator);
    }
    Poly out;
    for (std::uint32_t e = 0; e <= t.degree; ++e) {
      const Poly c = q.coefficient(t.var, e);
      if (c.is_zero()) continue;
      out += self(self, c, i + 1) * npow[e] * dpow[t.degree - e];
    }
    return out;
  };
  return rec(rec, p, 0);
}

// ------------------------------------------------------------- coalescence

Poly coalescence_poly(const Poly& bg, const Attachment& h, Var root_var, const Poly& unit) {
  const Poly detached = detach_unit(shift(bg, root_var, h.root_loop), {root_var}, unit);
  const RatioTarget target{root_var, h.root_stripped, h.minus_root};
  return multilinear_ratio_substitute(detached, std::span<const RatioTarget>(&target, 1));
}

// --------------------------------------------------------- rooted products

Poly rooted_product_poly(const Poly& core_poly, const std::vector<Attachment>& gamma, CoreForm form,
                         const std::vector<Rational>& core_loops, const Poly& unit) {
  const auto p = gamma.size();
  for (const auto& v : core_poly.variables()) {
    if (v.kind == VarKind::X && v.index > p) {
      throw InputError("rooted_product_poly: core polynomial uses " + v.name() + " but the family has " +
                       std::to_string(p) + " members");
    }
  }
  if (form == CoreForm::CoreLoopsStripped && !core_loops.empty() && core_loops.size() != p) {
    throw InputError("rooted_product_poly: core loop count does not match the family");
  }
  std::vector<Var> vars;
  for (std::size_t i = 0; i < p; ++i) vars.push_back(Var::x(static_cast<std::uint32_t>(i + 1)));
  Poly base = core_poly;
  std::vector<RatioTarget> targets;
  targets.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& h = gamma[i];
    if (form == CoreForm::RootLoopsStripped) {
      base = shift(base, vars[i], h.root_loop);
      targets.push_back({vars[i], h.root_stripped, h.minus_root});
    } else {
      const Rational b = core_loops.empty() ? Rational(0) : core_loops[i];
      targets.push_back({vars[i], h.full + Poly(b) * unit * h.minus_root, h.minus_root});
    }
  }
  return multilinear_ratio_substitute(detach_unit(base, vars, unit), targets);
}

std::vector<Poly> normalized_gamma(const Poly& bg_simple, int p, const Poly& unit) {
  if (static_cast<int>(bg_simple.degree_in(Var::x())) != p) {
    throw InputError("normalized_gamma: expected degree " + std::to_string(p) + " in x");
  }
  const Poly detached = detach_unit(bg_simple, {Var::x()}, unit);
  std::vector<Poly> gamma;
  gamma.reserve(static_cast<std::size_t>(p + 1));
  for (int g = 0; g <= p; ++g) gamma.push_back(detached.coefficient(Var::x(), static_cast<std::uint32_t>(p - g)));
  if (gamma.front() != Poly(1L)) {
    throw InputError("leading coefficient gamma_0 != 1 (got " + gamma.front().to_string() + ")");
  }
  return gamma;
}

Poly simple_rooted_product_poly(const Poly& bg_simple, const Attachment& h, int p, const Poly& unit) {
  const auto gamma = normalized_gamma(shift(bg_simple, Var::x(), h.root_loop), p, unit);
  std::vector<Poly> npow{Poly(1L)};
  std::vector<Poly> dpow{Poly(1L)};
  for (int e = 1; e <= p; ++e) {
    npow.push_back(npow.back() * h.root_stripped);
    dpow.push_back(dpow.back() * h.minus_root);
  }
  Poly out;
  for (int g = 0; g <= p; ++g) {
    if (gamma[static_cast<std::size_t>(g)].is_zero()) continue;
    out += gamma[static_cast<std::size_t>(g)] * npow[static_cast<std::size_t>(p - g)] * dpow[static_cast<std::size_t>(g)];
  }
  return out;
}

Poly simple_rooted_product_by_substitution(const Poly& core_multivariate, const Attachment& h, int p,
                                           const Poly& unit) {
  const std::vector<Attachment> gamma(static_cast<std::size_t>(p), h);
  return to_simple(rooted_product_poly(core_multivariate, gamma, CoreForm::RootLoopsStripped, {}, unit));
}

RootSet shifted_core_roots(const Poly& bg_simple, const Attachment& h, int p, const Poly& unit) {
  const auto gamma = normalized_gamma(shift(bg_simple, Var::x(), h.root_loop), p, unit);
  std::vector<Rational> asc(static_cast<std::size_t>(p + 1));
  for (int g = 0; g <= p; ++g) {
    const auto& c = gamma[static_cast<std::size_t>(g)];
    if (!c.is_constant()) throw InputError("shifted_core_roots: symbolic coefficient " + c.to_string());
    asc[static_cast<std::size_t>(p - g)] = c.constant();
  }
  return roots(UPoly(std::move(asc)));
}

NumPoly spectral_product_form(const RootSet& lambdas, const Poly& bh_tri, const Poly& bh_minus_r) {
  const NumPoly n = to_numpoly(bh_tri);
  const NumPoly d = to_numpoly(bh_minus_r);
  NumPoly out{Complex(1)};
  for (const auto& lam : lambdas.expanded()) out = num_mul(out, num_sub(n, num_scale(d, lam)));
  return out;
}

NumPoly spectral_product_by_loops(const RootSet& lambdas, const Graph& h, Mode m, int cap) {
  const auto u = w_value(m, 1);
  if (!u || *u == 0) throw InputError("spectral_product_by_loops: mode needs a nonzero numeric w1");
  const double su = loop_sign(m) * to_double(*u);
  const NumGraph hn = to_numeric(h);
  NumPoly out{Complex(1)};
  for (const auto& lam : lambdas.expanded()) {
    out = num_mul(out, numeric_simple_poly(attach_root_loop(hn, -lam / su), m, cap));
  }
  return out;
}

// ---------------------------------------------------- restricted products

std::vector<int> oriented_parts(const Graph& t) {
  std::vector<int> parts;
  if (t.parts()) {
    parts = *t.parts();
  } else {
    auto found = bipartition(t);
    if (!found) throw InputError("core is not bipartite");
    parts = std::move(*found);
  }
  auto [p1, p2] = part_sizes(parts);
  if (p1 < p2) {
    for (auto& l : parts) l = 3 - l;
  }
  return parts;
}

Poly bipartite_y_poly(const Graph& t, Mode m, int cap) {
  const auto parts = oriented_parts(t);
  Graph tb = strip_all_loops(t);
  tb.set_parts(std::nullopt);
  return mode_circuit_poly(tb, m, cap).rename([&](Var v) {
    return v.kind == VarKind::X ? Var::y(static_cast<std::uint32_t>(parts[v.index - 1])) : v;
  });
}

BipartiteExpansion bipartite_delta(const Graph& t, Mode m, int cap) {
  const auto parts = oriented_parts(t);
  const auto [p1, p2] = part_sizes(parts);
  const Poly detached = detach_unit(bipartite_y_poly(t, m, cap), {kY1, kY2}, unit(m));
  BipartiteExpansion e{{}, p1, p2};
  Poly rebuilt;
  for (int k = 0; k <= p2; ++k) {
    const auto e1 = static_cast<std::uint32_t>(p1 - k);
    const auto e2 = static_cast<std::uint32_t>(p2 - k);
    Poly d = detached.coefficient(kY1, e1).coefficient(kY2, e2);
    rebuilt += d * Poly(Monomial::from_factors({{kY1, e1}, {kY2, e2}}), Rational(1));
    e.delta.push_back(std::move(d));
  }
  if (rebuilt != detached) throw InputError("not bipartite-consistent: part degrees do not drop synchronously");
  if (e.delta.front() != Poly(1L)) throw InputError("not bipartite-consistent: delta_0 != 1");
  return e;
}

Side make_side(const Attachment& h, const Rational& part_loop, const Poly& unit) {
  return {h.full + Poly(part_loop) * unit * h.minus_root, h.minus_root};
}

Side bare_side(const Rational& b, const Poly& unit) { return {(Poly(Var::x()) + Poly(b)) * unit, Poly(1L)}; }

Poly restricted_product_poly(const BipartiteExpansion& e, const Side& s1, const Side& s2) {
  const int p1 = e.p1;
  const int p2 = e.p2;
  std::vector<Poly> a{Poly(1L)};
  std::vector<Poly> b{Poly(1L)};
  std::vector<Poly> c{Poly(1L)};
  const Poly pl = s1.pl * s2.pl;
  for (int k = 1; k <= p1; ++k) a.push_back(a.back() * s1.ph);
  for (int k = 1; k <= p2; ++k) {
    b.push_back(b.back() * s2.ph);
    c.push_back(c.back() * pl);
  }
  Poly out;
  for (int k = 0; k <= p2; ++k) {
    const auto& d = e.delta[static_cast<std::size_t>(k)];
    if (d.is_zero()) continue;
    out += d * a[static_cast<std::size_t>(p1 - k)] * b[static_cast<std::size_t>(p2 - k)] * c[static_cast<std::size_t>(k)];
  }
  return out;
}

Poly restricted_product_by_substitution(const Poly& y_poly, int p1, int p2, const Side& s1, const Side& s2,
                                        const Poly& unit) {
  const Poly detached = detach_unit(y_poly, {kY1, kY2}, unit);
  return homogeneous_ratio_substitute(detached, {{kY1, s1.ph, s1.pl, static_cast<std::uint32_t>(p1)},
                                                 {kY2, s2.ph, s2.pl, static_cast<std::uint32_t>(p2)}});
}

MuSquares mu_squares(const Poly& t_simple, int p1, int p2) {
  const UPoly up = UPoly::from_poly(t_simple);
  const int gap = p1 - p2;
  if (up.degree() != p1 + p2) throw InputError("mu_squares: degree does not match the part sizes");
  const auto& c = up.coefficients();
  for (int k = 0; k <= up.degree(); ++k) {
    if (c[static_cast<std::size_t>(k)] == 0) continue;
    if (k < gap || (k - gap) % 2 != 0) throw InputError("spectrum not symmetric");
  }
  std::vector<Rational> q(static_cast<std::size_t>(p2 + 1));
  for (int j = 0; j <= p2; ++j) q[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(gap + 2 * j)] / up.lead();
  MuSquares mu{UPoly(std::move(q)), {}, p1, p2};
  if (p2 > 0) {
    mu.mu2 = roots(mu.q);
  } else {
    mu.mu2.source_degree = 0;
  }
  return mu;
}

NumPoly restricted_spectral_form(const MuSquares& mu, const Side& s1, const Side& s2) {
  const NumPoly a = to_numpoly(s1.ph);
  const NumPoly b = to_numpoly(s2.ph);
  const NumPoly c = to_numpoly(s1.pl * s2.pl);
  const NumPoly ab = num_mul(a, b);
  NumPoly out = num_pow(a, mu.p1 - mu.p2);
  for (const auto& m2 : mu.mu2.expanded()) out = num_mul(out, num_sub(ab, num_scale(c, m2)));
  return out;
}

NumPoly restricted_spectral_by_join(const MuSquares& mu, const Graph& h1, const Graph& h2, Mode m, int cap) {
  const auto w2 = w_value(m, 2);
  if (!w2 || *w2 == 0) throw InputError("restricted_spectral_by_join: mode needs a nonzero numeric w2");
  const NumGraph n1 = to_numeric(h1);
  const NumGraph n2 = to_numeric(h2);
  NumPoly out = num_pow(numeric_simple_poly(n1, m, cap), mu.p1 - mu.p2);
  for (const auto& m2 : mu.mu2.expanded()) {
    out = num_mul(out, numeric_simple_poly(edge_join(n1, n2, -m2 / to_double(*w2)), m, cap));
  }
  return out;
}

bool reciprocal_check(const Graph& t, const Graph& h1, const Graph& h2, Mode m, int cap) {
  Graph core = t;
  core.set_parts(oriented_parts(t));
  const auto [p1, p2] = part_sizes(*core.parts());
  if (p1 != p2) throw InputError("parts unequal: " + std::to_string(p1) + " vs " + std::to_string(p2));
  const int size = t.order() + p1 * (h1.order() - 1) + p2 * (h2.order() - 1);
  if (size <= cap) {
    const auto a = restricted_rooted_product(core, h1, h2).graph;
    const auto b = restricted_rooted_product(core, h2, h1).graph;
    return simple_circuit_poly(a, m, cap) == simple_circuit_poly(b, m, cap);
  }
  if (t.has_loops()) throw InputError("reciprocal_check: core loops need the oracle route");
  const auto e = bipartite_delta(core, m, cap);
  const Poly u = unit(m);
  const Side s1 = make_side(Attachment::of(h1, m, {}, cap), 0, u);
  const Side s2 = make_side(Attachment::of(h2, m, {}, cap), 0, u);
  return restricted_product_poly(e, s1, s2) == restricted_product_poly(e, s2, s1);
}

// ------------------------------------------------------------ divisibility

ZeroDivisibility zero_divisibility_report(const Poly& t_simple, const Poly& ph1, const Poly& ph2,
                                          const Poly& product, int p1, int p2) {
  ZeroDivisibility r;
  r.valuation = UPoly::from_poly(t_simple).valuation();
  const int gap = p1 - p2;
  r.applicable = r.valuation >= gap && (r.valuation - gap) % 2 == 0;
  if (!r.applicable) return r;
  r.s = gap + (r.valuation - gap) / 2;
  r.divisor = pow(ph1, static_cast<std::uint32_t>(r.s)) * pow(ph2, static_cast<std::uint32_t>(r.s - gap));
  if (auto q = divides(r.divisor, product)) {
    r.divides = true;
    r.quotient = std::move(*q);
  }
  return r;
}

RootDivisibility root_divisibility_report(const Poly& bg_simple, const Attachment& h, const Poly& product) {
  RootDivisibility r;
  r.k = UPoly::from_poly(shift(bg_simple, Var::x(), h.root_loop)).valuation();
  r.divisor = pow(h.root_stripped, static_cast<std::uint32_t>(r.k));
  r.divides = divides(r.divisor, product).has_value();
  return r;
}

int common_multiplicity(const Poly& a, const Poly& b, const Rational& lambda) {
  return std::min(multiplicity_at(a, lambda), multiplicity_at(b, lambda));
}

int common_multiplicity(const Poly& a, const Poly& b, Complex lambda, double tol) {
  return std::min(roots(a).multiplicity_near(lambda, tol), roots(b).multiplicity_near(lambda, tol));
}

}  // namespace rootedpoly
