#include "rootedpoly/oracle.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rootedpoly {

// ------------------------------------------------------------------ modes

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Generic: return "generic";
    case Mode::Farrell: return "farrell";
    case Mode::Permanental: return "permanental";
    case Mode::CharacteristicPaper: return "characteristic-paper";
    case Mode::CharacteristicStandard: return "characteristic-standard";
    case Mode::MatchingPlus: return "matching-plus";
    case Mode::MatchingMinus: return "matching-minus";
  }
  return "?";
}

const std::vector<Mode>& all_modes() {
  static const std::vector<Mode> modes{Mode::Generic,
                                       Mode::Farrell,
                                       Mode::Permanental,
                                       Mode::CharacteristicPaper,
                                       Mode::CharacteristicStandard,
                                       Mode::MatchingPlus,
                                       Mode::MatchingMinus};
  return modes;
}

Mode parse_mode(std::string_view name) {
  for (Mode m : all_modes()) {
    if (mode_name(m) == name) return m;
  }
  throw InputError("unknown mode '" + std::string(name) + "'");
}

int loop_sign(Mode m) {
  switch (m) {
    case Mode::CharacteristicPaper:
    case Mode::CharacteristicStandard:
    case Mode::MatchingMinus:
      return -1;
    default:
      return 1;
  }
}

std::optional<Rational> w_value(Mode m, int j) {
  switch (m) {
    case Mode::Generic:
    case Mode::Farrell:
      return std::nullopt;
    case Mode::Permanental:
      return Rational(1);
    case Mode::CharacteristicPaper:
      return Rational(-1);
    case Mode::CharacteristicStandard:
      return Rational(j == 1 ? 1 : -1);
    case Mode::MatchingPlus:
      return Rational(j <= 2 ? 1 : 0);
    case Mode::MatchingMinus:
      return Rational(j <= 2 ? -1 : 0);
  }
  return std::nullopt;
}

Poly unit(Mode m) {
  auto v = w_value(m, 1);
  return v ? Poly(*v) : Poly(Var::w(1));
}

int default_oracle_cap() {
  const char* env = std::getenv("ROOTEDPOLY_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOracleCap;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1 || cap > 30) {
    throw InputError("ROOTEDPOLY_CAP must be an integer in 1..30, got '" + std::string(env) + "'");
  }
  return static_cast<int>(cap);
}

// ------------------------------------------------------ cover enumeration

namespace {

constexpr int kMaxOrder = 30;

// One cycle cover prefix: covered vertices, vertices contributing x_i (the
// rest of the fixed points contribute b_i), cycle-length counts, weight.
struct CoverKey {
  std::uint32_t xmask = 0;
  std::array<std::uint8_t, kMaxOrder + 1> counts{};
  bool operator==(const CoverKey&) const = default;
};

struct CoverKeyHash {
  std::size_t operator()(const CoverKey& k) const noexcept {
    std::size_t h = k.xmask * 0x9E3779B97F4A7C15ULL;
    for (auto c : k.counts) h = (h ^ c) * 0x100000001B3ULL;
    return h;
  }
};

template <typename W>
struct CoverState {
  std::uint32_t covered = 0;
  CoverKey key;
  W coeff;
};

template <typename W>
using CoverSink = std::unordered_map<CoverKey, W, CoverKeyHash>;

template <typename W>
class CoverEnumerator {
 public:
  explicit CoverEnumerator(const BasicGraph<W>& g) : p_(g.order()), out_(static_cast<std::size_t>(g.order())), loops_(g.loops()) {
    if (p_ > kMaxOrder) throw CapExceeded(p_, kMaxOrder);
    for (const auto& [key, w] : g.arcs()) out_[static_cast<std::size_t>(key.first)].emplace_back(key.second, w);
    full_ = p_ == 32 ? ~0U : ((1U << p_) - 1U);
  }

  CoverState<W> initial() const { return {0, {}, W(1)}; }
  bool complete(const CoverState<W>& s) const { return s.covered == full_; }

  // Calls f on every extension of s by the component through the lowest
  // uncovered vertex.
  template <typename F>
  void for_each_child(const CoverState<W>& s, F&& f) const {
    const int v = std::countr_one(s.covered);
    const std::uint32_t bit = 1U << v;
    CoverState<W> c = s;
    c.covered |= bit;
    c.key.counts[1] += 1;
    c.key.xmask |= bit;
    f(c);
    const W& b = loops_[static_cast<std::size_t>(v)];
    if (b != W(0)) {
      c.key.xmask &= ~bit;
      c.coeff = s.coeff * b;
      f(c);
    }
    extend_cycle(s, v, v, bit, 1, W(1), f);
  }

  void run(const CoverState<W>& s, CoverSink<W>& sink) const {
    if (complete(s)) {
      sink[s.key] += s.coeff;
      return;
    }
    for_each_child(s, [&](const CoverState<W>& c) { run(c, sink); });
  }

 private:
  template <typename F>
  void extend_cycle(const CoverState<W>& s, int start, int cur, std::uint32_t path, int length, const W& weight,
                    F& f) const {
    for (const auto& [u, a] : out_[static_cast<std::size_t>(cur)]) {
      if (u == start) {
        if (length < 2) continue;
        CoverState<W> c = s;
        c.covered |= path;
        c.key.counts[static_cast<std::size_t>(length)] += 1;
        c.coeff = s.coeff * weight * a;
        f(c);
      } else if (((s.covered | path) >> u & 1U) == 0) {
        extend_cycle(s, start, u, path | (1U << u), length + 1, weight * a, f);
      }
    }
  }

  int p_;
  std::uint32_t full_ = 0;
  std::vector<std::vector<std::pair<int, W>>> out_;
  std::vector<W> loops_;
};

template <typename W>
void merge_into(CoverSink<W>& into, const CoverSink<W>& from) {
  for (const auto& [k, c] : from) into[k] += c;
}

template <typename W>
CoverSink<W> enumerate_covers(const BasicGraph<W>& g, bool parallel) {
  CoverEnumerator<W> en(g);
  CoverSink<W> sink;
  if (!parallel) {
    en.run(en.initial(), sink);
    return sink;
  }
  // Expand the first levels breadth-first, then finish each prefix on its own.
  std::vector<CoverState<W>> level{en.initial()};
  for (int depth = 0; depth < 4 && level.size() < 512; ++depth) {
    std::vector<CoverState<W>> next;
    for (const auto& s : level) {
      if (en.complete(s)) {
        sink[s.key] += s.coeff;
      } else {
        en.for_each_child(s, [&](const CoverState<W>& c) { next.push_back(c); });
      }
    }
    level = std::move(next);
  }
  const auto n = static_cast<long>(level.size());
#pragma omp parallel
  {
    CoverSink<W> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < n; ++i) en.run(level[static_cast<std::size_t>(i)], local);
#pragma omp critical(rootedpoly_cover_merge)
    merge_into(sink, local);
  }
  return sink;
}

Poly covers_to_poly(const CoverSink<Rational>& sink) {
  std::vector<Poly::Term> terms;
  terms.reserve(sink.size());
  for (const auto& [key, c] : sink) {
    if (c == 0) continue;
    std::vector<Monomial::Factor> fs;
    for (int v = 0; v < kMaxOrder; ++v) {
      if (key.xmask >> v & 1U) fs.emplace_back(Var::x(static_cast<std::uint32_t>(v + 1)), 1);
    }
    for (int len = 1; len <= kMaxOrder; ++len) {
      if (key.counts[static_cast<std::size_t>(len)] != 0) {
        fs.emplace_back(Var::w(static_cast<std::uint32_t>(len)), key.counts[static_cast<std::size_t>(len)]);
      }
    }
    terms.emplace_back(Monomial::from_factors(std::move(fs)), c);
  }
  return Poly::from_terms(std::move(terms));
}

Poly circuit_poly_impl(const Graph& g, int cap, bool parallel) {
  if (g.order() > cap) throw CapExceeded(g.order(), cap);
  return covers_to_poly(enumerate_covers(g, parallel));
}

template <typename W>
BasicGraph<W> signed_loops(const BasicGraph<W>& g, int sign) {
  if (sign == 1) return g;
  BasicGraph<W> out = g;
  for (int v = 0; v < g.order(); ++v) out.set_loop(v, -g.loop(v));
  return out;
}

}  // namespace

Poly circuit_poly(const Graph& g, int cap) { return circuit_poly_impl(g, cap, true); }

Poly circuit_poly_serial(const Graph& g, int cap) { return circuit_poly_impl(g, cap, false); }

Poly specialize(const Poly& p, Mode m) {
  if (m == Mode::Generic) return p;
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  const Rational half(1, 2);
  for (const auto& [mono, c] : p.terms()) {
    Rational coeff = c;
    std::vector<Monomial::Factor> keep;
    std::uint32_t xdeg = 0;
    std::uint32_t w1 = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.kind == VarKind::X || v.kind == VarKind::XSimple) xdeg += e;
      if (v == Var::w(1)) w1 = e;
    }
    if (m == Mode::Farrell) {
      // Loop weights only enter through fixed points that lack their x_i.
      if (xdeg != w1) continue;
      for (const auto& [v, e] : mono.factors()) {
        if (v.kind == VarKind::X || v.kind == VarKind::XSimple) continue;
        if (v.kind == VarKind::W && v.index >= 3) {
          for (std::uint32_t k = 0; k < e; ++k) coeff *= half;
        }
        keep.emplace_back(v, e);
      }
    } else {
      for (const auto& [v, e] : mono.factors()) {
        if (v.kind != VarKind::W) {
          keep.emplace_back(v, e);
          continue;
        }
        const Rational val = *w_value(m, static_cast<int>(v.index));
        for (std::uint32_t k = 0; k < e && coeff != 0; ++k) coeff *= val;
      }
    }
    if (coeff != 0) terms.emplace_back(Monomial::from_factors(std::move(keep)), std::move(coeff));
  }
  return Poly::from_terms(std::move(terms));
}

Poly to_simple(const Poly& p) {
  return p.rename([](Var v) { return v.kind == VarKind::X ? Var::x() : v; });
}

Poly mode_circuit_poly(const Graph& g, Mode m, int cap) {
  return specialize(circuit_poly(signed_loops(g, loop_sign(m)), cap), m);
}

Poly simple_circuit_poly(const Graph& g, Mode m, int cap) { return to_simple(mode_circuit_poly(g, m, cap)); }

std::vector<Complex> numeric_simple_poly(const NumGraph& g, Mode m, int cap) {
  if (m == Mode::Generic || m == Mode::Farrell) {
    throw InputError("numeric_simple_poly: mode " + std::string(mode_name(m)) + " leaves symbolic weights");
  }
  if (g.order() > cap) throw CapExceeded(g.order(), cap);
  const auto sink = enumerate_covers(signed_loops(g, loop_sign(m)), true);
  std::vector<Complex> coeffs(static_cast<std::size_t>(g.order() + 1), Complex(0));
  for (const auto& [key, c] : sink) {
    Complex term = c;
    for (int len = 1; len <= kMaxOrder; ++len) {
      for (int k = 0; k < key.counts[static_cast<std::size_t>(len)]; ++k) term *= to_double(*w_value(m, len));
    }
    coeffs[static_cast<std::size_t>(std::popcount(key.xmask))] += term;
  }
  return coeffs;
}

// ------------------------------------------------------------ cross-checks

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const auto n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

// Newton interpolation through (t, values[t]) for t = 0..n.
UPoly interpolate_at_naturals(const std::vector<Rational>& values) {
  const auto n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    }
  }
  UPoly result = UPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UPoly({Rational(-static_cast<long>(i)), Rational(1)}) + UPoly::constant(dd[i]);
  }
  return result;
}

Poly ryser(const Graph& g, int cap, bool parallel) {
  const int n = g.order();
  if (n > cap) throw CapExceeded(n, cap);
  if (n > 24) throw CapExceeded(n, 24);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (const auto& [key, w] : g.arcs()) m[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = w;
  for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = g.loop(v);
  const long subsets = 1L << n;

  auto term = [&](long s, std::vector<Rational>& acc) {
    // prod_i (c_i + [i in S] x): coefficients ascending in x.
    std::vector<Rational> prod{Rational(1)};
    for (int i = 0; i < n; ++i) {
      Rational c(0);
      for (int j = 0; j < n; ++j) {
        if (s >> j & 1L) c += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      const bool has_x = (s >> i & 1L) != 0;
      std::vector<Rational> next(prod.size() + (has_x ? 1 : 0));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k] += prod[k] * c;
        if (has_x) next[k + 1] += prod[k];
      }
      prod = std::move(next);
    }
    const bool negative = ((n - std::popcount(static_cast<unsigned long>(s))) & 1) != 0;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (negative) {
        acc[k] -= prod[k];
      } else {
        acc[k] += prod[k];
      }
    }
  };

  std::vector<Rational> total(static_cast<std::size_t>(n + 1));
  if (parallel) {
#pragma omp parallel
    {
      std::vector<Rational> local(static_cast<std::size_t>(n + 1));
#pragma omp for schedule(static)
      for (long s = 1; s < subsets; ++s) term(s, local);
#pragma omp critical(rootedpoly_ryser_merge)
      for (std::size_t k = 0; k < total.size(); ++k) total[k] += local[k];
    }
  } else {
    for (long s = 1; s < subsets; ++s) term(s, total);
  }
  return UPoly(std::move(total)).to_poly();
}

}  // namespace

Poly char_poly_det(const Graph& g) {
  const int n = g.order();
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n + 1));
  for (int t = 0; t <= n; ++t) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (const auto& [key, w] : g.arcs()) a[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = -w;
    for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = Rational(t) - g.loop(v);
    values.push_back(determinant(std::move(a)));
  }
  return interpolate_at_naturals(values).to_poly();
}

Poly permanental_poly_check(const Graph& g, int cap) { return ryser(g, cap, true); }

Poly permanental_poly_check_serial(const Graph& g, int cap) { return ryser(g, cap, false); }

Rational factorial(int p) {
  Rational f(1);
  for (int k = 2; k <= p; ++k) f *= k;
  return f;
}

Poly cycle_index_Sp(int p) {
  if (p < 1) throw InputError("cycle_index_Sp: p must be positive");
  std::vector<Poly::Term> terms;
  std::vector<int> counts(static_cast<std::size_t>(p + 1), 0);
  // Partitions of p into parts of size <= largest.
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      Rational denom(1);
      std::vector<Monomial::Factor> fs;
      for (int k = 1; k <= p; ++k) {
        const int j = counts[static_cast<std::size_t>(k)];
        if (j == 0) continue;
        for (int t = 0; t < j; ++t) denom *= k;
        denom *= factorial(j);
        fs.emplace_back(Var::w(static_cast<std::uint32_t>(k)), j);
      }
      terms.emplace_back(Monomial::from_factors(std::move(fs)), Rational(1) / denom);
      return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      counts[static_cast<std::size_t>(k)] += 1;
      self(self, remaining - k, k);
      counts[static_cast<std::size_t>(k)] -= 1;
    }
  };
  rec(rec, p, p);
  return Poly::from_terms(std::move(terms));
}

}  // namespace rootedpoly
