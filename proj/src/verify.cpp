#include "rootedpoly/verify.hpp"

#include "rootedpoly/corpus.hpp"
#include "rootedpoly/dendrimer.hpp"
#include "rootedpoly/error.hpp"
#include "rootedpoly/factor.hpp"
#include "rootedpoly/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>

namespace rootedpoly {

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Check {
  std::string id;
  Outcome outcome = Outcome::Pass;
  double deviation = 0.0;
  std::string detail;
};

// Per-instance recorder. Exceptions inside a check count as failures of that
// check, except CapExceeded which marks it skipped.
class Checks {
 public:
  explicit Checks(std::string instance) : instance_(std::move(instance)) {}

  template <typename F>
  void exact(const std::string& id, F&& f) {
    try {
      const bool ok = f();
      add(id, ok ? Outcome::Pass : Outcome::Fail, 0.0, ok ? "" : "mismatch");
    } catch (const CapExceeded&) {
      add(id, Outcome::Skip, 0.0, "");
    } catch (const std::exception& e) {
      add(id, Outcome::Fail, 0.0, e.what());
    }
  }

  template <typename F>
  void numeric(const std::string& id, double tol, F&& f) {
    try {
      const double d = f();
      const bool ok = std::isfinite(d) && d <= tol;
      add(id, ok ? Outcome::Pass : Outcome::Fail, d, ok ? "" : "deviation " + std::to_string(d));
    } catch (const CapExceeded&) {
      add(id, Outcome::Skip, 0.0, "");
    } catch (const std::exception& e) {
      add(id, Outcome::Fail, 0.0, e.what());
    }
  }

  void skip(const std::string& id) { add(id, Outcome::Skip, 0.0, ""); }
  void fail(const std::string& id, const std::string& why) { add(id, Outcome::Fail, 0.0, why); }

  std::vector<Check> take() { return std::move(out_); }

 private:
  void add(const std::string& id, Outcome o, double d, const std::string& why) {
    out_.push_back({id, o, d, why.empty() ? "" : instance_ + ": " + why});
  }

  std::string instance_;
  std::vector<Check> out_;
};

class Aggregator {
 public:
  explicit Aggregator(std::string suite) { report_.suite = std::move(suite); }

  void declare(const std::string& id, const std::string& description, bool exact = true) {
    index_[id] = report_.identities.size();
    report_.identities.push_back({id, description, exact, 0, 0, 0, 0.0, ""});
  }

  void absorb(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
      auto it = index_.find(c.id);
      if (it == index_.end()) {
        declare(c.id, "", true);
        it = index_.find(c.id);
      }
      auto& r = report_.identities[it->second];
      if (c.outcome == Outcome::Skip) {
        ++r.skipped;
        continue;
      }
      ++r.instances;
      if (std::isfinite(c.deviation)) {
        r.max_deviation = std::max(r.max_deviation, c.deviation);
      } else {
        r.max_deviation = c.deviation;
      }
      if (c.outcome == Outcome::Fail) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = c.detail;
      }
    }
  }

  SuiteReport finish(std::chrono::steady_clock::time_point start) {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::map<std::string, std::size_t> index_;
};

// Runs fn over every item in parallel; results are absorbed in item order so
// reports do not depend on scheduling.
template <typename Item, typename Fn>
void run_corpus(const std::vector<Item>& items, Aggregator& agg, Fn fn,
                const std::function<std::string(const Item&)>& name_of) {
  std::vector<std::vector<Check>> results(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    Checks c(name_of(item));
    try {
      fn(item, c);
    } catch (const std::exception& e) {
      c.fail("setup", e.what());
    }
    results[static_cast<std::size_t>(i)] = c.take();
  }
  for (const auto& r : results) agg.absorb(r);
}

double relative_deviation(const NumPoly& approx, const Poly& exact) {
  return coefficient_deviation(approx, UPoly::from_poly(exact));
}

// Vertex v of a graph coalesced onto `anchor` of a host with `host_order`
// vertices (non-root vertices appended in order).
std::function<Var(int)> coalesced_vars(int anchor, int host_order, int root) {
  return [=](int v) {
    if (v == root) return Var::x(static_cast<std::uint32_t>(anchor + 1));
    return Var::x(static_cast<std::uint32_t>(host_order + (v < root ? v : v - 1) + 1));
  };
}

std::vector<Rational> signed_loops(const Graph& g, Mode m) {
  std::vector<Rational> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(Rational(loop_sign(m)) * g.loop(v));
  return out;
}

Graph with_root_loop(Graph h, const Rational& extra) {
  h.add_loop(*h.root(), extra);
  return h;
}

const std::vector<Mode>& numeric_modes() {
  static const std::vector<Mode> modes{Mode::CharacteristicStandard, Mode::Permanental};
  return modes;
}

std::string tag(Mode m) { return std::string(mode_name(m)); }

bool equipartite_equal_loops(const RestrictedInstance& in) {
  const auto [p1, p2] = part_sizes(*in.core.parts());
  return p1 == p2 && in.loop1 == in.loop2;
}

}  // namespace

int default_verify_cap() {
  if (std::getenv("ROOTEDPOLY_CAP") != nullptr) return default_oracle_cap();
  return 12;
}

std::string IdentityResult::status() const {
  if (failures > 0) return "fail";
  if (instances == 0) return "skipped";
  return "pass";
}

bool SuiteReport::passed() const {
  return std::none_of(identities.begin(), identities.end(), [](const auto& r) { return r.failures > 0; });
}

const IdentityResult* SuiteReport::find(const std::string& id) const {
  for (const auto& r : identities) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : identities) {
    nlohmann::json j{{"id", r.id},
                     {"description", r.description},
                     {"exact", r.exact},
                     {"instances", r.instances},
                     {"failures", r.failures},
                     {"skipped", r.skipped},
                     {"max_deviation", r.max_deviation},
                     {"status", r.status()}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    ids.push_back(std::move(j));
  }
  return {{"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"seconds", seconds}, {"identities", ids}};
}

// ----------------------------------------------------------------- products

SuiteReport verify_products(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("products");
  agg.declare("coalescence", "P(G o H) from P(G) and the polynomials of H");
  agg.declare("rooted-product-root-loops-stripped", "multivariate product via x_i -> P(H_i^tri)/P(L_i)");
  agg.declare("rooted-product-core-loops-stripped", "multivariate product from the loopless core");
  agg.declare("simple-substitution", "identical members, substitution into the core polynomial");
  agg.declare("simple-expansion", "identical members, sum_g gamma'_g P(H^tri)^(p-g) P(H_-r)^g");

  const Mode m = Mode::Generic;
  const Poly u = unit(m);
  run_corpus<ProductInstance>(
      product_corpus(), agg,
      [&](const ProductInstance& in, Checks& c) {
        const int p = in.core.order();
        const auto prod = rooted_product(in.core, in.gamma);
        const bool fits = prod.graph.order() <= opt.cap;
        const Poly core_poly = circuit_poly(in.core, opt.cap);

        std::vector<Attachment> members;
        for (int k = 0; k < p; ++k) {
          const auto& place = prod.placement[static_cast<std::size_t>(k)];
          members.push_back(Attachment::of(in.gamma[static_cast<std::size_t>(k)], m,
                                           [&](int v) { return Var::x(static_cast<std::uint32_t>(place[static_cast<std::size_t>(v)] + 1)); },
                                           opt.cap));
        }
        const Poly eq11 = rooted_product_poly(core_poly, members, CoreForm::RootLoopsStripped, {}, u);
        const Poly reference = fits ? circuit_poly(prod.graph, opt.cap) : eq11;
        if (fits) {
          c.exact("rooted-product-root-loops-stripped", [&] { return eq11 == reference; });
        } else {
          c.skip("rooted-product-root-loops-stripped");
        }
        c.exact("rooted-product-core-loops-stripped", [&] {
          return rooted_product_poly(circuit_poly(strip_all_loops(in.core), opt.cap), members,
                                     CoreForm::CoreLoopsStripped, signed_loops(in.core, m), u) == reference;
        });

        // Coalescence at core vertex 1 with the first member.
        const auto& h0 = in.gamma.front();
        const Graph host = rooted(in.core, 0);
        const Graph co = coalesce(host, h0);
        if (co.order() <= opt.cap) {
          c.exact("coalescence", [&] {
            const auto a = Attachment::of(h0, m, coalesced_vars(0, p, *h0.root()), opt.cap);
            return coalescence_poly(core_poly, a, Var::x(1), u) == circuit_poly(co, opt.cap);
          });
        } else {
          c.skip("coalescence");
        }

        if (!in.identical) return;
        const Poly simple_ref = to_simple(reference);
        const auto h = Attachment::of(h0, m, {}, opt.cap);
        c.exact("simple-substitution",
                [&] { return simple_rooted_product_by_substitution(core_poly, h, p, u) == simple_ref; });
        c.exact("simple-expansion",
                [&] { return simple_rooted_product_poly(to_simple(core_poly), h, p, u) == simple_ref; });
      },
      [](const ProductInstance& in) { return in.name; });
  return agg.finish(start);
}

// ---------------------------------------------------------------- bipartite

SuiteReport verify_bipartite(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("bipartite");
  agg.declare("restricted-expansion", "sum_k delta_k PH1^(p1-k) PH2^(p2-k) (PL1 PL2)^k");
  agg.declare("restricted-substitution", "y_i -> PH_i / PL_i in the bivariate core polynomial");
  agg.declare("restricted-part-one", "attachments on part 1 only, (x + b2) on part 2");
  agg.declare("restricted-part-two", "attachments on part 2 only, (x + b1) on part 1");
  agg.declare("reciprocal", "swapping H1 and H2 on an equipartite core keeps the polynomial");
  agg.declare("parity", "loopless bipartite: single-parity powers, divisible by x^(p1-p2)");
  agg.declare("synchronous-expansion", "loopless bipartite: only y1^(p1-k) y2^(p2-k) monomials, delta_0 = 1");

  const Mode m = Mode::Generic;
  const Poly u = unit(m);
  const auto atts = standard_attachments();
  const Graph k1 = single_vertex();

  run_corpus<RestrictedInstance>(
      restricted_corpus(), agg,
      [&](const RestrictedInstance& in, Checks& c) {
        const auto prod = restricted_rooted_product(in.core, in.h1, in.h2);
        const bool fits = prod.graph.order() <= opt.cap;
        const auto e = bipartite_delta(in.core, m, opt.cap);
        const Rational l1 = Rational(loop_sign(m)) * in.loop1;
        const Rational l2 = Rational(loop_sign(m)) * in.loop2;
        const Side s1 = make_side(Attachment::of(in.h1, m, {}, opt.cap), l1, u);
        const Side s2 = make_side(Attachment::of(in.h2, m, {}, opt.cap), l2, u);
        const Poly eq21 = restricted_product_poly(e, s1, s2);
        const Poly reference = fits ? to_simple(circuit_poly(prod.graph, opt.cap)) : eq21;
        if (fits) {
          c.exact("restricted-expansion", [&] { return eq21 == reference; });
        } else {
          c.skip("restricted-expansion");
        }
        c.exact("restricted-substitution", [&] {
          return restricted_product_by_substitution(bipartite_y_poly(in.core, m, opt.cap), e.p1, e.p2, s1, s2, u) ==
                 reference;
        });
        if (in.h2 == k1) {
          c.exact("restricted-part-one", [&] { return restricted_product_poly(e, s1, bare_side(l2, u)) == reference; });
        }
        if (in.h1 == k1) {
          c.exact("restricted-part-two", [&] { return restricted_product_poly(e, bare_side(l1, u), s2) == reference; });
        }
        if (equipartite_equal_loops(in)) {
          c.exact("reciprocal", [&] {
            if (!fits) return restricted_product_poly(e, s1, s2) == restricted_product_poly(e, s2, s1);
            return reciprocal_check(in.core, in.h1, in.h2, m, opt.cap);
          });
        }
      },
      [](const RestrictedInstance& in) { return in.name; });

  // The 3-methylpentane tree with every ordered pair of attachments.
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < atts.size(); ++a) {
      for (std::size_t b = 0; b < atts.size(); ++b) pairs.emplace_back(a, b);
    }
    const Graph tree = methylpentane_tree();
    run_corpus<std::pair<std::size_t, std::size_t>>(
        pairs, agg,
        [&](const std::pair<std::size_t, std::size_t>& ab, Checks& c) {
          c.exact("reciprocal", [&] {
            return reciprocal_check(tree, atts[ab.first].graph, atts[ab.second].graph, m, opt.cap);
          });
        },
        [&](const std::pair<std::size_t, std::size_t>& ab) {
          return "methylpentane-" + atts[ab.first].name + "," + atts[ab.second].name;
        });
  }

  const int max_order = std::min(8, opt.cap);
  run_corpus<Graph>(
      bipartite_graphs(max_order), agg,
      [&](const Graph& t, Checks& c) {
        const auto [p1, p2] = part_sizes(*t.parts());
        c.exact("parity", [&] {
          const Poly s = to_simple(circuit_poly(t, opt.cap));
          for (const auto& [mono, coef] : s.terms()) {
            const int d = static_cast<int>(mono.exponent(Var::x()));
            if ((t.order() - d) % 2 != 0 || d < p1 - p2) return false;
          }
          return true;
        });
        c.exact("synchronous-expansion", [&] {
          const auto e = bipartite_delta(t, m, opt.cap);
          return e.delta.front() == Poly(1L);
        });
      },
      [](const Graph& t) { return "bipartite-" + std::to_string(t.order()) + "-" + std::to_string(t.arcs().size() / 2); });
  return agg.finish(start);
}

// ----------------------------------------------------------------- spectral

SuiteReport verify_spectral(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("spectral");
  agg.declare("spectral-product", "prod_i [P(H^tri) - lambda_i P(H_-r)]", false);
  agg.declare("spectral-product-loops", "prod_i P(H with root loop -lambda_i / (s u))", false);
  agg.declare("restricted-spectral", "PH1^(p1-p2) prod_i [PH1 PH2 - mu_i^2 PL1 PL2]", false);
  agg.declare("restricted-spectral-part-one", "attachments on part 1 only", false);
  agg.declare("restricted-spectral-part-two", "attachments on part 2 only", false);
  agg.declare("restricted-spectral-join", "PH1^(p1-p2) prod_i P(H1 -- H2 joined with weight -mu_i^2 / w2)", false);

  const Graph k1 = single_vertex();
  std::vector<std::pair<ProductInstance, Mode>> products;
  for (const auto& in : product_corpus()) {
    if (!in.identical) continue;
    for (Mode m : numeric_modes()) products.emplace_back(in, m);
  }
  run_corpus<std::pair<ProductInstance, Mode>>(
      products, agg,
      [&](const std::pair<ProductInstance, Mode>& item, Checks& c) {
        const auto& [in, m] = item;
        const Poly u = unit(m);
        const int p = in.core.order();
        const auto h = Attachment::of(in.gamma.front(), m, {}, opt.cap);
        const Poly bg = simple_circuit_poly(in.core, m, opt.cap);
        const Poly exact = simple_rooted_product_poly(bg, h, p, u);
        const RootSet lambdas = shifted_core_roots(bg, h, p, u);
        c.numeric("spectral-product", opt.tol,
                  [&] { return relative_deviation(spectral_product_form(lambdas, h.root_stripped, h.minus_root), exact); });
        c.numeric("spectral-product-loops", opt.tol, [&] {
          return relative_deviation(spectral_product_by_loops(lambdas, in.gamma.front(), m, opt.cap), exact);
        });
      },
      [](const std::pair<ProductInstance, Mode>& item) { return item.first.name + "-" + tag(item.second); });

  std::vector<std::pair<RestrictedInstance, Mode>> restricted;
  for (const auto& in : restricted_corpus()) {
    for (Mode m : numeric_modes()) restricted.emplace_back(in, m);
  }
  run_corpus<std::pair<RestrictedInstance, Mode>>(
      restricted, agg,
      [&](const std::pair<RestrictedInstance, Mode>& item, Checks& c) {
        const auto& [in, m] = item;
        const Poly u = unit(m);
        const auto e = bipartite_delta(in.core, m, opt.cap);
        const Rational l1 = Rational(loop_sign(m)) * in.loop1;
        const Rational l2 = Rational(loop_sign(m)) * in.loop2;
        const Side s1 = make_side(Attachment::of(in.h1, m, {}, opt.cap), l1, u);
        const Side s2 = make_side(Attachment::of(in.h2, m, {}, opt.cap), l2, u);
        const Poly exact = restricted_product_poly(e, s1, s2);
        const MuSquares mu = mu_squares(simple_circuit_poly(strip_all_loops(in.core), m, opt.cap), e.p1, e.p2);
        c.numeric("restricted-spectral", opt.tol,
                  [&] { return relative_deviation(restricted_spectral_form(mu, s1, s2), exact); });
        if (in.h2 == k1) {
          c.numeric("restricted-spectral-part-one", opt.tol,
                    [&] { return relative_deviation(restricted_spectral_form(mu, s1, bare_side(l2, u)), exact); });
        }
        if (in.h1 == k1) {
          c.numeric("restricted-spectral-part-two", opt.tol,
                    [&] { return relative_deviation(restricted_spectral_form(mu, bare_side(l1, u), s2), exact); });
        }
        c.numeric("restricted-spectral-join", opt.tol, [&] {
          const Graph j1 = with_root_loop(in.h1, in.loop1);
          const Graph j2 = with_root_loop(in.h2, in.loop2);
          return relative_deviation(restricted_spectral_by_join(mu, j1, j2, m, opt.cap), exact);
        });
      },
      [](const std::pair<RestrictedInstance, Mode>& item) { return item.first.name + "-" + tag(item.second); });
  return agg.finish(start);
}

// ------------------------------------------------------------- divisibility

SuiteReport verify_divisibility(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("divisibility");
  agg.declare("root-divisibility", "0 a k-fold root of the shifted core: P(H^tri)^k divides the product");
  agg.declare("zero-divisibility", "0 an s-fold root of the core: PH1^s PH2^(s-p1+p2) divides the product");

  std::vector<std::pair<ProductInstance, Mode>> products;
  for (const auto& in : product_corpus()) {
    if (!in.identical) continue;
    for (Mode m : numeric_modes()) products.emplace_back(in, m);
  }
  run_corpus<std::pair<ProductInstance, Mode>>(
      products, agg,
      [&](const std::pair<ProductInstance, Mode>& item, Checks& c) {
        const auto& [in, m] = item;
        const Poly u = unit(m);
        const int p = in.core.order();
        const auto h = Attachment::of(in.gamma.front(), m, {}, opt.cap);
        const Poly bg = simple_circuit_poly(in.core, m, opt.cap);
        const Poly product = simple_rooted_product_poly(bg, h, p, u);
        const auto r = root_divisibility_report(bg, h, product);
        if (r.k >= 1) c.exact("root-divisibility", [&] { return r.divides; });
      },
      [](const std::pair<ProductInstance, Mode>& item) { return item.first.name + "-" + tag(item.second); });

  std::vector<std::pair<RestrictedInstance, Mode>> restricted;
  for (const auto& in : restricted_corpus()) {
    for (Mode m : numeric_modes()) restricted.emplace_back(in, m);
  }
  run_corpus<std::pair<RestrictedInstance, Mode>>(
      restricted, agg,
      [&](const std::pair<RestrictedInstance, Mode>& item, Checks& c) {
        const auto& [in, m] = item;
        const Poly u = unit(m);
        const auto e = bipartite_delta(in.core, m, opt.cap);
        const Side s1 = make_side(Attachment::of(in.h1, m, {}, opt.cap), Rational(loop_sign(m)) * in.loop1, u);
        const Side s2 = make_side(Attachment::of(in.h2, m, {}, opt.cap), Rational(loop_sign(m)) * in.loop2, u);
        const Poly product = restricted_product_poly(e, s1, s2);
        const Poly t = simple_circuit_poly(strip_all_loops(in.core), m, opt.cap);
        const auto r = zero_divisibility_report(t, s1.ph, s2.ph, product, e.p1, e.p2);
        if (r.applicable) c.exact("zero-divisibility", [&] { return r.divides; });
      },
      [](const std::pair<RestrictedInstance, Mode>& item) { return item.first.name + "-" + tag(item.second); });
  return agg.finish(start);
}

// -------------------------------------------------------------- cross-check

namespace {

// Every labelled simple graph on n <= 5 vertices with pseudo-random loops,
// random weighted digraphs on 6..9 vertices, and the corpus cores.
std::vector<Graph> crosscheck_graphs(int cap) {
  std::vector<Graph> out;
  std::mt19937 rng(20240611);
  const std::vector<Rational> loop_choices{Rational(0), Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                           Rational(2)};
  const std::vector<Rational> weight_choices{Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 2)};
  auto pick = [&](const std::vector<Rational>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  for (int n = 1; n <= std::min(5, cap); ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if (mask >> e & 1U) g.add_edge(slots[e].first, slots[e].second);
      }
      for (int v = 0; v < n; ++v) g.set_loop(v, pick(loop_choices));
      out.push_back(std::move(g));
    }
  }
  for (int n = 6; n <= std::min(9, cap); ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      Graph g(n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a != b && std::uniform_real_distribution<double>(0, 1)(rng) < 0.3) g.set_arc(a, b, pick(weight_choices));
        }
        g.set_loop(a, pick(loop_choices));
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_crosscheck(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("crosscheck");
  agg.declare("characteristic-determinant", "characteristic-standard mode equals det(xI - A) with b_i = -a_ii");
  agg.declare("permanental-ryser", "permanental mode equals per(xI + A) by inclusion-exclusion");
  agg.declare("characteristic-paper-bipartite", "characteristic-paper mode equals det(A - xI) on loopless bipartite graphs");
  agg.declare("cycle-index", "P(K_p; x = 1, b = 0; w) = p! Z(S_p; w)");
  agg.declare("cover-weights-cycle-index-mismatch", "halved cover polynomial of K3 differs from 3! Z(S_3)");
  agg.declare("characteristic-paper-odd-cycle-mismatch", "all w = -1 differs from det(A - xI) on K3");

  run_corpus<Graph>(
      crosscheck_graphs(opt.cap), agg,
      [&](const Graph& g, Checks& c) {
        c.exact("characteristic-determinant",
                [&] { return simple_circuit_poly(g, Mode::CharacteristicStandard, opt.cap) == char_poly_det(g); });
        c.exact("permanental-ryser", [&] {
          return simple_circuit_poly(g, Mode::Permanental, opt.cap) == permanental_poly_check(g, opt.cap);
        });
      },
      [](const Graph& g) { return "graph-" + std::to_string(g.order()) + "-" + std::to_string(g.arcs().size()); });

  run_corpus<Graph>(
      bipartite_graphs(std::min(6, opt.cap)), agg,
      [&](const Graph& g, Checks& c) {
        c.exact("characteristic-paper-bipartite", [&] {
          const Poly det = char_poly_det(g) * Poly(g.order() % 2 == 0 ? 1L : -1L);
          return simple_circuit_poly(g, Mode::CharacteristicPaper, opt.cap) == det;
        });
      },
      [](const Graph& g) { return "bipartite-" + std::to_string(g.order()); });

  std::vector<int> sizes;
  for (int p = 1; p <= std::min(7, opt.cap); ++p) sizes.push_back(p);
  run_corpus<int>(
      sizes, agg,
      [&](const int& p, Checks& c) {
        c.exact("cycle-index", [&] {
          Poly q = circuit_poly(complete_graph(p), opt.cap);
          for (int i = 1; i <= p; ++i) q = substitute(q, Var::x(static_cast<std::uint32_t>(i)), Poly(1L));
          return q == Poly(factorial(p)) * cycle_index_Sp(p);
        });
      },
      [](const int& p) { return "K" + std::to_string(p); });

  Checks c("K3");
  const Graph k3 = complete_graph(3);
  c.exact("cover-weights-cycle-index-mismatch", [&] {
    return specialize(circuit_poly(k3, opt.cap), Mode::Farrell) != Poly(factorial(3)) * cycle_index_Sp(3);
  });
  c.exact("characteristic-paper-odd-cycle-mismatch", [&] {
    return simple_circuit_poly(k3, Mode::CharacteristicPaper, opt.cap) != char_poly_det(k3) * Poly(-1L);
  });
  agg.absorb(c.take());
  return agg.finish(start);
}

// ---------------------------------------------------------------- dendrimer

SuiteReport verify_dendrimer(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Aggregator agg("dendrimer");
  agg.declare("dendrimer-polynomial", "factorized dendrimer polynomial equals the constructed graph's");
  agg.declare("dendrimer-order", "degree of the factorized polynomial equals the vertex count");
  agg.declare("dendrimer-path-spectrum", "K2 units on a K1 core: roots 2cos(k pi / (n + 1))", false);
  agg.declare("dendrimer-spectrum", "structured spectrum matches roots of the expanded polynomial", false);

  struct Case {
    std::string name;
    DendrimerSpec spec;
    Mode mode;
  };
  std::vector<Case> cases;
  const Graph k2 = rooted(complete_graph(2), 0);
  const Graph p3c = rooted(path_graph(3), 1);
  const Graph p3e = rooted(path_graph(3), 0);
  Graph k3l = rooted(complete_graph(3), 0);
  k3l.set_loop(1, Rational(1));
  Graph core_loop = complete_graph(3);
  core_loop.set_loop(0, Rational(-1));
  for (Mode m : numeric_modes()) {
    for (int g = 0; g <= 3; ++g) {
      cases.push_back({"path-" + std::to_string(g), {single_vertex(), k2, {1}, g}, m});
      cases.push_back({"star-k2-" + std::to_string(g), {complete_graph(2), p3c, {0, 2}, g}, m});
      cases.push_back({"chain-p3-" + std::to_string(g), {path_graph(3), p3e, {2}, g}, m});
      if (g <= 2) cases.push_back({"looped-" + std::to_string(g), {core_loop, k3l, {1, 2}, g}, m});
    }
  }
  run_corpus<Case>(
      cases, agg,
      [&](const Case& cs, Checks& c) {
        const auto d = dendrimer_polynomials(cs.spec, cs.mode);
        const Graph built = dendrimer(cs.spec);
        c.exact("dendrimer-order", [&] {
          return d.total.degree() == built.order() && dendrimer_order(cs.spec) == built.order();
        });
        c.exact("dendrimer-polynomial", [&] {
          if (cs.mode == Mode::CharacteristicStandard) return d.total.to_poly() == char_poly_det(built);
          if (built.order() > opt.cap + 3) throw CapExceeded(built.order(), opt.cap + 3);
          return d.total.to_poly() == permanental_poly_check(built, opt.cap + 3);
        });
        if (d.total.degree() >= 1) {
          c.numeric("dendrimer-spectrum", 1e-6, [&] {
            const auto a = dendrimer_spectrum(cs.spec, cs.mode).expanded();
            const auto b = roots(d.total).expanded();
            if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
            double worst = 0;
            for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
            return worst;
          });
        }
      },
      [](const Case& cs) { return cs.name + "-" + tag(cs.mode); });

  std::vector<int> gens;
  for (int g = 0; g <= 8; ++g) gens.push_back(g);
  run_corpus<int>(
      gens, agg,
      [&](const int& g, Checks& c) {
        const DendrimerSpec spec{single_vertex(), k2, {1}, g};
        c.numeric("dendrimer-path-spectrum", opt.tol, [&] {
          const auto got = dendrimer_spectrum(spec, Mode::CharacteristicStandard).expanded();
          const int n = g + 1;
          if (static_cast<int>(got.size()) != n) return std::numeric_limits<double>::infinity();
          double worst = 0;
          for (int k = 1; k <= n; ++k) {
            const double want = 2 * std::cos(k * std::numbers::pi / (n + 1));
            worst = std::max(worst, std::abs(got[static_cast<std::size_t>(k - 1)] - Complex(want)));
          }
          return worst;
        });
        c.exact("dendrimer-polynomial", [&] {
          const Graph built = dendrimer(spec);
          return dendrimer_polynomials(spec, Mode::CharacteristicStandard).total.to_poly() ==
                 simple_circuit_poly(built, Mode::CharacteristicStandard, opt.cap);
        });
      },
      [](const int& g) { return "path-generations-" + std::to_string(g); });
  return agg.finish(start);
}

// -------------------------------------------------------------------- suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"products",     "bipartite",  "spectral",
                                              "divisibility", "crosscheck", "dendrimer"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opt) {
  if (opt.cap < 1) throw InputError("verify: cap must be at least 1");
  if (!(opt.tol > 0)) throw InputError("verify: tol must be positive");
  using Fn = SuiteReport (*)(const VerifyOptions&);
  static const std::map<std::string, Fn> table{{"products", verify_products},         {"bipartite", verify_bipartite},
                                               {"spectral", verify_spectral},         {"divisibility", verify_divisibility},
                                               {"crosscheck", verify_crosscheck},     {"dendrimer", verify_dendrimer}};
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(table.at(n)(opt));
    return out;
  }
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown suite '" + name + "'");
  out.push_back(it->second(opt));
  return out;
}

}  // namespace rootedpoly
