#pragma once

// Weighted directed pseudographs and the rooted-product family of
// constructions: coalescence, generalized and restricted rooted products,
// F-graphs, monodendrons and homogeneous dendrimers.
//
// Vertices are 0-based in the C++ API. An undirected edge is a symmetric pair
// of arcs. All self-loops at a vertex are aggregated into one loop weight.

#include "rootedpoly/error.hpp"
#include "rootedpoly/rational.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace rootedpoly {

template <typename W>
class BasicGraph {
 public:
  using Weight = W;
  using ArcMap = std::map<std::pair<int, int>, W>;

  explicit BasicGraph(int order = 1) : loops_(static_cast<std::size_t>(check_order(order)), W(0)) {}

  int order() const noexcept { return static_cast<int>(loops_.size()); }

  const ArcMap& arcs() const noexcept { return arcs_; }
  W arc(int from, int to) const {
    check_vertex(from);
    check_vertex(to);
    auto it = arcs_.find({from, to});
    return it == arcs_.end() ? W(0) : it->second;
  }
  /// Sets the weight of the arc from -> to; a zero weight removes the arc.
  void set_arc(int from, int to, const W& w) {
    check_vertex(from);
    check_vertex(to);
    if (from == to) throw InputError("arc " + std::to_string(from + 1) + "->" + std::to_string(to + 1) + " is a loop; use set_loop");
    if (w == W(0)) {
      arcs_.erase({from, to});
    } else {
      arcs_[{from, to}] = reduce(w);
    }
  }
  void add_edge(int a, int b, const W& w = W(1)) {
    set_arc(a, b, w);
    set_arc(b, a, w);
  }

  const W& loop(int v) const {
    check_vertex(v);
    return loops_[static_cast<std::size_t>(v)];
  }
  const std::vector<W>& loops() const noexcept { return loops_; }
  void set_loop(int v, const W& b) {
    check_vertex(v);
    loops_[static_cast<std::size_t>(v)] = reduce(b);
  }
  void add_loop(int v, const W& b) {
    check_vertex(v);
    loops_[static_cast<std::size_t>(v)] += reduce(b);
  }
  bool has_loops() const {
    return std::any_of(loops_.begin(), loops_.end(), [](const W& b) { return b != W(0); });
  }

  const std::optional<int>& root() const noexcept { return root_; }
  void set_root(std::optional<int> r) {
    if (r) check_vertex(*r);
    root_ = r;
  }
  int require_root(const char* operation) const {
    if (!root_) throw InputError(std::string(operation) + ": graph has no root");
    return *root_;
  }

  /// Part labels (1 or 2) per vertex, when the graph carries a bipartition.
  const std::optional<std::vector<int>>& parts() const noexcept { return parts_; }
  void set_parts(std::optional<std::vector<int>> parts) {
    if (parts) {
      if (static_cast<int>(parts->size()) != order()) throw InputError("parts: expected one label per vertex");
      for (int v = 0; v < order(); ++v) {
        const int label = (*parts)[static_cast<std::size_t>(v)];
        if (label != 1 && label != 2) {
          throw InputError("parts: vertex " + std::to_string(v + 1) + " has label " + std::to_string(label));
        }
      }
      for (const auto& [key, w] : arcs_) {
        if ((*parts)[static_cast<std::size_t>(key.first)] == (*parts)[static_cast<std::size_t>(key.second)]) {
          throw InputError("parts: arc " + std::to_string(key.first + 1) + "->" + std::to_string(key.second + 1) +
                           " joins two vertices of part " + std::to_string((*parts)[static_cast<std::size_t>(key.first)]));
        }
      }
    }
    parts_ = std::move(parts);
  }

  friend bool operator==(const BasicGraph&, const BasicGraph&) = default;

 private:
  static W reduce(const W& w) {
    if constexpr (std::is_same_v<W, Rational>) {
      return canonical(w);
    } else {
      return w;
    }
  }
  static int check_order(int order) {
    if (order < 1) throw InputError("a graph needs at least one vertex");
    return order;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= order()) {
      throw InputError("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(order()));
    }
  }

  ArcMap arcs_;
  std::vector<W> loops_;
  std::optional<int> root_;
  std::optional<std::vector<int>> parts_;
};

using Graph = BasicGraph<Rational>;
using Complex = std::complex<double>;
using NumGraph = BasicGraph<Complex>;

NumGraph to_numeric(const Graph& g);

// ------------------------------------------------------------ small graphs

Graph complete_graph(int p);
Graph path_graph(int p);
Graph cycle_graph(int p);
/// K_{1,k}: vertex 0 is the center.
Graph star_graph(int leaves);
/// K1 with loop weight b, rooted at its only vertex.
Graph single_vertex(const Rational& b = Rational(0));
Graph rooted(Graph g, int root);

// ----------------------------------------------------------- constructions

/// Where a vertex of a product came from: a core vertex (copy == -1) or
/// vertex `vertex` of the graph attached at core vertex `copy`.
struct Origin {
  int copy = -1;
  int vertex = 0;
  friend bool operator==(const Origin&, const Origin&) = default;
};

template <typename W>
struct Product {
  BasicGraph<W> graph;
  std::vector<Origin> origin;
  /// placement[k][v]: product index of vertex v of the graph attached at k.
  std::vector<std::vector<int>> placement;
};

namespace detail {

// Copies `h` into `out`, identifying h's root with `anchor`. Returns the map
// from h's vertices to indices of `out`.
template <typename W>
std::vector<int> graft(BasicGraph<W>& out, int anchor, const BasicGraph<W>& h, int h_root) {
  const int extra = h.order() - 1;
  BasicGraph<W> grown(out.order() + extra);
  for (const auto& [key, w] : out.arcs()) grown.set_arc(key.first, key.second, w);
  for (int v = 0; v < out.order(); ++v) grown.set_loop(v, out.loop(v));
  std::vector<int> map(static_cast<std::size_t>(h.order()));
  int next = out.order();
  for (int v = 0; v < h.order(); ++v) map[static_cast<std::size_t>(v)] = v == h_root ? anchor : next++;
  for (const auto& [key, w] : h.arcs()) {
    const int a = map[static_cast<std::size_t>(key.first)];
    const int b = map[static_cast<std::size_t>(key.second)];
    grown.set_arc(a, b, grown.arc(a, b) + w);
  }
  for (int v = 0; v < h.order(); ++v) grown.add_loop(map[static_cast<std::size_t>(v)], h.loop(v));
  grown.set_root(out.root());
  out = std::move(grown);
  return map;
}

}  // namespace detail

/// G o H: identifies the roots; the coalescence node keeps the sum of both
/// loop weights and is the root of the result.
template <typename W>
BasicGraph<W> coalesce(const BasicGraph<W>& g, const BasicGraph<W>& h) {
  const int gr = g.require_root("coalesce");
  const int hr = h.require_root("coalesce");
  BasicGraph<W> out = g;
  out.set_parts(std::nullopt);
  detail::graft(out, gr, h, hr);
  out.set_root(gr);
  return out;
}

/// Left fold of coalesce over a nonempty sequence.
template <typename W>
BasicGraph<W> multiple_coalesce(const std::vector<BasicGraph<W>>& members) {
  if (members.empty()) throw InputError("multiple_coalesce: empty sequence");
  BasicGraph<W> out = members.front();
  out.require_root("multiple_coalesce");
  for (std::size_t k = 1; k < members.size(); ++k) out = coalesce(out, members[k]);
  return out;
}

/// G(Gamma): a copy of gamma[k] is attached by its root at core vertex k.
/// Core vertices keep their indices; the non-root vertices of each copy are
/// appended in order k = 0, 1, ...
template <typename W>
Product<W> rooted_product(const BasicGraph<W>& core, const std::vector<BasicGraph<W>>& gamma) {
  if (static_cast<int>(gamma.size()) != core.order()) {
    throw InputError("rooted_product: family has " + std::to_string(gamma.size()) + " members, core has " +
                     std::to_string(core.order()) + " vertices");
  }
  Product<W> prod{core, {}, {}};
  prod.graph.set_parts(std::nullopt);
  prod.origin.reserve(static_cast<std::size_t>(core.order()));
  for (int v = 0; v < core.order(); ++v) prod.origin.push_back({-1, v});
  for (int k = 0; k < core.order(); ++k) {
    const auto& h = gamma[static_cast<std::size_t>(k)];
    const int hr = h.require_root(("rooted_product: member " + std::to_string(k + 1)).c_str());
    auto map = detail::graft(prod.graph, k, h, hr);
    for (int v = 0; v < h.order(); ++v) {
      if (v != hr) prod.origin.push_back({k, v});
    }
    prod.placement.push_back(std::move(map));
  }
  return prod;
}

/// Bipartition by BFS 2-coloring, ignoring loops. Each component's lowest
/// vertex gets label 1; labels are swapped globally when part 1 would be the
/// smaller side. Returns nullopt for graphs with an odd cycle.
template <typename W>
std::optional<std::vector<int>> bipartition(const BasicGraph<W>& g) {
  const int p = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p));
  for (const auto& [key, w] : g.arcs()) {
    adj[static_cast<std::size_t>(key.first)].push_back(key.second);
    adj[static_cast<std::size_t>(key.second)].push_back(key.first);
  }
  std::vector<int> label(static_cast<std::size_t>(p), 0);
  for (int s = 0; s < p; ++s) {
    if (label[static_cast<std::size_t>(s)] != 0) continue;
    label[static_cast<std::size_t>(s)] = 1;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        auto& lv = label[static_cast<std::size_t>(v)];
        const int want = 3 - label[static_cast<std::size_t>(u)];
        if (lv == 0) {
          lv = want;
          queue.push(v);
        } else if (lv != want) {
          return std::nullopt;
        }
      }
    }
  }
  const auto ones = std::count(label.begin(), label.end(), 1);
  if (2 * ones < p) {
    for (auto& l : label) l = 3 - l;
  }
  return label;
}

/// Part sizes (p1, p2) of a labelling.
std::pair<int, int> part_sizes(const std::vector<int>& parts);

/// T(Gamma): h1 at every part-1 vertex, h2 at every part-2 vertex. The core
/// must carry parts; they are relabelled first if part 1 is the smaller one.
template <typename W>
Product<W> restricted_rooted_product(const BasicGraph<W>& core, const BasicGraph<W>& h1, const BasicGraph<W>& h2) {
  if (!core.parts()) throw InputError("restricted_rooted_product: core not bipartitioned");
  std::vector<int> parts = *core.parts();
  auto [p1, p2] = part_sizes(parts);
  if (p1 < p2) {
    for (auto& l : parts) l = 3 - l;
  }
  std::vector<BasicGraph<W>> gamma;
  gamma.reserve(parts.size());
  for (int l : parts) gamma.push_back(l == 1 ? h1 : h2);
  return rooted_product(core, gamma);
}

/// H_{-r}: H less its root and every arc or loop at the root.
template <typename W>
BasicGraph<W> delete_root(const BasicGraph<W>& h) {
  const int r = h.require_root("delete_root");
  if (h.order() == 1) throw InputError("delete_root: graph would be empty");
  BasicGraph<W> out(h.order() - 1);
  auto shift = [r](int v) { return v < r ? v : v - 1; };
  for (const auto& [key, w] : h.arcs()) {
    if (key.first != r && key.second != r) out.set_arc(shift(key.first), shift(key.second), w);
  }
  for (int v = 0; v < h.order(); ++v) {
    if (v != r) out.set_loop(shift(v), h.loop(v));
  }
  return out;
}

/// H^triangle: the root loop weight is cleared.
template <typename W>
BasicGraph<W> strip_root_loops(const BasicGraph<W>& h) {
  const int r = h.require_root("strip_root_loops");
  BasicGraph<W> out = h;
  out.set_loop(r, W(0));
  return out;
}

/// G^box: every loop weight is cleared.
template <typename W>
BasicGraph<W> strip_all_loops(const BasicGraph<W>& g) {
  BasicGraph<W> out = g;
  for (int v = 0; v < out.order(); ++v) out.set_loop(v, W(0));
  return out;
}

/// Copy of H^triangle whose root loop weight is `weight`.
template <typename W>
BasicGraph<W> attach_root_loop(const BasicGraph<W>& h, const W& weight) {
  BasicGraph<W> out = strip_root_loops(h);
  out.add_loop(*out.root(), weight);
  return out;
}

/// Disjoint union of h1 and h2 (h2 shifted by |h1|) plus the arcs r1 -> r2
/// of weight `weight_product` and r2 -> r1 of weight 1. Rooted at r1.
template <typename W>
BasicGraph<W> edge_join(const BasicGraph<W>& h1, const BasicGraph<W>& h2, const W& weight_product) {
  const int r1 = h1.require_root("edge_join");
  const int r2 = h2.require_root("edge_join");
  const int off = h1.order();
  BasicGraph<W> out(h1.order() + h2.order());
  for (const auto& [key, w] : h1.arcs()) out.set_arc(key.first, key.second, w);
  for (const auto& [key, w] : h2.arcs()) out.set_arc(key.first + off, key.second + off, w);
  for (int v = 0; v < h1.order(); ++v) out.set_loop(v, h1.loop(v));
  for (int v = 0; v < h2.order(); ++v) out.set_loop(v + off, h2.loop(v));
  if (weight_product != W(0)) {
    out.set_arc(r1, r2 + off, weight_product);
    out.set_arc(r2 + off, r1, W(1));
  }
  out.set_root(r1);
  return out;
}

// ------------------------------------------------------------- dendrimers

/// A homogeneous monodendron M^j together with the attachment sites of its
/// outermost tier (d^j of them; the root for M^0).
template <typename W>
struct Monodendron {
  BasicGraph<W> graph;
  std::vector<int> outer_sites;
  int tiers = 0;
  long copies = 0;
};

template <typename W>
struct BasicDendrimerSpec {
  BasicGraph<W> core;
  BasicGraph<W> unit;  ///< rooted repeating unit H
  std::vector<int> attach_sites;
  int generations = 0;

  int progressive_degree() const { return static_cast<int>(attach_sites.size()); }
  void validate() const {
    const int r = unit.require_root("dendrimer unit");
    if (attach_sites.empty()) throw InputError("dendrimer: at least one attach site is required");
    std::vector<int> seen = attach_sites;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw InputError("dendrimer: attach sites must be distinct");
    }
    for (int s : attach_sites) {
      if (s < 0 || s >= unit.order()) throw InputError("dendrimer: attach site " + std::to_string(s + 1) + " out of range");
      if (s == r) throw InputError("dendrimer: attach site " + std::to_string(s + 1) + " is the root");
    }
    if (generations < 0) throw InputError("dendrimer: generations must be nonnegative");
  }
};

using DendrimerSpec = BasicDendrimerSpec<Rational>;

/// M^j ⋆ M^k: a copy of `inner` is attached at every outer site of `outer`.
template <typename W>
Monodendron<W> monodendron_star(const Monodendron<W>& outer, const Monodendron<W>& inner) {
  Monodendron<W> out{outer.graph, {}, outer.tiers + inner.tiers, 0};
  const int inner_root = inner.graph.require_root("monodendron_star");
  for (int site : outer.outer_sites) {
    auto map = detail::graft(out.graph, site, inner.graph, inner_root);
    for (int s : inner.outer_sites) out.outer_sites.push_back(map[static_cast<std::size_t>(s)]);
  }
  out.copies = outer.copies + static_cast<long>(outer.outer_sites.size()) * inner.copies;
  return out;
}

/// M^j built tier by tier: M^0 = K1, M^1 = H, and each further tier attaches
/// a fresh copy of H at every outer site.
template <typename W>
Monodendron<W> monodendron(const BasicGraph<W>& unit, const std::vector<int>& attach_sites, int tiers) {
  BasicDendrimerSpec<W>{BasicGraph<W>(1), unit, attach_sites, tiers}.validate();
  BasicGraph<W> k1(1);
  k1.set_root(0);
  Monodendron<W> m{k1, {0}, 0, 0};
  const Monodendron<W> layer{unit, attach_sites, 1, 1};
  for (int j = 0; j < tiers; ++j) m = monodendron_star(m, layer);
  return m;
}

/// Homogeneous dendrimer: the monodendron with `generations` tiers attached at
/// every core vertex. generations == 0 gives the core itself.
template <typename W>
BasicGraph<W> dendrimer(const BasicDendrimerSpec<W>& spec) {
  spec.validate();
  const auto m = monodendron(spec.unit, spec.attach_sites, spec.generations);
  std::vector<BasicGraph<W>> gamma(static_cast<std::size_t>(spec.core.order()), m.graph);
  return rooted_product(spec.core, gamma).graph;
}

/// F^0 = K1, F^1 = G, F^{s+1} = F^s(H).
template <typename W>
BasicGraph<W> f_graph(const BasicGraph<W>& core, const BasicGraph<W>& h, int s) {
  if (s < 0) throw InputError("f_graph: s must be nonnegative");
  if (s == 0) return BasicGraph<W>(1);
  BasicGraph<W> f = core;
  for (int step = 1; step < s; ++step) {
    std::vector<BasicGraph<W>> gamma(static_cast<std::size_t>(f.order()), h);
    f = rooted_product(f, gamma).graph;
  }
  return f;
}

}  // namespace rootedpoly
