#include "rootedpoly/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rootedpoly {

namespace {

bool connected(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.order(); ++v) {
      if (!seen[static_cast<std::size_t>(v)] && g.arc(u, v) != 0) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.order();
}

}  // namespace

std::vector<NamedGraph> connected_cores(int max_order) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if (mask >> e & 1U) g.add_edge(slots[e].first, slots[e].second);
      }
      if (connected(g)) out.push_back({"n" + std::to_string(n) + "e" + std::to_string(mask), std::move(g)});
    }
  }
  return out;
}

std::vector<NamedGraph> standard_attachments() {
  return {
      {"K1", single_vertex()},
      {"K2", rooted(complete_graph(2), 0)},
      {"P3end", rooted(path_graph(3), 0)},
      {"P3mid", rooted(path_graph(3), 1)},
      {"K3", rooted(complete_graph(3), 0)},
      {"K1loop", single_vertex(Rational(1))},
  };
}

std::vector<Rational> core_loop_variants() { return {Rational(0), Rational(-1), Rational(1), Rational(2)}; }

std::vector<ProductInstance> product_corpus(int max_core_order) {
  std::vector<ProductInstance> out;
  const auto attachments = standard_attachments();
  for (const auto& core : connected_cores(max_core_order)) {
    for (const auto& b : core_loop_variants()) {
      Graph g = core.graph;
      g.set_loop(0, b);
      const std::string base = core.name + "-b" + format_rational(b);
      for (const auto& h : attachments) {
        out.push_back({base + "-" + h.name, g, std::vector<Graph>(static_cast<std::size_t>(g.order()), h.graph), true});
      }
      ProductInstance mixed{base + "-mixed", g, {}, false};
      for (int k = 0; k < g.order(); ++k) {
        mixed.gamma.push_back(attachments[static_cast<std::size_t>(k + 1) % attachments.size()].graph);
      }
      out.push_back(std::move(mixed));
    }
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> part_loop_variants() {
  return {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(-1), Rational(2)}};
}

std::vector<RestrictedInstance> restricted_corpus(int max_core_order) {
  std::vector<RestrictedInstance> out;
  const auto attachments = standard_attachments();
  for (const auto& core : connected_cores(max_core_order)) {
    auto parts = bipartition(core.graph);
    if (!parts) continue;
    for (const auto& [l1, l2] : part_loop_variants()) {
      Graph t = core.graph;
      t.set_parts(parts);
      for (int v = 0; v < t.order(); ++v) t.set_loop(v, (*parts)[static_cast<std::size_t>(v)] == 1 ? l1 : l2);
      for (const auto& h1 : attachments) {
        for (const auto& h2 : attachments) {
          out.push_back({core.name + "-b" + format_rational(l1) + "," + format_rational(l2) + "-" + h1.name + "," + h2.name,
                         t, h1.graph, h2.graph, l1, l2});
        }
      }
    }
  }
  return out;
}

std::vector<Graph> bipartite_graphs(int max_order) {
  std::vector<Graph> out;
  for (int p1 = 1; p1 <= max_order; ++p1) {
    for (int p2 = 0; p2 <= p1 && p1 + p2 <= max_order; ++p2) {
      const int bits = p1 * p2;
      std::vector<int> perm(static_cast<std::size_t>(p2));
      std::set<std::uint64_t> seen;
      for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
        // Canonical code: minimum over column permutations of the sorted rows.
        std::uint64_t best = ~0ULL;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<std::uint32_t> rows(static_cast<std::size_t>(p1), 0);
          for (int i = 0; i < p1; ++i) {
            for (int j = 0; j < p2; ++j) {
              if (mask >> (i * p2 + j) & 1U) rows[static_cast<std::size_t>(i)] |= 1U << perm[static_cast<std::size_t>(j)];
            }
          }
          std::sort(rows.begin(), rows.end());
          std::uint64_t code = 0;
          for (auto r : rows) code = (code << p2) | r;
          best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) continue;
        Graph g(p1 + p2);
        std::vector<int> parts(static_cast<std::size_t>(p1 + p2), 2);
        std::fill(parts.begin(), parts.begin() + p1, 1);
        for (int i = 0; i < p1; ++i) {
          for (int j = 0; j < p2; ++j) {
            if (mask >> (i * p2 + j) & 1U) g.add_edge(i, p1 + j);
          }
        }
        g.set_parts(std::move(parts));
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

Graph methylpentane_tree() {
  Graph t = path_graph(5);
  Graph g(6);
  for (const auto& [key, w] : t.arcs()) g.set_arc(key.first, key.second, w);
  g.add_edge(2, 5);
  g.set_parts(std::vector<int>{1, 2, 1, 2, 1, 2});
  return g;
}

}  // namespace rootedpoly
