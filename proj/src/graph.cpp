#include "rootedpoly/graph.hpp"

namespace rootedpoly {

NumGraph to_numeric(const Graph& g) {
  NumGraph out(g.order());
  for (const auto& [key, w] : g.arcs()) out.set_arc(key.first, key.second, Complex(to_double(w), 0.0));
  for (int v = 0; v < g.order(); ++v) out.set_loop(v, Complex(to_double(g.loop(v)), 0.0));
  out.set_root(g.root());
  out.set_parts(g.parts());
  return out;
}

Graph complete_graph(int p) {
  Graph g(p);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph path_graph(int p) {
  Graph g(p);
  for (int a = 0; a + 1 < p; ++a) g.add_edge(a, a + 1);
  return g;
}

Graph cycle_graph(int p) {
  if (p < 3) throw InputError("cycle_graph: need at least 3 vertices");
  Graph g = path_graph(p);
  g.add_edge(p - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph single_vertex(const Rational& b) {
  Graph g(1);
  g.set_loop(0, b);
  g.set_root(0);
  return g;
}

Graph rooted(Graph g, int root) {
  g.set_root(root);
  return g;
}

std::pair<int, int> part_sizes(const std::vector<int>& parts) {
  int p1 = 0;
  int p2 = 0;
  for (int l : parts) (l == 1 ? p1 : p2) += 1;
  return {p1, p2};
}

}  // namespace rootedpoly
