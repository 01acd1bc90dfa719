#include "rootedpoly/corpus.hpp"
#include "rootedpoly/graph.hpp"
#include "rootedpoly/graph_json.hpp"
#include "rootedpoly/oracle.hpp"

#include <gtest/gtest.h>

using namespace rootedpoly;

namespace {

Graph twig() { return rooted(complete_graph(2), 0); }

// Same graph up to relabelling, tested through the generic simple polynomial
// (plus vertex count), which is what the identities care about.
void expect_same_poly(const Graph& a, const Graph& b) {
  ASSERT_EQ(a.order(), b.order());
  if (a.order() <= kDefaultOracleCap) {
    EXPECT_EQ(to_simple(circuit_poly(a)), to_simple(circuit_poly(b)));
  } else {
    EXPECT_EQ(char_poly_det(a), char_poly_det(b));
  }
}

}  // namespace

TEST(Graph, ArcsAndLoops) {
  Graph g(3);
  g.add_edge(0, 1, Rational(2));
  EXPECT_EQ(g.arc(0, 1), 2);
  EXPECT_EQ(g.arc(1, 0), 2);
  g.set_arc(0, 1, Rational(0));
  EXPECT_EQ(g.arcs().size(), 1U);
  EXPECT_THROW(g.set_arc(1, 1, Rational(1)), InputError);
  g.add_loop(2, Rational(1, 2));
  g.add_loop(2, Rational(1, 2));
  EXPECT_EQ(g.loop(2), 1);
  EXPECT_TRUE(g.has_loops());
  EXPECT_THROW(g.arc(0, 3), InputError);
}

TEST(Graph, Coalesce) {
  const Graph p3 = coalesce(twig(), twig());
  EXPECT_EQ(p3.order(), 3);
  EXPECT_EQ(*p3.root(), 0);
  expect_same_poly(p3, path_graph(3));

  const Graph g = rooted(cycle_graph(4), 2);
  EXPECT_EQ(coalesce(g, single_vertex()), g);

  const Graph a = single_vertex(Rational(2)), b = single_vertex(Rational(3));
  EXPECT_EQ(coalesce(a, b).loop(0), 5);
  EXPECT_THROW(coalesce(complete_graph(2), twig()), InputError);
}

TEST(Graph, MultipleCoalesce) {
  const Graph star = multiple_coalesce(std::vector<Graph>(3, twig()));
  expect_same_poly(star, star_graph(3));
  EXPECT_EQ(multiple_coalesce(std::vector<Graph>{twig()}), twig());
  const Graph k3 = rooted(complete_graph(3), 0);
  EXPECT_EQ(multiple_coalesce(std::vector<Graph>{rooted(cycle_graph(4), 0), k3, k3}).order(), 4 + 2 * 2);
  EXPECT_THROW(multiple_coalesce(std::vector<Graph>{}), InputError);
}

TEST(Graph, CoalesceIsAssociativeUpToPolynomial) {
  const std::vector<Graph> hs{twig(), rooted(complete_graph(3), 1), rooted(path_graph(3), 1), single_vertex(Rational(1))};
  for (const auto& a : hs) {
    for (const auto& b : hs) {
      for (const auto& c : hs) {
        expect_same_poly(coalesce(coalesce(a, b), c), coalesce(a, coalesce(b, c)));
      }
    }
  }
}

TEST(Graph, RootedProduct) {
  const Graph core = cycle_graph(4);
  EXPECT_EQ(rooted_product(core, std::vector<Graph>(4, single_vertex())).graph, core);
  const Graph h = rooted(complete_graph(3), 2);
  const auto single = rooted_product(Graph(1), {h});
  EXPECT_EQ(single.graph.order(), 3);
  expect_same_poly(single.graph, h);

  const auto thistle = rooted_product(complete_graph(2), {twig(), twig()});
  expect_same_poly(thistle.graph, path_graph(4));
  ASSERT_EQ(thistle.origin.size(), 4U);
  EXPECT_EQ(thistle.origin[2], (Origin{0, 1}));
  EXPECT_EQ(thistle.origin[3], (Origin{1, 1}));
  EXPECT_EQ(thistle.placement[1], (std::vector<int>{1, 3}));

  EXPECT_THROW(rooted_product(core, std::vector<Graph>(3, twig())), InputError);
}

TEST(Graph, RestrictedProduct) {
  const Graph t = methylpentane_tree();
  EXPECT_EQ(restricted_rooted_product(t, single_vertex(), single_vertex()).graph, [&] {
    Graph u = t;
    u.set_parts(std::nullopt);
    return u;
  }());
  const auto a = restricted_rooted_product(t, single_vertex(), twig()).graph;
  const auto b = restricted_rooted_product(t, twig(), single_vertex()).graph;
  EXPECT_EQ(a.order(), 9);
  EXPECT_EQ(b.order(), 9);
  auto degrees = [](const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [k, w] : g.arcs()) ++d[static_cast<std::size_t>(k.first)];
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(degrees(a), (std::vector<int>{1, 1, 1, 1, 1, 2, 3, 3, 3}));
  EXPECT_EQ(degrees(b), (std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 4}));
  EXPECT_THROW(restricted_rooted_product(path_graph(3), twig(), twig()), InputError);
}

TEST(Graph, RestrictedProductVertexCount) {
  for (const auto& t : bipartite_graphs(5)) {
    const auto [p1, p2] = part_sizes(*t.parts());
    const Graph h1 = rooted(complete_graph(3), 0), h2 = rooted(path_graph(3), 1);
    EXPECT_EQ(restricted_rooted_product(t, h1, h2).graph.order(), t.order() + p1 * 2 + p2 * 2);
  }
}

TEST(Graph, RootAndLoopSurgery) {
  EXPECT_EQ(delete_root(twig()), Graph(1));
  EXPECT_EQ(strip_root_loops(twig()), twig());
  Graph k1 = single_vertex(Rational(5));
  k1.set_root(std::nullopt);
  EXPECT_EQ(strip_all_loops(k1).loop(0), 0);
  EXPECT_THROW(delete_root(single_vertex()), InputError);
  EXPECT_THROW(delete_root(complete_graph(2)), InputError);

  EXPECT_EQ(attach_root_loop(twig(), Rational(0)), strip_root_loops(twig()));
  EXPECT_EQ(attach_root_loop(single_vertex(Rational(4)), Rational(-2)).loop(0), -2);
}

TEST(Graph, AttachRootLoopMatchesPolynomialShift) {
  // A root loop b adds sign * b * u * P(H_-r); b = -lambda / (sign * u) gives
  // P(H^tri) - lambda * P(H_-r).
  for (Mode m : {Mode::CharacteristicStandard, Mode::Permanental}) {
    const Graph h = rooted(path_graph(3), 1);
    const Rational lambda(3, 2);
    const Rational b = -lambda / (loop_sign(m) * *w_value(m, 1));
    EXPECT_EQ(simple_circuit_poly(attach_root_loop(h, b), m),
              simple_circuit_poly(h, m) - Poly(lambda) * simple_circuit_poly(delete_root(h), m));
  }
}

TEST(Graph, EdgeJoin) {
  Graph k2 = edge_join(single_vertex(), single_vertex(), Rational(1));
  k2.set_root(std::nullopt);
  EXPECT_EQ(k2, complete_graph(2));
  const Graph apart = edge_join(twig(), twig(), Rational(0));
  EXPECT_EQ(apart.arcs().size(), 4U);
  const Graph j = edge_join(single_vertex(), single_vertex(), Rational(7, 3));
  EXPECT_EQ(to_simple(circuit_poly(j)), parse_poly("x^2*w1^2 + 7/3*w2"));
}

TEST(Graph, Monodendron) {
  const Graph h = rooted(path_graph(3), 1);
  const auto m3 = monodendron(h, {0, 2}, 3);
  EXPECT_EQ(m3.copies, 7);
  EXPECT_EQ(m3.graph.order(), 1 + 2 * 7);
  EXPECT_EQ(m3.outer_sites.size(), 8U);

  const Graph k3 = rooted(complete_graph(3), 0);
  EXPECT_EQ(monodendron(k3, {1, 2}, 2).graph.order(), 7);

  const auto m0 = monodendron(h, {0, 2}, 0);
  EXPECT_EQ(m0.graph.order(), 1);
  EXPECT_EQ(monodendron_star(m3, m0).graph, m3.graph);
  for (int j = 0; j <= 2; ++j) {
    for (int k = 0; k <= 2; ++k) {
      const auto star = monodendron_star(monodendron(h, {0, 2}, j), monodendron(h, {0, 2}, k));
      const auto direct = monodendron(h, {0, 2}, j + k);
      EXPECT_EQ(star.copies, direct.copies);
      expect_same_poly(star.graph, direct.graph);
    }
  }
  EXPECT_THROW(monodendron(h, {1}, 1), InputError);
  EXPECT_THROW(monodendron(h, {0, 0}, 1), InputError);
}

TEST(Graph, FGraph) {
  const Graph g = complete_graph(2);
  EXPECT_EQ(f_graph(g, twig(), 0), Graph(1));
  EXPECT_EQ(f_graph(g, twig(), 1), g);
  expect_same_poly(f_graph(g, twig(), 2), path_graph(4));
}

TEST(Graph, Bipartition) {
  auto sizes = [](const Graph& g) { return part_sizes(*bipartition(g)); };
  EXPECT_EQ(sizes(path_graph(4)), (std::pair<int, int>{2, 2}));
  EXPECT_FALSE(bipartition(complete_graph(3)).has_value());
  EXPECT_EQ(sizes(star_graph(3)), (std::pair<int, int>{3, 1}));
  Graph looped = path_graph(3);
  looped.set_loop(1, Rational(2));
  EXPECT_TRUE(bipartition(looped).has_value());
  EXPECT_EQ((*bipartition(path_graph(4)))[0], 1);
}

TEST(Graph, PartsRejectInternalArcs) {
  Graph g = path_graph(3);
  EXPECT_THROW(g.set_parts(std::vector<int>{1, 1, 2}), InputError);
  EXPECT_THROW(g.set_parts(std::vector<int>{1, 3, 1}), InputError);
  EXPECT_NO_THROW(g.set_parts(std::vector<int>{1, 2, 1}));
}

TEST(GraphJson, RoundTrip) {
  Graph g(3);
  g.add_edge(0, 1, Rational(1, 2));
  g.set_arc(1, 2, Rational(-3));
  g.set_loop(2, Rational(7));
  g.set_root(1);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  const Graph t = methylpentane_tree();
  EXPECT_EQ(parse_graph(graph_to_json(t).dump()), t);
}

TEST(GraphJson, Errors) {
  try {
    parse_graph(R"({"p": 2, "arcs": [{"from": 1, "to": 3}]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("arcs[0].to"), std::string::npos) << e.what();
  }
  try {
    parse_graph("{\"p\": 2,\n \"edges\": [");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_graph(R"({"p": 2, "loops": [{"at": 1, "b": "1/0"}]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"p": 0})"), InputError);
  EXPECT_THROW(parse_graph(R"({"p": 3, "edges": [{"a": 1, "b": 2}], "parts": [1, 1, 2]})"), InputError);
}

TEST(GraphJson, Provenance) {
  const auto prod = rooted_product(complete_graph(2), {twig(), single_vertex()});
  const auto j = product_to_json(prod);
  ASSERT_EQ(j["provenance"].size(), 3U);
  EXPECT_TRUE(j["provenance"][0]["copy"].is_null());
  EXPECT_EQ(j["provenance"][2]["copy"], 1);
  EXPECT_EQ(j["provenance"][2]["original"], 2);
}

TEST(GraphJson, DendrimerSpec) {
  const DendrimerSpec s{complete_graph(2), rooted(path_graph(3), 1), {0, 2}, 3};
  const DendrimerSpec back = dendrimer_from_json(dendrimer_to_json(s));
  EXPECT_EQ(back.core, s.core);
  EXPECT_EQ(back.unit, s.unit);
  EXPECT_EQ(back.attach_sites, s.attach_sites);
  EXPECT_EQ(back.generations, 3);
}

TEST(Corpus, Sizes) {
  EXPECT_EQ(connected_cores(4).size(), 1U + 1U + 4U + 38U);
  EXPECT_EQ(standard_attachments().size(), 6U);
  for (const auto& t : bipartite_graphs(6)) {
    const auto [p1, p2] = part_sizes(*t.parts());
    EXPECT_GE(p1, p2);
    EXPECT_FALSE(t.has_loops());
  }
}
