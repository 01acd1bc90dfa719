#pragma once

// Fixed graph families used by the verification suites and the tests.

#include "rootedpoly/graph.hpp"

#include <string>
#include <vector>

namespace rootedpoly {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Every labelled connected simple graph on 1..max_order vertices.
std::vector<NamedGraph> connected_cores(int max_order = 4);

/// K1, K2, P3 rooted at an end, P3 rooted at its center, K3, and K1 with a
/// loop of weight 1.
std::vector<NamedGraph> standard_attachments();

/// Loop weights injected at core vertex 1: none, -1, 1, 2.
std::vector<Rational> core_loop_variants();

struct ProductInstance {
  std::string name;
  Graph core;
  std::vector<Graph> gamma;
  bool identical = true;  ///< every member is the same rooted graph
};

/// Cores x attachments x loop variants with identical members, plus one
/// mixed family per core and loop variant.
std::vector<ProductInstance> product_corpus(int max_core_order = 4);

struct RestrictedInstance {
  std::string name;
  Graph core;  ///< parts oriented so part 1 is the larger; loops common per part
  Graph h1;
  Graph h2;
  Rational loop1;
  Rational loop2;
};

/// Loop weight pairs (part 1, part 2) put on the core: (0,0), (1,0), (-1,2).
std::vector<std::pair<Rational, Rational>> part_loop_variants();

/// Bipartite connected cores x attachment pairs x part loop variants.
std::vector<RestrictedInstance> restricted_corpus(int max_core_order = 4);

/// One loopless bipartite graph per isomorphism class of bipartitioned
/// graphs on at most max_order vertices (parts ordered so p1 >= p2, isolated
/// vertices allowed).
std::vector<Graph> bipartite_graphs(int max_order);

/// The 3-methylpentane skeleton: path 1-2-3-4-5 with a twig 6 at vertex 3,
/// parts {1,3,5} and {2,4,6}.
Graph methylpentane_tree();

}  // namespace rootedpoly
