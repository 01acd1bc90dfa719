#include "rootedpoly/graph_json.hpp"

#include <fstream>
#include <sstream>

namespace rootedpoly {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw InputError(field + ": " + what); }

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int vertex(const json& j, int p, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer vertex index");
  const auto v = j.get<long>();
  if (v < 1 || v > p) fail(field, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(p));
  return static_cast<int>(v - 1);
}

Rational weight(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const InputError& e) {
    fail(field, e.what());
  }
  fail(field, "expected a weight string like \"3\" or \"-1/2\"");
}

const json* optional_array(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return nullptr;
  if (!it->is_array()) fail(key, "expected an array");
  return &*it;
}

}  // namespace

Graph graph_from_json(const json& j) {
  const json& pj = require(j, "p", "graph");
  if (!pj.is_number_integer() || pj.get<long>() < 1) fail("p", "expected a positive integer");
  const int p = static_cast<int>(pj.get<long>());
  Graph g(p);
  if (const json* arcs = optional_array(j, "arcs")) {
    for (std::size_t i = 0; i < arcs->size(); ++i) {
      const std::string at = "arcs[" + std::to_string(i) + "]";
      const json& a = (*arcs)[i];
      const int from = vertex(require(a, "from", at), p, at + ".from");
      const int to = vertex(require(a, "to", at), p, at + ".to");
      if (from == to) fail(at, "loop given as an arc; use \"loops\"");
      const Rational w = a.contains("w") ? weight(a["w"], at + ".w") : Rational(1);
      g.set_arc(from, to, g.arc(from, to) + w);
    }
  }
  if (const json* edges = optional_array(j, "edges")) {
    for (std::size_t i = 0; i < edges->size(); ++i) {
      const std::string at = "edges[" + std::to_string(i) + "]";
      const json& e = (*edges)[i];
      const int a = vertex(require(e, "a", at), p, at + ".a");
      const int b = vertex(require(e, "b", at), p, at + ".b");
      if (a == b) fail(at, "loop given as an edge; use \"loops\"");
      const Rational w = e.contains("w") ? weight(e["w"], at + ".w") : Rational(1);
      g.set_arc(a, b, g.arc(a, b) + w);
      g.set_arc(b, a, g.arc(b, a) + w);
    }
  }
  if (const json* loops = optional_array(j, "loops")) {
    for (std::size_t i = 0; i < loops->size(); ++i) {
      const std::string at = "loops[" + std::to_string(i) + "]";
      const json& l = (*loops)[i];
      const int v = vertex(require(l, "at", at), p, at + ".at");
      g.add_loop(v, weight(require(l, "b", at), at + ".b"));
    }
  }
  if (auto it = j.find("root"); it != j.end() && !it->is_null()) g.set_root(vertex(*it, p, "root"));
  if (auto it = j.find("parts"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || static_cast<int>(it->size()) != p) fail("parts", "expected " + std::to_string(p) + " labels");
    std::vector<int> parts;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& l = (*it)[i];
      if (!l.is_number_integer()) fail("parts[" + std::to_string(i) + "]", "expected 1 or 2");
      parts.push_back(l.get<int>());
    }
    try {
      g.set_parts(std::move(parts));
    } catch (const InputError& e) {
      fail("parts", e.what());
    }
  }
  return g;
}

static json read_json_text(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Graph parse_graph(std::string_view text) { return graph_from_json(read_json_text(text, "graph")); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_json_text(buf.str(), path);
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

json graph_to_json(const Graph& g) {
  json j;
  j["p"] = g.order();
  json arcs = json::array();
  json edges = json::array();
  for (const auto& [key, w] : g.arcs()) {
    const auto [a, b] = key;
    const Rational back = g.arc(b, a);
    if (back == w) {
      if (a < b) edges.push_back({{"a", a + 1}, {"b", b + 1}, {"w", format_rational(w)}});
    } else {
      arcs.push_back({{"from", a + 1}, {"to", b + 1}, {"w", format_rational(w)}});
    }
  }
  if (!edges.empty()) j["edges"] = edges;
  if (!arcs.empty()) j["arcs"] = arcs;
  json loops = json::array();
  for (int v = 0; v < g.order(); ++v) {
    if (g.loop(v) != 0) loops.push_back({{"at", v + 1}, {"b", format_rational(g.loop(v))}});
  }
  if (!loops.empty()) j["loops"] = loops;
  if (g.root()) j["root"] = *g.root() + 1;
  if (g.parts()) j["parts"] = *g.parts();
  return j;
}

json product_to_json(const Product<Rational>& prod) {
  json j = graph_to_json(prod.graph);
  json prov = json::array();
  for (std::size_t v = 0; v < prod.origin.size(); ++v) {
    const auto& o = prod.origin[v];
    prov.push_back({{"vertex", v + 1},
                    {"copy", o.copy < 0 ? json(nullptr) : json(o.copy + 1)},
                    {"original", o.vertex + 1}});
  }
  j["provenance"] = prov;
  return j;
}

DendrimerSpec dendrimer_from_json(const json& j) {
  DendrimerSpec spec;
  try {
    spec.core = graph_from_json(require(j, "core", "dendrimer"));
  } catch (const InputError& e) {
    throw InputError(std::string("core.") + e.what());
  }
  try {
    spec.unit = graph_from_json(require(j, "unit", "dendrimer"));
  } catch (const InputError& e) {
    throw InputError(std::string("unit.") + e.what());
  }
  const json& sites = require(j, "attach_sites", "dendrimer");
  if (!sites.is_array()) fail("attach_sites", "expected an array");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    spec.attach_sites.push_back(vertex(sites[i], spec.unit.order(), "attach_sites[" + std::to_string(i) + "]"));
  }
  const json& gens = require(j, "generations", "dendrimer");
  if (!gens.is_number_integer() || gens.get<long>() < 0) fail("generations", "expected a nonnegative integer");
  spec.generations = static_cast<int>(gens.get<long>());
  spec.validate();
  return spec;
}

DendrimerSpec load_dendrimer(const std::string& path) { return dendrimer_from_json(read_json_file(path)); }

json dendrimer_to_json(const DendrimerSpec& spec) {
  json sites = json::array();
  for (int s : spec.attach_sites) sites.push_back(s + 1);
  return {{"core", graph_to_json(spec.core)},
          {"unit", graph_to_json(spec.unit)},
          {"attach_sites", sites},
          {"generations", spec.generations}};
}

}  // namespace rootedpoly
