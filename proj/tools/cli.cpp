#include "cli.hpp"

#include "rootedpoly/dendrimer.hpp"
#include "rootedpoly/error.hpp"
#include "rootedpoly/factor.hpp"
#include "rootedpoly/graph_json.hpp"
#include "rootedpoly/oracle.hpp"
#include "rootedpoly/spectra.hpp"
#include "rootedpoly/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rootedpoly::cli {

namespace {

using nlohmann::json;

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

// Rounds to 12 significant digits for JSON output.
double r12(double v) { return std::stod(g12(v)); }

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [mono, coef] : p.terms()) {
    json powers = json::object();
    for (const auto& [v, e] : mono.factors()) powers[v.name()] = e;
    terms.push_back({{"coefficient", format_rational(coef)}, {"powers", powers}});
  }
  return terms;
}

// "K1" stands for the single rooted vertex; anything else is a JSON file.
Graph load_member(const std::string& arg) {
  if (arg == "K1") return single_vertex();
  return load_graph(arg);
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot open for writing");
  f << j.dump(2) << "\n";
}

void print_roots(const RootSet& rs, Mode m, bool as_json, std::ostream& out) {
  if (as_json) {
    json roots = json::array();
    for (const auto& r : rs.roots) {
      roots.push_back({{"re", r12(r.value.real())},
                       {"im", r12(r.value.imag())},
                       {"multiplicity", r.multiplicity},
                       {"residual", r12(r.residual)}});
    }
    out << json{{"mode", mode_name(m)}, {"degree", rs.source_degree}, {"roots", roots}}.dump(2) << "\n";
    return;
  }
  out << "# mode " << mode_name(m) << ", degree " << rs.source_degree << ", " << rs.roots.size()
      << " distinct roots\n";
  out << std::setw(20) << "re" << std::setw(20) << "im" << std::setw(6) << "mult" << std::setw(20) << "residual"
      << "\n";
  for (const auto& r : rs.roots) {
    out << std::setw(20) << g12(r.value.real()) << std::setw(20) << g12(r.value.imag()) << std::setw(6)
        << r.multiplicity << std::setw(20) << g12(r.residual) << "\n";
  }
}

void require_numeric(Mode m) {
  if (!w_value(m, 1) || !w_value(m, 2)) {
    throw InputError("mode '" + std::string(mode_name(m)) + "' leaves weights symbolic; pick a numeric mode");
  }
}

std::string mode_list() {
  std::string s;
  for (Mode m : all_modes()) s += (s.empty() ? "" : ", ") + std::string(mode_name(m));
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit polynomials of rooted products and dendrimers", "rootedpoly"};
  app.require_subcommand(1);

  std::string mode_arg = "generic";
  int cap = 0;
  bool as_json = false;

  // poly
  auto* poly = app.add_subcommand("poly", "Circuit polynomial of a graph");
  std::string graph_file;
  bool simple = false;
  bool full = false;
  poly->add_option("graph", graph_file, "graph JSON file")->required();
  poly->add_option("--mode", mode_arg, "weight mode: " + mode_list());
  poly->add_flag("--simple", simple, "set every x_i to x");
  poly->add_flag("--full", full, "keep per-vertex variables (default)");
  poly->add_option("--cap", cap, "oracle size cap");
  poly->add_flag("--json", as_json, "print a JSON term list");

  // product
  auto* product = app.add_subcommand("product", "Build a rooted product graph");
  std::string core_file;
  std::vector<std::string> member_files;
  std::vector<int> gamma;
  bool restricted = false;
  std::string h1_file;
  std::string h2_file;
  std::string out_file;
  product->add_option("core", core_file, "core graph JSON file")->required();
  product->add_option("members", member_files, "rooted graph files (or K1)");
  product->add_option("--gamma", gamma, "1-based member index for each core vertex")->delimiter(',');
  product->add_flag("--restricted", restricted, "restricted product on a bipartite core");
  product->add_option("--h1", h1_file, "graph attached to part 1 (or K1)");
  product->add_option("--h2", h2_file, "graph attached to part 2 (or K1)");
  product->add_option("-o,--output", out_file, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the composition identities on the built-in corpus");
  std::string suite = "all";
  double tol = 1e-8;
  std::string format = "json";
  verify->add_option("--suite", suite, "all, products, bipartite, spectral, divisibility, crosscheck, dendrimer");
  verify->add_option("--cap", cap, "oracle size cap for constructed products");
  verify->add_option("--tol", tol, "relative tolerance of the numeric checks");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Roots of the simple circuit polynomial");
  std::string spec_file;
  std::string spectrum_mode = "characteristic-standard";
  spectrum->add_option("graph", graph_file, "graph JSON file");
  spectrum->add_option("--dendrimer", spec_file, "dendrimer spec JSON file");
  spectrum->add_option("--mode", spectrum_mode, "numeric weight mode");
  spectrum->add_option("--cap", cap, "oracle size cap");
  spectrum->add_flag("--json", as_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (cap < 0) throw InputError("--cap must be at least 1");

    if (*poly) {
      if (simple && full) throw InputError("--simple and --full are exclusive");
      const Mode m = parse_mode(mode_arg);
      const Graph g = load_graph(graph_file);
      const int c = cap > 0 ? cap : default_oracle_cap();
      Poly p = mode_circuit_poly(g, m, c);
      if (simple) p = to_simple(p);
      if (as_json) {
        out << json{{"mode", mode_name(m)},
                    {"form", simple ? "simple" : "full"},
                    {"polynomial", p.to_string()},
                    {"terms", poly_to_json(p)}}
                   .dump(2)
            << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return kOk;
    }

    if (*product) {
      const Graph core = load_graph(core_file);
      Product<Rational> prod;
      if (restricted) {
        if (!member_files.empty() || !gamma.empty()) {
          throw InputError("--restricted takes --h1 and --h2, not member files or --gamma");
        }
        if (h1_file.empty() || h2_file.empty()) throw InputError("--restricted needs both --h1 and --h2");
        Graph t = core;
        t.set_parts(oriented_parts(core));
        prod = restricted_rooted_product(t, load_member(h1_file), load_member(h2_file));
      } else {
        if (!h1_file.empty() || !h2_file.empty()) throw InputError("--h1/--h2 need --restricted");
        if (member_files.empty()) throw InputError("no member graphs given");
        std::vector<Graph> members;
        for (const auto& f : member_files) members.push_back(load_member(f));
        std::vector<Graph> family;
        if (gamma.empty()) {
          if (members.size() == 1) {
            family.assign(static_cast<std::size_t>(core.order()), members.front());
          } else if (static_cast<int>(members.size()) == core.order()) {
            family = members;
          } else {
            throw InputError("got " + std::to_string(members.size()) + " member graphs for a core with " +
                             std::to_string(core.order()) + " vertices; use one, one per vertex, or --gamma");
          }
        } else {
          if (static_cast<int>(gamma.size()) != core.order()) {
            throw InputError("--gamma has " + std::to_string(gamma.size()) + " entries, core has " +
                             std::to_string(core.order()) + " vertices");
          }
          for (std::size_t k = 0; k < gamma.size(); ++k) {
            const int i = gamma[k];
            if (i < 1 || i > static_cast<int>(members.size())) {
              throw InputError("--gamma entry " + std::to_string(k + 1) + " (vertex " + std::to_string(k + 1) +
                               ") names member " + std::to_string(i) + ", only " +
                               std::to_string(members.size()) + " given");
            }
            family.push_back(members[static_cast<std::size_t>(i - 1)]);
          }
        }
        prod = rooted_product(core, family);
      }
      write_json(product_to_json(prod), out_file, out);
      return kOk;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.cap = cap > 0 ? cap : default_verify_cap();
      opt.tol = tol;
      const auto reports = run_suites(suite, opt);
      bool ok = true;
      json all = json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        all.push_back(r.to_json());
      }
      if (format == "json") {
        out << json{{"status", ok ? "pass" : "fail"}, {"cap", opt.cap}, {"tol", opt.tol}, {"suites", all}}.dump(2)
            << "\n";
      } else {
        for (const auto& r : reports) {
          out << "[" << r.suite << "] " << (r.passed() ? "pass" : "FAIL") << " in " << g12(r.seconds) << " s\n";
          for (const auto& id : r.identities) {
            out << "  " << std::left << std::setw(44) << id.id << std::right << std::setw(8) << id.status()
                << std::setw(8) << id.instances << " checked" << std::setw(6) << id.skipped << " skipped";
            if (!id.exact) out << "  max dev " << g12(id.max_deviation);
            out << "\n";
            if (!id.first_failure.empty()) out << "      first failure: " << id.first_failure << "\n";
          }
        }
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (*spectrum) {
      const Mode m = parse_mode(spectrum_mode);
      require_numeric(m);
      if (graph_file.empty() == spec_file.empty()) throw InputError("give either a graph file or --dendrimer");
      RootSet rs;
      if (!spec_file.empty()) {
        rs = dendrimer_spectrum(load_dendrimer(spec_file), m);
      } else {
        const Graph g = load_graph(graph_file);
        const Poly p = m == Mode::CharacteristicStandard ? char_poly_det(g)
                                                         : simple_circuit_poly(g, m, cap > 0 ? cap : default_oracle_cap());
        if (p.degree_in(Var::x()) < 1) throw InputError("polynomial is constant; no roots");
        rs = roots(p);
      }
      print_roots(rs, m, as_json, out);
      return kOk;
    }
  } catch (const CapExceeded& e) {
    err << "rootedpoly: " << e.what() << " (raise it with --cap or ROOTEDPOLY_CAP)\n";
    return kCap;
  } catch (const InputError& e) {
    err << "rootedpoly: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "rootedpoly: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace rootedpoly::cli
