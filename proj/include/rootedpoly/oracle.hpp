#pragma once

// Brute-force ground truth: the circuit polynomial by cycle-cover enumeration
// and its classical specializations, plus independent cross-checks
// (determinant by interpolation, permanent by Ryser's formula, cycle index).

#include "rootedpoly/graph.hpp"
#include "rootedpoly/poly.hpp"
#include "rootedpoly/upoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rootedpoly {

enum class Mode {
  Generic,
  Farrell,
  Permanental,
  CharacteristicPaper,
  CharacteristicStandard,
  MatchingPlus,
  MatchingMinus,
};

std::string_view mode_name(Mode m);
/// Accepts the kebab-case names printed by mode_name.
Mode parse_mode(std::string_view name);
const std::vector<Mode>& all_modes();

/// Sign applied to every loop weight before expansion (b_i = -a_ii in the
/// determinant-like modes).
int loop_sign(Mode m);
/// Value assigned to w_j, or nullopt when w_j stays symbolic.
std::optional<Rational> w_value(Mode m, int j);
/// What a fixed point contributes besides x_i + b_i: w_1 or its value.
Poly unit(Mode m);

/// Default cap on oracle graph size; ROOTEDPOLY_CAP overrides it.
int default_oracle_cap();
inline constexpr int kDefaultOracleCap = 9;

/// P(G; x_1..x_p; w_1..w_p) with x_i = Var::x(i), w_j = Var::w(j), summed
/// over cycle covers. Throws CapExceeded when p > cap.
Poly circuit_poly(const Graph& g, int cap = default_oracle_cap());
/// Single-threaded reference for circuit_poly.
Poly circuit_poly_serial(const Graph& g, int cap = default_oracle_cap());

/// Assigns the mode's w values. Farrell additionally keeps only terms
/// without loop weights, sets x_i = 1 and halves w_j for j >= 3.
Poly specialize(const Poly& p, Mode m);
/// x_i -> x for every i.
Poly to_simple(const Poly& p);

/// circuit_poly of g with loop weights multiplied by loop_sign(m), then
/// specialized.
Poly mode_circuit_poly(const Graph& g, Mode m, int cap = default_oracle_cap());
/// to_simple(mode_circuit_poly(g, m)).
Poly simple_circuit_poly(const Graph& g, Mode m, int cap = default_oracle_cap());

/// Simple polynomial of a graph with floating weights under a non-generic
/// mode; ascending coefficients.
std::vector<Complex> numeric_simple_poly(const NumGraph& g, Mode m, int cap = default_oracle_cap());

/// det(x I - (A + diag b)), exact, by evaluation at p + 1 integers.
Poly char_poly_det(const Graph& g);
/// per(x I + A + diag b) by Ryser's inclusion-exclusion.
Poly permanental_poly_check(const Graph& g, int cap = default_oracle_cap() + 3);
Poly permanental_poly_check_serial(const Graph& g, int cap = default_oracle_cap() + 3);

/// Z(S_p) in w_1..w_p.
Poly cycle_index_Sp(int p);

/// p!
Rational factorial(int p);

}  // namespace rootedpoly
