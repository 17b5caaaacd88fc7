#pragma once

#include "tropic/cycle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropic {

/// Local fans (Y, X) at one point, with |Y| expected inside |X|.
struct LocalPair {
  TropicalCycle y;
  TropicalCycle x;
  Vec point;
};

/// Local pairs at the relative interior points of every cell of y.
std::vector<LocalPair> local_pairs(const TropicalCycle& y, const TropicalCycle& x);

struct ModerateReport {
  bool ok = true;
  std::optional<std::size_t> violating;  // index into the pair list
  std::string reason;
};
/// Every pair must satisfy |Y| ⊆ |X| and lineal(Y) a proper subspace of lineal(X).
ModerateReport moderate_position(const std::vector<LocalPair>& pairs);

enum class Uniformity { Uniform, NotUniform, Unsupported };

struct UniformReport {
  Uniformity result = Uniformity::Unsupported;
  int corank = -1;  // r in the model L_{U_{r,r+1}} x R^(m-r)
  std::string detail;
};

/**
 * Decides relative uniformity of a local pair in two cases: X a linear space (Y must be a
 * matroidal hyperplane model with weight one) and the corank-one product case X = Y x R.
 * Other local shapes give Uniformity::Unsupported.
 */
UniformReport relatively_uniform(const TropicalCycle& y, const TropicalCycle& x);

struct SelfIntersectionReport {
  TropicalCycle curve;                 // C = phi . S
  TropicalCycle square;                // C^2 = phi . C
  std::vector<Vec> support_points;     // points of |C^2|
  std::vector<Vec> singular_regular;   // C_sing ∩ S_reg
  bool equal = false;
};
/// Compares |C^2| with the singular points of C lying in the regular part of the surface S.
SelfIntersectionReport self_intersection_support(const CartierFunction& phi, const TropicalCycle& s);

}  // namespace tropic
