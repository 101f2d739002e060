#pragma once

#include "rdot/polytope.hpp"
#include "rdot/types.hpp"

namespace rdot {

struct OracleResult {
  Coupling sigma;
  double objective = 0.0;       // <C, sigma>
  double certificate_gap = 0.0; // worst reduced-cost violation at termination
  int augmentations = 0;
  bool integral_mode = false;   // true when bounds were rationally scaled
  double wall_ms = 0.0;
};

/// Exact minimizer of <C, S> over the relaxed polytope, computed as a
/// min-cost flow on the bipartite network
///   source -> row_i   with bounds [k_x, K_x],
///   row_i  -> col_j   with capacity 1 and cost C_ij,
///   col_j  -> sink    with bounds [k_y, K_y],
///   sink   -> source  carrying the total mass M.
/// Bounds with up to six decimal digits are scaled to integer capacities,
/// which makes every vertex (and hence the solution for integer bounds)
/// exactly binary. Other bounds fall back to successive shortest paths on
/// real capacities.
OracleResult linear_oracle(const Eigen::Ref<const Matrix>& C, const RelaxationBounds& bounds);

} // namespace rdot
