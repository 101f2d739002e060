#pragma once

#include "rdot/types.hpp"

namespace rdot {

/// Interval bounds on the row sums, column sums and total mass of a
/// relaxed transport plan. The polytope is
///   { S in [0,1]^{NxN} : k_x <= S 1 <= K_x, k_y <= S^T 1 <= K_y, 1^T S 1 = M }.
struct RelaxationBounds {
  double k_x = 1.0;
  double K_x = 1.0;
  double k_y = 1.0;
  double K_y = 1.0;
  double mass = 0.0; // M; callers typically set M = N
  Index n = 0;       // instance size

  static RelaxationBounds classic(Index n) {
    return RelaxationBounds{1.0, 1.0, 1.0, 1.0, static_cast<double>(n), n};
  }
  /// Rows pinned to 1, columns capped by k: the asymmetric set D_k.
  static RelaxationBounds row_stochastic(Index n, double cap) {
    return RelaxationBounds{1.0, 1.0, 0.0, cap, static_cast<double>(n), n};
  }
};

struct FeasibilityReport {
  bool feasible = true;
  std::string violation; // names the violated inequality when infeasible
};

/// Checks k <= K ordering and max(k_x,k_y) <= M/N <= min(K_x,K_y).
FeasibilityReport check_feasible(const RelaxationBounds& bounds);

/// Euclidean projection of v onto { u >= 0, sum(u) = mass }.
Vector project_simplex(const Eigen::Ref<const Vector>& v, double mass);

/// Row-wise Euclidean projection onto { V >= 0, V 1 <= cap }: clip the
/// negatives; rows whose clipped sum exceeds the cap are projected onto
/// { V >= 0, V 1 = cap }.
Matrix project_capped_rows(const Eigen::Ref<const Matrix>& S, double cap);

struct CouplingCheck {
  bool ok = true;
  double box_violation = 0.0;  // worst entry outside [0,1]
  double row_violation = 0.0;  // worst row-sum distance to [k_x, K_x]
  double col_violation = 0.0;
  double mass_violation = 0.0; // |total - M|
};

CouplingCheck check_coupling(const Eigen::Ref<const Coupling>& sigma,
                             const RelaxationBounds& bounds, double tol = 1e-8);

} // namespace rdot
