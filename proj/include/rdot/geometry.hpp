#pragma once

#include "rdot/types.hpp"

namespace rdot {

/// Directed n-nearest-neighbor graph over a point cloud.
///
/// Edges are ordered lexicographically by (source vertex, neighbor rank),
/// where rank is the order by increasing distance (ties broken by lower
/// index). Weights are inverse Euclidean distances; distances below
/// kDistanceFloor are floored before inversion so that quantized or
/// near-duplicate points keep the operator finite.
struct NeighborGraph {
  Index num_vertices = 0;
  int neighbors = 0;
  std::vector<std::pair<Index, Index>> edges; // directed (i, j), i != j
  Vector weights;                             // w_ij = 1 / max(dist, floor)

  Index num_edges() const { return static_cast<Index>(edges.size()); }
};

inline constexpr double kDistanceFloor = 1e-10;

/// Sparse gradient operator of a weighted graph: maps vertex data
/// (N x d) to edge differences (P x d), row per edge with
/// (G V)_(i,j) = w_ij (V_i - V_j).
struct GradientOperator {
  SparseMatrix matrix; // P x N

  Index rows() const { return matrix.rows(); }
  Index cols() const { return matrix.cols(); }
};

/// Pairwise cost ||X_i - Y_j||^alpha. X is N_X x d, Y is N_Y x d, alpha >= 1.
Matrix build_cost_matrix(const Eigen::Ref<const PointCloud>& X,
                         const Eigen::Ref<const PointCloud>& Y, double alpha);

/// Directed n-nearest-neighbor graph; n is clamped to N-1.
NeighborGraph knn_graph(const Eigen::Ref<const PointCloud>& X, int n);

GradientOperator build_gradient_operator(const NeighborGraph& graph);

/// (G V) for vertex data V (N x d).
Matrix gradient_apply(const GradientOperator& G, const Eigen::Ref<const Matrix>& V);

/// Adjoint G* applied to edge data U (P x d).
Matrix gradient_adjoint_apply(const GradientOperator& G, const Eigen::Ref<const Matrix>& U);

void validate_cloud(const Eigen::Ref<const PointCloud>& X, const std::string& name);

} // namespace rdot
