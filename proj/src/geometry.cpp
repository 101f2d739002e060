#include "rdot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rdot {

void validate_cloud(const Eigen::Ref<const PointCloud>& X, const std::string& name) {
  require(X.rows() >= 1 && X.cols() >= 1, name + ": cloud must be at least 1x1");
  require(X.allFinite(), name + ": cloud has non-finite entries");
}

Matrix build_cost_matrix(const Eigen::Ref<const PointCloud>& X,
                         const Eigen::Ref<const PointCloud>& Y, double alpha) {
  validate_cloud(X, "X");
  validate_cloud(Y, "Y");
  require(X.cols() == Y.cols(), "build_cost_matrix: dimension mismatch between clouds");
  require(alpha >= 1.0, "build_cost_matrix: alpha must be >= 1");

  const Index nx = X.rows();
  const Index ny = Y.rows();
  // Squared distances via the parallelogram expansion, then the power alpha/2.
  Matrix sq = (X.rowwise().squaredNorm().replicate(1, ny) +
               Y.rowwise().squaredNorm().transpose().replicate(nx, 1) -
               2.0 * X * Y.transpose())
                  .cwiseMax(0.0);
  if (alpha == 2.0) return sq;
  return sq.array().pow(alpha / 2.0).matrix();
}

NeighborGraph knn_graph(const Eigen::Ref<const PointCloud>& X, int n) {
  validate_cloud(X, "X");
  require(n > 0, "knn_graph: n must be positive");

  const Index N = X.rows();
  const int k = static_cast<int>(std::min<Index>(n, N - 1));

  NeighborGraph graph;
  graph.num_vertices = N;
  graph.neighbors = k;
  if (k == 0) return graph;

  graph.edges.reserve(static_cast<size_t>(N) * k);
  std::vector<double> w;
  w.reserve(static_cast<size_t>(N) * k);

  std::vector<Index> order(static_cast<size_t>(N));
  Vector dist(N);
  for (Index i = 0; i < N; ++i) {
    dist = (X.rowwise() - X.row(i)).rowwise().norm();
    std::iota(order.begin(), order.end(), Index{0});
    // Rank by distance, ties by lower index; the point itself is excluded.
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (dist[a] != dist[b]) return dist[a] < dist[b];
      return a < b;
    });
    int taken = 0;
    for (Index r = 0; r < N && taken < k; ++r) {
      const Index j = order[static_cast<size_t>(r)];
      if (j == i) continue;
      graph.edges.emplace_back(i, j);
      w.push_back(1.0 / std::max(dist[j], kDistanceFloor));
      ++taken;
    }
  }
  graph.weights = Eigen::Map<const Vector>(w.data(), static_cast<Index>(w.size()));
  return graph;
}

GradientOperator build_gradient_operator(const NeighborGraph& graph) {
  const Index P = graph.num_edges();
  SparseMatrix G(P, graph.num_vertices);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(2 * P));
  for (Index e = 0; e < P; ++e) {
    const auto [i, j] = graph.edges[static_cast<size_t>(e)];
    const double w = graph.weights[e];
    triplets.emplace_back(e, i, w);
    triplets.emplace_back(e, j, -w);
  }
  G.setFromTriplets(triplets.begin(), triplets.end());
  G.makeCompressed();
  return GradientOperator{std::move(G)};
}

Matrix gradient_apply(const GradientOperator& G, const Eigen::Ref<const Matrix>& V) {
  require(V.rows() == G.cols(), "gradient_apply: vertex data has wrong row count");
  return G.matrix * V;
}

Matrix gradient_adjoint_apply(const GradientOperator& G, const Eigen::Ref<const Matrix>& U) {
  require(U.rows() == G.rows(), "gradient_adjoint_apply: edge data has wrong row count");
  return G.matrix.transpose() * U;
}

} // namespace rdot
