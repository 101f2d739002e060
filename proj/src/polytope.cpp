#include "rdot/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rdot {

FeasibilityReport check_feasible(const RelaxationBounds& b) {
  std::ostringstream why;
  auto fail = [&](const std::string& msg) {
    return FeasibilityReport{false, msg};
  };
  if (b.n < 1) return fail("N must be >= 1");
  if (!(b.mass > 0)) return fail("total mass M must be > 0");
  if (b.k_x < 0 || b.k_y < 0) return fail("lower bounds must be nonnegative");
  if (b.k_x > b.K_x) {
    why << "k_x = " << b.k_x << " > K_x = " << b.K_x;
    return fail(why.str());
  }
  if (b.k_y > b.K_y) {
    why << "k_y = " << b.k_y << " > K_y = " << b.K_y;
    return fail(why.str());
  }
  const double ratio = b.mass / static_cast<double>(b.n);
  if (std::max(b.k_x, b.k_y) > ratio) {
    why << "max(k_x,k_y) = " << std::max(b.k_x, b.k_y) << " > M/N = " << ratio;
    return fail(why.str());
  }
  if (ratio > std::min(b.K_x, b.K_y)) {
    why << "M/N = " << ratio << " > min(K_x,K_y) = " << std::min(b.K_x, b.K_y);
    return fail(why.str());
  }
  return {};
}

Vector project_simplex(const Eigen::Ref<const Vector>& v, double mass) {
  require(mass > 0, "project_simplex: mass must be positive");
  const Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  Index support = 0;
  for (Index i = 0; i < n; ++i) {
    running += u[static_cast<size_t>(i)];
    const double candidate = (running - mass) / static_cast<double>(i + 1);
    if (u[static_cast<size_t>(i)] - candidate > 0) {
      theta = candidate;
      support = i + 1;
    }
  }
  (void)support;
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

Matrix project_capped_rows(const Eigen::Ref<const Matrix>& S, double cap) {
  require(cap > 0, "project_capped_rows: cap must be positive");
  Matrix out(S.rows(), S.cols());
  for (Index i = 0; i < S.rows(); ++i) {
    Vector clipped = S.row(i).cwiseMax(0.0).transpose();
    if (clipped.sum() <= cap) {
      out.row(i) = clipped.transpose();
    } else {
      out.row(i) = project_simplex(S.row(i).transpose(), cap).transpose();
    }
  }
  return out;
}

CouplingCheck check_coupling(const Eigen::Ref<const Coupling>& sigma,
                             const RelaxationBounds& bounds, double tol) {
  CouplingCheck c;
  c.box_violation = std::max(std::max(0.0, -sigma.minCoeff()),
                             std::max(0.0, sigma.maxCoeff() - 1.0));
  const Vector rows = sigma.rowwise().sum();
  const Vector cols = sigma.colwise().sum().transpose();
  c.row_violation = std::max(std::max(0.0, bounds.k_x - rows.minCoeff()),
                             std::max(0.0, rows.maxCoeff() - bounds.K_x));
  c.col_violation = std::max(std::max(0.0, bounds.k_y - cols.minCoeff()),
                             std::max(0.0, cols.maxCoeff() - bounds.K_y));
  c.mass_violation = std::abs(sigma.sum() - bounds.mass);
  c.ok = c.box_violation <= tol && c.row_violation <= tol && c.col_violation <= tol &&
         c.mass_violation <= tol * static_cast<double>(bounds.n);
  return c;
}

} // namespace rdot
