#include "bernstein/quadrature.hpp"

#include <numbers>

#include <Eigen/Eigenvalues>

#include "bernstein/errors.hpp"

namespace bernstein {

void validate(const QuadratureConfig& config) {
  if (config.start_nodes < 16) {
    throw InvalidArgument("quadrature start_nodes must be at least 16");
  }
  if (config.max_nodes < config.start_nodes) {
    throw InvalidArgument("quadrature max_nodes must be at least start_nodes");
  }
  if (!(config.rel_tol > 0.0)) {
    throw InvalidArgument("quadrature rel_tol must be positive");
  }
}

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) {
    throw InvalidArgument("Gauss-Legendre order must be positive");
  }
  // Jacobi matrix of the Legendre recurrence; its eigenvalues are the nodes.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  nodes_ = solver.eigenvalues().array();
  weights_.resize(order);

  // Newton polish on P_order, then w = 2 / ((1 - x^2) P'(x)^2).
  for (int i = 0; i < order; ++i) {
    double x = nodes_[i];
    double dp = 1.0;
    for (int iter = 0; iter < 3; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    nodes_[i] = x;
    weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

const GaussLegendre& panel_rule() {
  static const GaussLegendre rule(20);
  return rule;
}

std::vector<std::complex<double>> circle_preimages(std::span<const std::complex<double>> zeros) {
  std::vector<std::complex<double>> out;
  out.reserve(zeros.size());
  for (const auto z : zeros) {
    if (z != 0.0) {
      // e^{it} = z  <=>  t = arg z - i log|z|
      double angle = std::arg(z);
      if (angle < 0.0) {
        angle += 2.0 * std::numbers::pi;
      }
      out.emplace_back(angle, -std::log(std::abs(z)));
    }
  }
  return out;
}

double ellipse_parameter(double a, double b, std::complex<double> tau) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> xi = (tau - center) / half;
  // Semi-major axis of the confocal ellipse through xi.
  const double x = xi.real();
  const double y2 = xi.imag() * xi.imag();
  const double alpha = 0.5 * (std::sqrt((x - 1.0) * (x - 1.0) + y2) + std::sqrt((x + 1.0) * (x + 1.0) + y2));
  return alpha + std::sqrt(std::max(alpha * alpha - 1.0, 0.0));
}

} // namespace bernstein
