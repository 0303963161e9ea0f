#include "susymod/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace susymod {

SupermultipletState supermultiplet_state(const FockSpec& spec, int k, Complex alpha,
                                         Complex beta) {
  if (k < 1 || k >= spec.min_cut()) {
    throw std::domain_error("supermultiplet_state: k=" + std::to_string(k) +
                            " outside [1, " + std::to_string(spec.min_cut()) + ")");
  }
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::domain_error("supermultiplet_state: |alpha|^2 + |beta|^2 = " +
                            std::to_string(norm2) + ", expected 1");
  }
  Vector v = Vector::Zero(spec.total_dim());
  v(basis_index(spec, {k, k - 1, Spin::Up})) = alpha;
  v(basis_index(spec, {k - 1, k, Spin::Down})) = beta;
  return {k, alpha, beta, PureState(spec, std::move(v))};
}

double concurrence_via_modular(const AntiLinearOp& j, const PureState& state) {
  require_same_spec(j.spec(), state.spec());
  const Vector& psi = state.amplitudes();
  return std::abs(psi.dot(j.apply(psi)));
}

SpinDensity::SpinDensity(const Eigen::Matrix2cd& rho) : rho_(rho) {
  constexpr double tol = 1e-12;
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::domain_error("SpinDensity: not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > tol) {
    throw std::domain_error("SpinDensity: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol) {
    throw std::domain_error("SpinDensity: not positive semidefinite");
  }
}

double SpinDensity::determinant() const { return rho_.determinant().real(); }

SpinDensity spin_reduced_density(const PureState& state) {
  const Vector& psi = state.amplitudes();
  // Spin is the fastest index, so reshape to (2, modes): column = Fock label.
  const Eigen::Index modes = psi.size() / 2;
  const Eigen::Map<const Eigen::MatrixXcd> grid(psi.data(), 2, modes);
  const Eigen::Matrix2cd rho = grid * grid.adjoint();
  return SpinDensity(rho);
}

double concurrence_wootters(const PureState& state) {
  const double det = spin_reduced_density(state).determinant();
  return 2.0 * std::sqrt(std::max(det, 0.0));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::domain_error("entanglement_of_formation: concurrence must lie in [0, 1]");
  }
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace susymod
