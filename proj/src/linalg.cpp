#include "susymod/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace susymod {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  // Rescale first so that squaring tiny residuals cannot underflow.
  const double scale = m.cwiseAbs().maxCoeff();
  // Zero rows and columns do not change the singular values; drop them.
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (m.row(r).cwiseAbs().maxCoeff() > 0.0) rows.push_back(r);
  }
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m.col(c).cwiseAbs().maxCoeff() > 0.0) cols.push_back(c);
  }
  const Matrix scaled = m(rows, cols) / scale;
  const Matrix gram =
      rows.size() < cols.size() ? Matrix(scaled * scaled.adjoint()) : Matrix(scaled.adjoint() * scaled);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  const double top = std::max(solver.eigenvalues().maxCoeff(), 0.0);
  return scale * std::sqrt(top);
}

Matrix restrict_to(const Matrix& m, std::span<const Eigen::Index> indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  Matrix out(k, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index r = 0; r < k; ++r) out(r, c) = m(indices[r], indices[c]);
  }
  return out;
}

double interior_norm(const LinearOp& op, int margin) {
  const auto idx = interior_indices(op.spec(), margin);
  return spectral_norm(restrict_to(op.matrix(), idx));
}

std::vector<Eigen::Index> spectator_block_indices(const FockSpec& spec, int margin,
                                                  Spectator fixed, int value) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i : interior_indices(spec, margin)) {
    const BasisLabel l = basis_label(spec, i);
    const int spectator = fixed == Spectator::N ? l.n : l.m;
    if (spectator == value) out.push_back(i);
  }
  if (out.empty()) throw std::domain_error("spectator index outside the interior subspace");
  return out;
}

EigenPairs hermitian_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolve failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolve failed");
  return solver.eigenvalues();
}

Matrix hermitian_exp(const Matrix& h, double scale) {
  const EigenPairs eig = hermitian_eigen(h);
  const Eigen::VectorXcd phases = (scale * eig.values.array()).exp().cast<Complex>();
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace susymod
