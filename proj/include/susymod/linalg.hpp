#pragma once

// Dense numerical helpers shared by the verification suites and the spectrum
// oracles: residual norms, subspace restriction and Hermitian eigensolves.

#include "susymod/fock.hpp"

#include <span>
#include <vector>

namespace susymod {

/// Largest singular value. Exact zeros short-circuit to 0.
[[nodiscard]] double spectral_norm(const Matrix& m);

/// Rows and columns of `m` selected by `indices` (compressed P·M·P).
[[nodiscard]] Matrix restrict_to(const Matrix& m, std::span<const Eigen::Index> indices);

/// ‖P·X·P‖ with P = interior_projector(spec, margin).
[[nodiscard]] double interior_norm(const LinearOp& op, int margin);

/// Mode whose occupation is held fixed when a Hamiltonian is block-diagonalised
/// along the other mode's ladder.
enum class Spectator { N, M };

/// Interior basis indices with the spectator occupation fixed to `value`.
[[nodiscard]] std::vector<Eigen::Index> spectator_block_indices(const FockSpec& spec, int margin,
                                                                Spectator fixed, int value);

struct EigenPairs {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns, in the block's own basis
};

/// Eigen decomposition of a Hermitian matrix (only the lower triangle is read).
[[nodiscard]] EigenPairs hermitian_eigen(const Matrix& m);
[[nodiscard]] Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Matrix exponential of a Hermitian matrix times a real scale, via its eigenbasis.
[[nodiscard]] Matrix hermitian_exp(const Matrix& h, double scale);

}  // namespace susymod
