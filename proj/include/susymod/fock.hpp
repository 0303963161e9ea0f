#pragma once

// Truncated two-mode Fock space F_a ⊗ F_b ⊗ C² with dense operators on it.
//
// Basis ordering is fixed: spin fastest, then the b occupation m, then the a
// occupation n, i.e. index = (n * nb_cut + m) * 2 + s with s = 0 for spin up.
// Spin up is the σ_z = +1 column vector (1, 0).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace susymod {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Spin : int { Up = 0, Down = 1 };

[[nodiscard]] constexpr int sigma_z(Spin s) noexcept { return s == Spin::Up ? 1 : -1; }
[[nodiscard]] constexpr Spin flip(Spin s) noexcept { return s == Spin::Up ? Spin::Down : Spin::Up; }
[[nodiscard]] const char* to_string(Spin s) noexcept;

class FockSpec {
 public:
  /// Throws std::domain_error unless both cutoffs are >= 2.
  FockSpec(int na_cut, int nb_cut);

  [[nodiscard]] int na_cut() const noexcept { return na_cut_; }
  [[nodiscard]] int nb_cut() const noexcept { return nb_cut_; }
  [[nodiscard]] int min_cut() const noexcept { return na_cut_ < nb_cut_ ? na_cut_ : nb_cut_; }
  [[nodiscard]] Eigen::Index total_dim() const noexcept {
    return static_cast<Eigen::Index>(na_cut_) * nb_cut_ * 2;
  }
  [[nodiscard]] bool is_square() const noexcept { return na_cut_ == nb_cut_; }

  friend bool operator==(const FockSpec&, const FockSpec&) = default;

 private:
  int na_cut_;
  int nb_cut_;
};

/// Default desk-scale space, 16 x 16 x 2 = 512 states.
[[nodiscard]] FockSpec default_spec();

struct BasisLabel {
  int n = 0;
  int m = 0;
  Spin s = Spin::Up;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

[[nodiscard]] std::string to_string(const BasisLabel& label);

[[nodiscard]] Eigen::Index basis_index(const FockSpec& spec, const BasisLabel& label);
[[nodiscard]] BasisLabel basis_label(const FockSpec& spec, Eigen::Index index);

/// Dense complex matrix on the joint space, tagged with the space it acts on.
class LinearOp {
 public:
  LinearOp(FockSpec spec, Matrix matrix);

  [[nodiscard]] static LinearOp zero(const FockSpec& spec);
  [[nodiscard]] static LinearOp identity(const FockSpec& spec);
  [[nodiscard]] static LinearOp diagonal(const FockSpec& spec, const Vector& entries);

  [[nodiscard]] const FockSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }

  [[nodiscard]] LinearOp adjoint() const;
  [[nodiscard]] Vector apply(const Vector& v) const;

  friend LinearOp operator+(const LinearOp& lhs, const LinearOp& rhs);
  friend LinearOp operator-(const LinearOp& lhs, const LinearOp& rhs);
  friend LinearOp operator*(const LinearOp& lhs, const LinearOp& rhs);
  friend LinearOp operator*(Complex scale, const LinearOp& op);
  friend LinearOp operator*(double scale, const LinearOp& op);

 private:
  FockSpec spec_;
  Matrix matrix_;
};

/// Unit-norm amplitude vector. Construction rejects vectors whose norm is off
/// by more than 1e-12; use normalized() to rescale a raw vector explicitly.
class PureState {
 public:
  PureState(FockSpec spec, Vector amplitudes);

  [[nodiscard]] static PureState normalized(FockSpec spec, Vector raw);
  [[nodiscard]] static PureState basis(const FockSpec& spec, const BasisLabel& label);

  [[nodiscard]] const FockSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const Vector& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] Complex amplitude(const BasisLabel& label) const;

 private:
  FockSpec spec_;
  Vector amplitudes_;
};

inline constexpr double kNormTolerance = 1e-12;

// Ladder operators. a† annihilates the top occupation state of its mode
// (zero column), so every operator is total on the truncated space.
[[nodiscard]] LinearOp ladder_a(const FockSpec& spec);
[[nodiscard]] LinearOp ladder_a_dag(const FockSpec& spec);
[[nodiscard]] LinearOp ladder_b(const FockSpec& spec);
[[nodiscard]] LinearOp ladder_b_dag(const FockSpec& spec);

enum class Pauli { Z, Plus, Minus };

/// I_a ⊗ I_b ⊗ σ. σ+ maps down to up, σ- maps up to down.
[[nodiscard]] LinearOp pauli(const FockSpec& spec, Pauli which);

/// Basis indices kept by interior_projector(spec, margin), ascending.
[[nodiscard]] std::vector<Eigen::Index> interior_indices(const FockSpec& spec, int margin);

/// Orthogonal projector onto span{|n,m,s⟩ : n < na_cut - margin, m < nb_cut - margin}.
/// Identities of operator degree <= margin hold exactly on this subspace.
[[nodiscard]] LinearOp interior_projector(const FockSpec& spec, int margin);

[[nodiscard]] LinearOp commutator(const LinearOp& a, const LinearOp& b);
[[nodiscard]] LinearOp anticommutator(const LinearOp& a, const LinearOp& b);

void require_same_spec(const FockSpec& lhs, const FockSpec& rhs);

}  // namespace susymod
