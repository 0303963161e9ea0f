#include "susymod/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace susymod {

namespace {

// Builds an operator from a per-basis-state action: for each source label,
// `action` returns the target label and coefficient (or coefficient 0).
template <typename Action>
LinearOp from_action(const FockSpec& spec, Action action) {
  const Eigen::Index dim = spec.total_dim();
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto [target, coeff] = action(basis_label(spec, col));
    if (coeff != 0.0) m(basis_index(spec, target), col) += coeff;
  }
  return LinearOp(spec, std::move(m));
}

}  // namespace

const char* to_string(Spin s) noexcept { return s == Spin::Up ? "up" : "down"; }

FockSpec::FockSpec(int na_cut, int nb_cut) : na_cut_(na_cut), nb_cut_(nb_cut) {
  if (na_cut < 2 || nb_cut < 2) {
    throw std::domain_error("FockSpec: cutoffs must be >= 2 (got " + std::to_string(na_cut) +
                            ", " + std::to_string(nb_cut) + ")");
  }
}

FockSpec default_spec() { return FockSpec(16, 16); }

std::string to_string(const BasisLabel& label) {
  return "|" + std::to_string(label.n) + "," + std::to_string(label.m) + "," +
         to_string(label.s) + "⟩";
}

Eigen::Index basis_index(const FockSpec& spec, const BasisLabel& label) {
  if (label.n < 0 || label.n >= spec.na_cut() || label.m < 0 || label.m >= spec.nb_cut()) {
    throw std::domain_error("basis_index: label " + to_string(label) + " outside cutoffs");
  }
  return (static_cast<Eigen::Index>(label.n) * spec.nb_cut() + label.m) * 2 +
         static_cast<int>(label.s);
}

BasisLabel basis_label(const FockSpec& spec, Eigen::Index index) {
  if (index < 0 || index >= spec.total_dim()) {
    throw std::domain_error("basis_label: index " + std::to_string(index) + " out of range");
  }
  const auto s = static_cast<Spin>(index % 2);
  const Eigen::Index mode = index / 2;
  return {static_cast<int>(mode / spec.nb_cut()), static_cast<int>(mode % spec.nb_cut()), s};
}

void require_same_spec(const FockSpec& lhs, const FockSpec& rhs) {
  if (!(lhs == rhs)) throw std::domain_error("operands live on different Fock spaces");
}

// ---------------------------------------------------------------------------
// LinearOp

LinearOp::LinearOp(FockSpec spec, Matrix matrix) : spec_(spec), matrix_(std::move(matrix)) {
  if (matrix_.rows() != spec_.total_dim() || matrix_.cols() != spec_.total_dim()) {
    throw std::domain_error("LinearOp: matrix shape does not match total_dim");
  }
}

LinearOp LinearOp::zero(const FockSpec& spec) {
  return LinearOp(spec, Matrix::Zero(spec.total_dim(), spec.total_dim()));
}

LinearOp LinearOp::identity(const FockSpec& spec) {
  return LinearOp(spec, Matrix::Identity(spec.total_dim(), spec.total_dim()));
}

LinearOp LinearOp::diagonal(const FockSpec& spec, const Vector& entries) {
  if (entries.size() != spec.total_dim()) {
    throw std::domain_error("LinearOp::diagonal: entry count does not match total_dim");
  }
  return LinearOp(spec, Matrix(entries.asDiagonal()));
}

LinearOp LinearOp::adjoint() const { return LinearOp(spec_, matrix_.adjoint()); }

Vector LinearOp::apply(const Vector& v) const {
  if (v.size() != spec_.total_dim()) throw std::domain_error("LinearOp::apply: size mismatch");
  return matrix_ * v;
}

LinearOp operator+(const LinearOp& lhs, const LinearOp& rhs) {
  require_same_spec(lhs.spec_, rhs.spec_);
  return LinearOp(lhs.spec_, lhs.matrix_ + rhs.matrix_);
}

LinearOp operator-(const LinearOp& lhs, const LinearOp& rhs) {
  require_same_spec(lhs.spec_, rhs.spec_);
  return LinearOp(lhs.spec_, lhs.matrix_ - rhs.matrix_);
}

LinearOp operator*(const LinearOp& lhs, const LinearOp& rhs) {
  require_same_spec(lhs.spec_, rhs.spec_);
  return LinearOp(lhs.spec_, lhs.matrix_ * rhs.matrix_);
}

LinearOp operator*(Complex scale, const LinearOp& op) {
  return LinearOp(op.spec_, scale * op.matrix_);
}

LinearOp operator*(double scale, const LinearOp& op) {
  return LinearOp(op.spec_, scale * op.matrix_);
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(FockSpec spec, Vector amplitudes)
    : spec_(spec), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != spec_.total_dim()) {
    throw std::domain_error("PureState: amplitude count does not match total_dim");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw std::domain_error("PureState: vector is not unit norm (norm = " +
                            std::to_string(amplitudes_.norm()) + ")");
  }
}

PureState PureState::normalized(FockSpec spec, Vector raw) {
  const double norm = raw.norm();
  if (norm == 0.0) throw std::domain_error("PureState::normalized: zero vector");
  raw /= norm;
  return PureState(spec, std::move(raw));
}

PureState PureState::basis(const FockSpec& spec, const BasisLabel& label) {
  Vector v = Vector::Zero(spec.total_dim());
  v(basis_index(spec, label)) = 1.0;
  return PureState(spec, std::move(v));
}

Complex PureState::amplitude(const BasisLabel& label) const {
  return amplitudes_(basis_index(spec_, label));
}

// ---------------------------------------------------------------------------
// Operators

LinearOp ladder_a(const FockSpec& spec) {
  return from_action(spec, [](BasisLabel l) {
    const double c = std::sqrt(static_cast<double>(l.n));
    return std::pair{BasisLabel{l.n > 0 ? l.n - 1 : 0, l.m, l.s}, c};
  });
}

LinearOp ladder_a_dag(const FockSpec& spec) {
  return from_action(spec, [&spec](BasisLabel l) {
    if (l.n + 1 >= spec.na_cut()) return std::pair{l, 0.0};
    return std::pair{BasisLabel{l.n + 1, l.m, l.s}, std::sqrt(static_cast<double>(l.n + 1))};
  });
}

LinearOp ladder_b(const FockSpec& spec) {
  return from_action(spec, [](BasisLabel l) {
    const double c = std::sqrt(static_cast<double>(l.m));
    return std::pair{BasisLabel{l.n, l.m > 0 ? l.m - 1 : 0, l.s}, c};
  });
}

LinearOp ladder_b_dag(const FockSpec& spec) {
  return from_action(spec, [&spec](BasisLabel l) {
    if (l.m + 1 >= spec.nb_cut()) return std::pair{l, 0.0};
    return std::pair{BasisLabel{l.n, l.m + 1, l.s}, std::sqrt(static_cast<double>(l.m + 1))};
  });
}

LinearOp pauli(const FockSpec& spec, Pauli which) {
  switch (which) {
    case Pauli::Z:
      return from_action(spec, [](BasisLabel l) {
        return std::pair{l, static_cast<double>(sigma_z(l.s))};
      });
    case Pauli::Plus:
      return from_action(spec, [](BasisLabel l) {
        return std::pair{BasisLabel{l.n, l.m, Spin::Up}, l.s == Spin::Down ? 1.0 : 0.0};
      });
    case Pauli::Minus:
      return from_action(spec, [](BasisLabel l) {
        return std::pair{BasisLabel{l.n, l.m, Spin::Down}, l.s == Spin::Up ? 1.0 : 0.0};
      });
  }
  throw std::domain_error("pauli: unknown component");
}

std::vector<Eigen::Index> interior_indices(const FockSpec& spec, int margin) {
  if (margin < 0 || margin >= spec.min_cut()) {
    throw std::domain_error("interior margin " + std::to_string(margin) +
                            " must lie in [0, min cutoff)");
  }
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < spec.total_dim(); ++i) {
    const BasisLabel l = basis_label(spec, i);
    if (l.n < spec.na_cut() - margin && l.m < spec.nb_cut() - margin) kept.push_back(i);
  }
  return kept;
}

LinearOp interior_projector(const FockSpec& spec, int margin) {
  Vector diag = Vector::Zero(spec.total_dim());
  for (Eigen::Index i : interior_indices(spec, margin)) diag(i) = 1.0;
  return LinearOp::diagonal(spec, diag);
}

LinearOp commutator(const LinearOp& a, const LinearOp& b) {
  require_same_spec(a.spec(), b.spec());
  return LinearOp(a.spec(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

LinearOp anticommutator(const LinearOp& a, const LinearOp& b) {
  require_same_spec(a.spec(), b.spec());
  return LinearOp(a.spec(), a.matrix() * b.matrix() + b.matrix() * a.matrix());
}

}  // namespace susymod
