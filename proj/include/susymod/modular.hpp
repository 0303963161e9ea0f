#pragma once

// Tomita–Takesaki objects on the square two-mode space: the modular
// conjugation J, the modular operator Δ = exp[−β(H^a − H^b)], its flow Δ^{it},
// the Tomita operator S = JΔ^{1/2}, and the vector Ω.

#include "susymod/fock.hpp"
#include "susymod/report.hpp"
#include "susymod/susy.hpp"

#include <cstdint>

namespace susymod {

/// Anti-linear map v ↦ P·conj(v), stored through its linear part P.
class AntiLinearOp {
 public:
  AntiLinearOp(FockSpec spec, Matrix linear_part);

  [[nodiscard]] const FockSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const Matrix& linear_part() const noexcept { return linear_part_; }

  [[nodiscard]] Vector apply(const Vector& v) const;

  /// (this ∘ A): v ↦ P·conj(A·v) = (P·conj(A))·conj(v).
  [[nodiscard]] AntiLinearOp then_after(const LinearOp& a) const;
  /// (A ∘ this): v ↦ A·P·conj(v).
  [[nodiscard]] AntiLinearOp before(const LinearOp& a) const;
  /// (this ∘ other) is linear: v ↦ P·conj(P'·conj(v)) = (P·conj(P'))·v.
  [[nodiscard]] LinearOp compose(const AntiLinearOp& other) const;

 private:
  FockSpec spec_;
  Matrix linear_part_;
};

/// J|n,m⟩⊗(α, β) = |m,n⟩⊗(β̄, ᾱ): swap occupations, flip spin, conjugate.
/// Requires na_cut == nb_cut.
[[nodiscard]] AntiLinearOp modular_conjugation(const FockSpec& spec);

/// J·A·J as a linear operator: P·conj(A)·conj(P).
[[nodiscard]] LinearOp conjugate_by_j(const AntiLinearOp& j, const LinearOp& a);

/// Label n − m − σ; H^a/ℏω − H^b/ℏω is diagonal with this eigenvalue.
[[nodiscard]] int modular_label(const BasisLabel& label) noexcept;

/// Unnormalised weight [1 − e^{−β}]^{1/2} in front of the Ω sum.
[[nodiscard]] double omega_raw_prefactor(double beta);

/// e^{−βn/2} on (n,n,up) and (n,n,down), renormalised to unit norm.
[[nodiscard]] PureState omega_vector(const FockSpec& spec, double beta);

/// Diagonal of Δ^power, i.e. exp(−power·β·(n − m − σ)).
[[nodiscard]] Eigen::VectorXd modular_delta_diagonal(const FockSpec& spec, double beta,
                                                     double power = 1.0);
[[nodiscard]] LinearOp modular_delta(const FockSpec& spec, double beta);
[[nodiscard]] LinearOp modular_delta_power(const FockSpec& spec, double beta, double power);

/// Δ^{it}: diagonal unitary exp(−iβt(n − m − σ)).
[[nodiscard]] LinearOp modular_flow(const FockSpec& spec, double beta, double t);

struct ModularData {
  double beta;
  AntiLinearOp j;
  LinearOp delta;
  PureState omega;
  AntiLinearOp s;
  double truncation_tail;   // e^{−β·min_cut}
  double omega_prefactor;   // raw [1 − e^{−β}]^{1/2} before renormalisation
};

[[nodiscard]] ModularData make_modular_data(const FockSpec& spec, double beta);

/// S = J∘Δ^{1/2}, linear part P·Δ^{1/2}.
[[nodiscard]] AntiLinearOp tomita_s(const ModularData& data);

/// Tolerance for identities that involve Ω or S: max(floor, 10·truncation_tail).
[[nodiscard]] double tail_tolerance(const ModularData& data, double floor);

inline constexpr std::uint64_t kDefaultSeed = 42;

[[nodiscard]] VerificationReport verify_modular(const ModularData& data,
                                                const SusySystem& a_system,
                                                const SusySystem& b_system, int margin, double tol,
                                                std::uint64_t seed = kDefaultSeed);

/// max |⟨Jξ|Jψ⟩ − ⟨ψ|ξ⟩| over `pairs` seeded random state pairs.
[[nodiscard]] double anti_unitarity_residual(const AntiLinearOp& j, int pairs, std::uint64_t seed);

}  // namespace susymod
