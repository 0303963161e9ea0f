#pragma once

// Concurrence of entangled supermultiplet states, computed two ways: as the
// modulus of the J expectation value, and from the spin reduced density
// matrix. Plus entanglement of formation from concurrence.

#include "susymod/fock.hpp"
#include "susymod/modular.hpp"

namespace susymod {

/// α|k, k−1, up⟩ + β|k−1, k, down⟩. The state is a member of the energy-k
/// supermultiplet of both H^a and H^b.
struct SupermultipletState {
  int k;
  Complex alpha;
  Complex beta;
  PureState state;
};

/// Throws std::domain_error if |α|² + |β|² differs from 1 by more than 1e-12
/// or if k is not in [1, min_cut).
[[nodiscard]] SupermultipletState supermultiplet_state(const FockSpec& spec, int k, Complex alpha,
                                                       Complex beta);

/// |⟨ψ|Jψ⟩|. Equals the concurrence 2|αβ| on supermultiplet states; for other
/// states it is reported as-is with no claim about its meaning.
[[nodiscard]] double concurrence_via_modular(const AntiLinearOp& j, const PureState& state);

/// Reduced density of the spin factor, tracing out both Fock modes.
class SpinDensity {
 public:
  /// Validates hermiticity, unit trace and positivity to 1e-12.
  explicit SpinDensity(const Eigen::Matrix2cd& rho);

  [[nodiscard]] const Eigen::Matrix2cd& matrix() const noexcept { return rho_; }
  [[nodiscard]] double determinant() const;

 private:
  Eigen::Matrix2cd rho_;
};

[[nodiscard]] SpinDensity spin_reduced_density(const PureState& state);

/// 2·sqrt(det ρ_spin): pure-state concurrence of the qubit against both modes.
[[nodiscard]] double concurrence_wootters(const PureState& state);

/// Binary entropy in bits, H(0) = H(1) = 0.
[[nodiscard]] double binary_entropy(double x);

/// H_bin((1 + sqrt(1 − c²)) / 2) for c in [0, 1].
[[nodiscard]] double entanglement_of_formation(double c);

}  // namespace susymod
