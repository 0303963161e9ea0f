#pragma once

// Supercharges and SUSY Hamiltonians of the two Landau systems.
//
// Side A (field along +z): Q = a ⊗ σ-,  H/ℏω = (a†a + 1/2) ⊗ I − I ⊗ σ_z/2.
// Side B (field along −z): Q = b ⊗ σ+,  H/ℏω = (b†b + 1/2) ⊗ I + I ⊗ σ_z/2.
//
// H is built from its closed diagonal form. It agrees with ℏω·{Q, Q†} on the
// interior subspace; at the top occupation the truncated a a† (resp. b b†)
// vanishes while the closed form does not.

#include "susymod/fock.hpp"
#include "susymod/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace susymod {

enum class Side { A, B };

[[nodiscard]] const char* to_string(Side side) noexcept;

struct SusySystem {
  Side side;
  FockSpec spec;
  double hbar_omega;
  LinearOp q;
  LinearOp q_dag;
  LinearOp hamiltonian;
  LinearOp q_susy;  // q + q_dag
};

[[nodiscard]] SusySystem build_system(const FockSpec& spec, Side side, double hbar_omega = 1.0);

/// Closed-form diagonal entry of H/ℏω on a basis state.
[[nodiscard]] double landau_energy(Side side, const BasisLabel& label) noexcept;

/// One degenerate member of a Landau level: the occupation of the side's own
/// mode plus spin. The other mode's index is free (infinitely degenerate).
struct LevelLabel {
  Side side;
  int occupation;
  Spin spin;

  friend bool operator==(const LevelLabel&, const LevelLabel&) = default;
};

[[nodiscard]] std::string to_string(const LevelLabel& label);

struct SpectrumEntry {
  double energy;  // units of ℏω
  std::vector<LevelLabel> labels;
};

/// E = k for k = 0..k_max. Side A: k=0 ↔ (n=0, up); k ≥ 1 ↔ {(n=k, up), (n=k−1, down)}.
/// Side B: k=0 ↔ (m=0, down); k ≥ 1 ↔ {(m=k−1, up), (m=k, down)}.
[[nodiscard]] std::vector<SpectrumEntry> landau_spectrum(Side side, int k_max);

/// Degenerate pair with energy k. Side A: (|k, s, up⟩, |k−1, s, down⟩);
/// side B: (|s, k−1, up⟩, |s, k, down⟩), s being the spectator occupation.
[[nodiscard]] std::pair<PureState, PureState> supermultiplet(Side side, const FockSpec& spec,
                                                            int k, int spectator);

/// Residuals of the combined superalgebra of both systems on the interior
/// subspace of the given margin (nilpotency checks use the full space).
[[nodiscard]] VerificationReport verify_superalgebra(const SusySystem& a_system,
                                                     const SusySystem& b_system, int margin,
                                                     double tol);

}  // namespace susymod
