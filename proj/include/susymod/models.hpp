#pragma once

// Applied systems built from the two supercharge algebras: massless Dirac
// fermions in a field at both valleys and both field orientations, and the
// resonant Jaynes–Cummings / anti-Jaynes–Cummings pair.

#include "susymod/fock.hpp"
#include "susymod/report.hpp"
#include "susymod/susy.hpp"

#include <vector>

namespace susymod {

enum class Valley { Plus, Minus };

[[nodiscard]] const char* to_string(Valley valley) noexcept;

struct DiracModel {
  Valley valley;
  Side side;
  double omega_d;
  LinearOp hamiltonian;
};

/// Spin-block forms, rows/columns ordered (up, down):
///   a+ : ℏω_D [[0, a†], [a, 0]]     a− : ℏω_D [[0, a], [a†, 0]]
///   b+ : ℏω_D [[0, b†], [b, 0]]     b− : ℏω_D [[0, b], [b†, 0]]
[[nodiscard]] DiracModel dirac_hamiltonian(const FockSpec& spec, Valley valley, Side side,
                                           double omega_d = 1.0);

/// ℏω_D = √2 ℏ v_F / l_m (ℏ = 1).
[[nodiscard]] double dirac_frequency(double fermi_velocity, double magnetic_length);

/// {±ω_D√n : n = 1..n_levels} ∪ {0}, ascending.
[[nodiscard]] std::vector<double> dirac_spectrum(int n_levels, double omega_d = 1.0);

/// (H_D)² against ω_D² times the matching SUSY anticommutator, for all four
/// Dirac Hamiltonians, on the interior subspace.
[[nodiscard]] VerificationReport verify_nonlinear_susy(const FockSpec& spec, int margin, double tol,
                                                       double omega_d = 1.0);

enum class JcVariant { JcB, AjcA };

[[nodiscard]] const char* to_string(JcVariant variant) noexcept;

struct JaynesCummingsModel {
  JcVariant variant;
  double omega;
  double g;
  LinearOp hamiltonian;  // direct construction from ladder and Pauli operators
  LinearOp susy_form;    // ℏω(Q_SUSY)² + ℏg Q_SUSY − ℏω/2 of the matching side
};

/// JC_b : ω(b†b ⊗ I + I ⊗ σ_z/2) + g(b ⊗ σ+ + b† ⊗ σ−)
/// AJC_a: ω(a†a ⊗ I − I ⊗ σ_z/2) + g(a ⊗ σ− + a† ⊗ σ+)
[[nodiscard]] JaynesCummingsModel jaynes_cummings(const FockSpec& spec, JcVariant variant,
                                                  double omega, double g);

struct JcLevel {
  int level;
  double e_plus;
  double e_minus;
};

/// Row l = 0 is the ground value −ω/2 (both columns); rows l = 1..k_max carry
/// ωl ± g√l − ω/2. Identical for both variants at resonance.
[[nodiscard]] std::vector<JcLevel> jc_susy_spectrum(JcVariant variant, int k_max, double omega,
                                                    double g);

/// Dressed state (|l−1⟩ ± |l⟩)/√2 pattern of the given variant at spectator
/// index `spectator`: JC_b uses |s, l−1, up⟩ ± |s, l, down⟩, AJC_a uses
/// |l, s, up⟩ ± |l−1, s, down⟩.
[[nodiscard]] PureState jc_dressed_state(const FockSpec& spec, JcVariant variant, int level,
                                         int sign, int spectator);

/// J-mapping and construction-route checks for the applied models: J H_JC^b J
/// = H_AJC^a, direct vs SUSY-form builds, Dirac {a+}↔{b−}, {a−}↔{b+}.
[[nodiscard]] VerificationReport verify_jc_mapping(const FockSpec& spec, int margin, double tol,
                                                   double omega, double g, double omega_d = 1.0);

}  // namespace susymod
