#include "susymod/models.hpp"

#include "susymod/linalg.hpp"
#include "susymod/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace susymod {

const char* to_string(Valley valley) noexcept { return valley == Valley::Plus ? "+" : "-"; }

const char* to_string(JcVariant variant) noexcept {
  return variant == JcVariant::JcB ? "jc_b" : "ajc_a";
}

namespace {

// Block [[0, upper], [lower, 0]] in spin space: upper ⊗ σ+ + lower ⊗ σ−.
LinearOp spin_block(const LinearOp& upper, const LinearOp& lower) {
  const FockSpec& spec = upper.spec();
  return upper * pauli(spec, Pauli::Plus) + lower * pauli(spec, Pauli::Minus);
}

std::string dirac_tag(Valley valley, Side side) {
  return std::string(side == Side::A ? "a" : "b") + (valley == Valley::Plus ? "+" : "-");
}

}  // namespace

DiracModel dirac_hamiltonian(const FockSpec& spec, Valley valley, Side side, double omega_d) {
  if (!(omega_d > 0.0)) throw std::domain_error("dirac_hamiltonian: omega_d must be > 0");
  const LinearOp lower = side == Side::A ? ladder_a(spec) : ladder_b(spec);
  const LinearOp raise = side == Side::A ? ladder_a_dag(spec) : ladder_b_dag(spec);
  LinearOp h = valley == Valley::Plus ? spin_block(raise, lower) : spin_block(lower, raise);
  return {valley, side, omega_d, omega_d * h};
}

double dirac_frequency(double fermi_velocity, double magnetic_length) {
  if (!(magnetic_length > 0.0)) throw std::domain_error("magnetic length must be > 0");
  return std::sqrt(2.0) * fermi_velocity / magnetic_length;
}

std::vector<double> dirac_spectrum(int n_levels, double omega_d) {
  if (n_levels < 1) throw std::domain_error("dirac_spectrum: n_levels must be >= 1");
  std::vector<double> out;
  out.reserve(2 * static_cast<std::size_t>(n_levels) + 1);
  for (int n = n_levels; n >= 1; --n) out.push_back(-omega_d * std::sqrt(static_cast<double>(n)));
  out.push_back(0.0);
  for (int n = 1; n <= n_levels; ++n) out.push_back(omega_d * std::sqrt(static_cast<double>(n)));
  return out;
}

VerificationReport verify_nonlinear_susy(const FockSpec& spec, int margin, double tol,
                                         double omega_d) {
  if (margin < 2) throw std::domain_error("verify_nonlinear_susy: margin must be >= 2");
  (void)interior_indices(spec, margin);

  VerificationReport report("nonlinear-susy");
  const double w2 = omega_d * omega_d;
  for (Side side : {Side::A, Side::B}) {
    const SusySystem sys = build_system(spec, side);
    const LinearOp lower = side == Side::A ? ladder_a(spec) : ladder_b(spec);
    // The valley whose block form equals the side's Q_SUSY squares to H; the
    // other squares to the anticommutator of the block-transposed charges.
    const Valley native = side == Side::A ? Valley::Plus : Valley::Minus;
    const Valley swapped = side == Side::A ? Valley::Minus : Valley::Plus;
    const std::string s = side == Side::A ? "a" : "b";

    const LinearOp h_native = dirac_hamiltonian(spec, native, side, omega_d).hamiltonian;
    report.add("nonlinear_susy." + dirac_tag(native, side) + ".square_eq_h",
               "(H_D)²/(ħω_D)² = H^" + s + "/ħω",
               interior_norm(h_native * h_native - w2 * sys.hamiltonian, margin), tol);

    const LinearOp h_swapped = dirac_hamiltonian(spec, swapped, side, omega_d).hamiltonian;
    // Block-transposed supercharge: a ⊗ σ− becomes a ⊗ σ+, b ⊗ σ+ becomes b ⊗ σ−.
    const LinearOp q_t = lower * pauli(spec, side == Side::A ? Pauli::Plus : Pauli::Minus);
    const LinearOp q_t_dag = q_t.adjoint();
    report.add("nonlinear_susy." + dirac_tag(swapped, side) + ".square_eq_transposed_anticomm",
               "(H_D)²/(ħω_D)² = {Q^T, Q^†T} (" + s + " side)",
               interior_norm(h_swapped * h_swapped - w2 * anticommutator(q_t, q_t_dag), margin),
               tol);
  }
  return report;
}

JaynesCummingsModel jaynes_cummings(const FockSpec& spec, JcVariant variant, double omega,
                                    double g) {
  if (!(omega > 0.0) || !(g >= 0.0)) {
    throw std::domain_error("jaynes_cummings: need omega > 0 and g >= 0");
  }
  const LinearOp sz = pauli(spec, Pauli::Z);
  const LinearOp sp = pauli(spec, Pauli::Plus);
  const LinearOp sm = pauli(spec, Pauli::Minus);
  const Side side = variant == JcVariant::JcB ? Side::B : Side::A;

  LinearOp direct = LinearOp::zero(spec);
  if (variant == JcVariant::JcB) {
    const LinearOp b = ladder_b(spec);
    const LinearOp bd = ladder_b_dag(spec);
    direct = omega * (bd * b + 0.5 * sz) + g * (b * sp + bd * sm);
  } else {
    const LinearOp a = ladder_a(spec);
    const LinearOp ad = ladder_a_dag(spec);
    direct = omega * (ad * a - 0.5 * sz) + g * (a * sm + ad * sp);
  }

  const SusySystem sys = build_system(spec, side);
  LinearOp susy = omega * (sys.q_susy * sys.q_susy) + g * sys.q_susy -
                  (0.5 * omega) * LinearOp::identity(spec);
  return {variant, omega, g, std::move(direct), std::move(susy)};
}

std::vector<JcLevel> jc_susy_spectrum(JcVariant /*variant*/, int k_max, double omega, double g) {
  if (k_max < 1) throw std::domain_error("jc_susy_spectrum: k_max must be >= 1");
  std::vector<JcLevel> out;
  out.push_back({0, -0.5 * omega, -0.5 * omega});
  for (int l = 1; l <= k_max; ++l) {
    const double base = omega * l - 0.5 * omega;
    const double split = g * std::sqrt(static_cast<double>(l));
    out.push_back({l, base + split, base - split});
  }
  return out;
}

PureState jc_dressed_state(const FockSpec& spec, JcVariant variant, int level, int sign,
                           int spectator) {
  if (sign != 1 && sign != -1) throw std::domain_error("jc_dressed_state: sign must be +1 or -1");
  if (level < 1) throw std::domain_error("jc_dressed_state: level must be >= 1");
  Vector v = Vector::Zero(spec.total_dim());
  const double r = 1.0 / std::sqrt(2.0);
  if (variant == JcVariant::JcB) {
    v(basis_index(spec, {spectator, level - 1, Spin::Up})) = r;
    v(basis_index(spec, {spectator, level, Spin::Down})) = sign * r;
  } else {
    v(basis_index(spec, {level, spectator, Spin::Up})) = r;
    v(basis_index(spec, {level - 1, spectator, Spin::Down})) = sign * r;
  }
  return PureState(spec, std::move(v));
}

VerificationReport verify_jc_mapping(const FockSpec& spec, int margin, double tol, double omega,
                                     double g, double omega_d) {
  (void)interior_indices(spec, margin);
  const AntiLinearOp j = modular_conjugation(spec);
  constexpr double kSwapTol = 1e-13;

  VerificationReport report("jc-mapping");
  const JaynesCummingsModel jc = jaynes_cummings(spec, JcVariant::JcB, omega, g);
  const JaynesCummingsModel ajc = jaynes_cummings(spec, JcVariant::AjcA, omega, g);

  report.add("jc.j_hjc_j_eq_hajc", "J H_JC^b J = H_AJC^a",
             spectral_norm((conjugate_by_j(j, jc.hamiltonian) - ajc.hamiltonian).matrix()),
             kSwapTol);
  report.add("jc.j_hajc_j_eq_hjc", "J H_AJC^a J = H_JC^b",
             spectral_norm((conjugate_by_j(j, ajc.hamiltonian) - jc.hamiltonian).matrix()),
             kSwapTol);
  report.add("jc.jc_direct_eq_susy_form", "H_JC^b = ħω(Q^b_SUSY)² + ħg Q^b_SUSY − ħω/2",
             interior_norm(jc.hamiltonian - jc.susy_form, margin), tol);
  report.add("jc.ajc_direct_eq_susy_form", "H_AJC^a = ħω(Q^a_SUSY)² + ħg Q^a_SUSY − ħω/2",
             interior_norm(ajc.hamiltonian - ajc.susy_form, margin), tol);
  report.add("jc.jc_hermitian", "H_JC^b Hermitian",
             spectral_norm(jc.hamiltonian.matrix() - jc.hamiltonian.matrix().adjoint()), kSwapTol);
  report.add("jc.ajc_hermitian", "H_AJC^a Hermitian",
             spectral_norm(ajc.hamiltonian.matrix() - ajc.hamiltonian.matrix().adjoint()),
             kSwapTol);

  const auto dirac = [&](Valley v, Side s) { return dirac_hamiltonian(spec, v, s, omega_d).hamiltonian; };
  report.add("dirac.j_ha_plus_j_eq_hb_minus", "J H_D^{a+} J = H_D^{b−}",
             spectral_norm((conjugate_by_j(j, dirac(Valley::Plus, Side::A)) -
                            dirac(Valley::Minus, Side::B)).matrix()),
             kSwapTol);
  report.add("dirac.j_ha_minus_j_eq_hb_plus", "J H_D^{a−} J = H_D^{b+}",
             spectral_norm((conjugate_by_j(j, dirac(Valley::Minus, Side::A)) -
                            dirac(Valley::Plus, Side::B)).matrix()),
             kSwapTol);
  return report;
}

}  // namespace susymod
