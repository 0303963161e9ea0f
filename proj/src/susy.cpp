#include "susymod/susy.hpp"

#include "susymod/linalg.hpp"

#include <stdexcept>

namespace susymod {

const char* to_string(Side side) noexcept { return side == Side::A ? "A" : "B"; }

double landau_energy(Side side, const BasisLabel& label) noexcept {
  const double sz = sigma_z(label.s);
  return side == Side::A ? label.n + 0.5 - 0.5 * sz : label.m + 0.5 + 0.5 * sz;
}

SusySystem build_system(const FockSpec& spec, Side side, double hbar_omega) {
  const LinearOp q = side == Side::A ? ladder_a(spec) * pauli(spec, Pauli::Minus)
                                     : ladder_b(spec) * pauli(spec, Pauli::Plus);
  LinearOp q_dag = q.adjoint();

  Vector diag(spec.total_dim());
  for (Eigen::Index i = 0; i < spec.total_dim(); ++i) {
    diag(i) = hbar_omega * landau_energy(side, basis_label(spec, i));
  }
  LinearOp h = LinearOp::diagonal(spec, diag);
  LinearOp q_susy = q + q_dag;
  return {side, spec, hbar_omega, q, std::move(q_dag), std::move(h), std::move(q_susy)};
}

std::string to_string(const LevelLabel& label) {
  const std::string own = label.side == Side::A ? "n" : "m";
  const std::string free = label.side == Side::A ? "m" : "n";
  return own + "=" + std::to_string(label.occupation) + "," + free + "=*," +
         to_string(label.spin);
}

std::vector<SpectrumEntry> landau_spectrum(Side side, int k_max) {
  if (k_max < 1) throw std::domain_error("landau_spectrum: k_max must be >= 1");
  std::vector<SpectrumEntry> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  if (side == Side::A) {
    out.push_back({0.0, {{Side::A, 0, Spin::Up}}});
    for (int k = 1; k <= k_max; ++k) {
      out.push_back({static_cast<double>(k), {{Side::A, k, Spin::Up}, {Side::A, k - 1, Spin::Down}}});
    }
  } else {
    out.push_back({0.0, {{Side::B, 0, Spin::Down}}});
    for (int k = 1; k <= k_max; ++k) {
      out.push_back({static_cast<double>(k), {{Side::B, k - 1, Spin::Up}, {Side::B, k, Spin::Down}}});
    }
  }
  return out;
}

std::pair<PureState, PureState> supermultiplet(Side side, const FockSpec& spec, int k,
                                               int spectator) {
  const int own_cut = side == Side::A ? spec.na_cut() : spec.nb_cut();
  const int other_cut = side == Side::A ? spec.nb_cut() : spec.na_cut();
  if (k < 1 || k >= own_cut) {
    throw std::domain_error("supermultiplet: level k=" + std::to_string(k) +
                            " outside [1, " + std::to_string(own_cut) + ")");
  }
  if (spectator < 0 || spectator >= other_cut) {
    throw std::domain_error("supermultiplet: spectator index outside cutoff");
  }
  if (side == Side::A) {
    return {PureState::basis(spec, {k, spectator, Spin::Up}),
            PureState::basis(spec, {k - 1, spectator, Spin::Down})};
  }
  return {PureState::basis(spec, {spectator, k - 1, Spin::Up}),
          PureState::basis(spec, {spectator, k, Spin::Down})};
}

VerificationReport verify_superalgebra(const SusySystem& a_system, const SusySystem& b_system,
                                       int margin, double tol) {
  require_same_spec(a_system.spec, b_system.spec);
  if (a_system.side != Side::A || b_system.side != Side::B) {
    throw std::domain_error("verify_superalgebra: expects an A system and a B system");
  }
  if (margin < 2) throw std::domain_error("verify_superalgebra: margin must be >= 2");

  VerificationReport report("superalgebra");
  for (const SusySystem* sys : {&a_system, &b_system}) {
    const std::string p = sys->side == Side::A ? "susy.a." : "susy.b.";
    const std::string tag = sys->side == Side::A ? "a" : "b";
    const double hw = sys->hbar_omega;
    report.add(p + "h_eq_anticomm_q_qdag", "H^" + tag + " = ħω{Q^" + tag + ", Q^" + tag + "†}",
               interior_norm(sys->hamiltonian - hw * anticommutator(sys->q, sys->q_dag), margin),
               tol);
    report.add(p + "q_nilpotent", "{Q^" + tag + ", Q^" + tag + "} = 0",
               spectral_norm((sys->q * sys->q).matrix()), tol);
    report.add(p + "qdag_nilpotent", "{Q^" + tag + "†, Q^" + tag + "†} = 0",
               spectral_norm((sys->q_dag * sys->q_dag).matrix()), tol);
    report.add(p + "h_commutes_q", "[H^" + tag + ", Q^" + tag + "] = 0",
               interior_norm(commutator(sys->hamiltonian, sys->q), margin), tol);
    report.add(p + "h_commutes_qdag", "[H^" + tag + ", Q^" + tag + "†] = 0",
               interior_norm(commutator(sys->hamiltonian, sys->q_dag), margin), tol);
    report.add(p + "h_eq_qsusy_squared", "H^" + tag + " = ħω(Q^" + tag + "_SUSY)²",
               interior_norm(sys->hamiltonian - hw * (sys->q_susy * sys->q_susy), margin), tol);
  }

  const SusySystem& a = a_system;
  const SusySystem& b = b_system;
  report.add("susy.ab.h_commute", "[H^a, H^b] = 0",
             interior_norm(commutator(a.hamiltonian, b.hamiltonian), margin), tol);
  report.add("susy.ab.anticomm_qa_qb", "{Q^a, Q^b} = 0",
             interior_norm(anticommutator(a.q, b.q), margin), tol);
  report.add("susy.ab.anticomm_qa_qbdag", "{Q^a, Q^b†} = 0",
             interior_norm(anticommutator(a.q, b.q_dag), margin), tol);
  report.add("susy.ab.anticomm_qadag_qb", "{Q^a†, Q^b} = 0",
             interior_norm(anticommutator(a.q_dag, b.q), margin), tol);
  report.add("susy.ab.anticomm_qadag_qbdag", "{Q^a†, Q^b†} = 0",
             interior_norm(anticommutator(a.q_dag, b.q_dag), margin), tol);
  return report;
}

}  // namespace susymod
