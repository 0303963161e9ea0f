#include "susymod/modular.hpp"

#include "susymod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace susymod {

AntiLinearOp::AntiLinearOp(FockSpec spec, Matrix linear_part)
    : spec_(spec), linear_part_(std::move(linear_part)) {
  if (linear_part_.rows() != spec_.total_dim() || linear_part_.cols() != spec_.total_dim()) {
    throw std::domain_error("AntiLinearOp: linear part shape does not match total_dim");
  }
}

Vector AntiLinearOp::apply(const Vector& v) const {
  if (v.size() != spec_.total_dim()) throw std::domain_error("AntiLinearOp::apply: size mismatch");
  return linear_part_ * v.conjugate();
}

AntiLinearOp AntiLinearOp::then_after(const LinearOp& a) const {
  require_same_spec(spec_, a.spec());
  return AntiLinearOp(spec_, linear_part_ * a.matrix().conjugate());
}

AntiLinearOp AntiLinearOp::before(const LinearOp& a) const {
  require_same_spec(spec_, a.spec());
  return AntiLinearOp(spec_, a.matrix() * linear_part_);
}

LinearOp AntiLinearOp::compose(const AntiLinearOp& other) const {
  require_same_spec(spec_, other.spec_);
  return LinearOp(spec_, linear_part_ * other.linear_part_.conjugate());
}

AntiLinearOp modular_conjugation(const FockSpec& spec) {
  if (!spec.is_square()) {
    throw std::domain_error("modular_conjugation: needs na_cut == nb_cut (got " +
                            std::to_string(spec.na_cut()) + ", " + std::to_string(spec.nb_cut()) +
                            ")");
  }
  const Eigen::Index dim = spec.total_dim();
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const BasisLabel l = basis_label(spec, col);
    p(basis_index(spec, {l.m, l.n, flip(l.s)}), col) = 1.0;
  }
  return AntiLinearOp(spec, std::move(p));
}

LinearOp conjugate_by_j(const AntiLinearOp& j, const LinearOp& a) {
  require_same_spec(j.spec(), a.spec());
  const Matrix& p = j.linear_part();
  return LinearOp(a.spec(), p * a.matrix().conjugate() * p.conjugate());
}

int modular_label(const BasisLabel& label) noexcept { return label.n - label.m - sigma_z(label.s); }

double omega_raw_prefactor(double beta) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be > 0");
  return std::sqrt(1.0 - std::exp(-beta));
}

PureState omega_vector(const FockSpec& spec, double beta) {
  if (!spec.is_square()) throw std::domain_error("omega_vector: needs na_cut == nb_cut");
  const double prefactor = omega_raw_prefactor(beta);
  Vector raw = Vector::Zero(spec.total_dim());
  for (int n = 0; n < spec.na_cut(); ++n) {
    const double w = prefactor * std::exp(-0.5 * beta * n);
    raw(basis_index(spec, {n, n, Spin::Up})) = w;
    raw(basis_index(spec, {n, n, Spin::Down})) = w;
  }
  return PureState::normalized(spec, std::move(raw));
}

Eigen::VectorXd modular_delta_diagonal(const FockSpec& spec, double beta, double power) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be > 0");
  Eigen::VectorXd d(spec.total_dim());
  for (Eigen::Index i = 0; i < spec.total_dim(); ++i) {
    d(i) = std::exp(-power * beta * modular_label(basis_label(spec, i)));
  }
  return d;
}

LinearOp modular_delta(const FockSpec& spec, double beta) {
  return modular_delta_power(spec, beta, 1.0);
}

LinearOp modular_delta_power(const FockSpec& spec, double beta, double power) {
  return LinearOp::diagonal(spec, modular_delta_diagonal(spec, beta, power).cast<Complex>());
}

LinearOp modular_flow(const FockSpec& spec, double beta, double t) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be > 0");
  Vector d(spec.total_dim());
  for (Eigen::Index i = 0; i < spec.total_dim(); ++i) {
    d(i) = std::polar(1.0, -beta * t * modular_label(basis_label(spec, i)));
  }
  return LinearOp::diagonal(spec, d);
}

ModularData make_modular_data(const FockSpec& spec, double beta) {
  AntiLinearOp j = modular_conjugation(spec);
  AntiLinearOp s = j.then_after(modular_delta_power(spec, beta, 0.5));
  return {beta,
          std::move(j),
          modular_delta(spec, beta),
          omega_vector(spec, beta),
          std::move(s),
          std::exp(-beta * spec.min_cut()),
          omega_raw_prefactor(beta)};
}

AntiLinearOp tomita_s(const ModularData& data) {
  const LinearOp half = modular_delta_power(data.j.spec(), data.beta, 0.5);
  return data.j.then_after(half);
}

double tail_tolerance(const ModularData& data, double floor) {
  return std::max(floor, 10.0 * data.truncation_tail);
}

namespace {

Vector random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

}  // namespace

double anti_unitarity_residual(const AntiLinearOp& j, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index dim = j.spec().total_dim();
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Vector xi = random_state(rng, dim);
    const Vector psi = random_state(rng, dim);
    const Complex lhs = j.apply(xi).dot(j.apply(psi));  // ⟨Jξ|Jψ⟩
    const Complex rhs = psi.dot(xi);                    // ⟨ψ|ξ⟩
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

VerificationReport verify_modular(const ModularData& data, const SusySystem& a_system,
                                  const SusySystem& b_system, int margin, double tol,
                                  std::uint64_t seed) {
  const FockSpec& spec = data.j.spec();
  require_same_spec(spec, a_system.spec);
  require_same_spec(spec, b_system.spec);
  if (a_system.side != Side::A || b_system.side != Side::B) {
    throw std::domain_error("verify_modular: expects an A system and a B system");
  }
  (void)interior_indices(spec, margin);  // validates the margin

  constexpr double kExact = 0.0;
  constexpr double kSwapTol = 1e-13;
  constexpr double kTightTol = 1e-12;
  const double tail_tol = tail_tolerance(data, tol);

  VerificationReport report("modular");
  const AntiLinearOp& j = data.j;
  const Vector& omega = data.omega.amplitudes();

  report.add("modular.j_squared_identity", "J² = I",
             spectral_norm(j.compose(j).matrix() - Matrix::Identity(spec.total_dim(), spec.total_dim())),
             kExact);
  report.add("modular.j_anti_unitary", "⟨Jξ|Jψ⟩ = ⟨ψ|ξ⟩ on 100 seeded pairs",
             anti_unitarity_residual(j, 100, seed), kTightTol);

  const auto swap = [&](const LinearOp& from, const LinearOp& to) {
    return spectral_norm((conjugate_by_j(j, from) - to).matrix());
  };
  report.add("modular.j_qa_j_eq_qb", "J Q^a J = Q^b", swap(a_system.q, b_system.q), kSwapTol);
  report.add("modular.j_qadag_j_eq_qbdag", "J Q^a† J = Q^b†", swap(a_system.q_dag, b_system.q_dag),
             kSwapTol);
  report.add("modular.j_ha_j_eq_hb", "J H^a J = H^b",
             swap(a_system.hamiltonian, b_system.hamiltonian), kSwapTol);
  report.add("modular.j_hb_j_eq_ha", "J H^b J = H^a",
             swap(b_system.hamiltonian, a_system.hamiltonian), kSwapTol);

  report.add("modular.j_omega_eq_omega", "J|Ω⟩ = |Ω⟩", (j.apply(omega) - omega).norm(), kExact);
  report.add("modular.delta_omega_eq_omega", "Δ|Ω⟩ = |Ω⟩",
             (data.delta.apply(omega) - omega).norm(), tail_tol);

  const LinearOp half = modular_delta_power(spec, data.beta, 0.5);
  const LinearOp inv_half = modular_delta_power(spec, data.beta, -0.5);
  report.add("modular.j_delta_half_j_eq_inverse", "J Δ^{1/2} J = Δ^{-1/2}",
             spectral_norm((conjugate_by_j(j, half) - inv_half).matrix()), kTightTol);

  const AntiLinearOp s = tomita_s(data);
  const auto s_action = [&](const LinearOp& gen, const LinearOp& image) {
    return (s.apply(gen.apply(omega)) - image.apply(omega)).norm();
  };
  report.add("modular.s_qa_omega_eq_qb_omega", "S Q^a|Ω⟩ = Q^b|Ω⟩",
             s_action(a_system.q, b_system.q), tail_tol);
  report.add("modular.s_qadag_omega_eq_qbdag_omega", "S Q^a†|Ω⟩ = Q^b†|Ω⟩",
             s_action(a_system.q_dag, b_system.q_dag), tail_tol);
  report.add("modular.s_qb_omega_eq_qa_omega", "S Q^b|Ω⟩ = Q^a|Ω⟩",
             s_action(b_system.q, a_system.q), tail_tol);
  report.add("modular.s_qbdag_omega_eq_qadag_omega", "S Q^b†|Ω⟩ = Q^a†|Ω⟩",
             s_action(b_system.q_dag, a_system.q_dag), tail_tol);

  constexpr double kFlowTime = 1.0;
  const LinearOp flow = modular_flow(spec, data.beta, kFlowTime);
  const LinearOp flow_back = modular_flow(spec, data.beta, -kFlowTime);
  const Complex phase_a = std::polar(1.0, -data.beta * kFlowTime);
  report.add("modular.flow_qa_phase", "Δ^{it} Q^a Δ^{-it} = e^{-iβt} Q^a",
             spectral_norm((flow * a_system.q * flow_back - phase_a * a_system.q).matrix()),
             kTightTol);
  report.add("modular.flow_qb_phase", "Δ^{it} Q^b Δ^{-it} = e^{+iβt} Q^b",
             spectral_norm((flow * b_system.q * flow_back - std::conj(phase_a) * b_system.q).matrix()),
             kTightTol);
  return report;
}

}  // namespace susymod
