#include "susymod/linalg.hpp"
#include "susymod/models.hpp"
#include "susymod/modular.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace susymod;

namespace {

Vector basis_vec(const FockSpec& spec, BasisLabel l) { return PureState::basis(spec, l).amplitudes(); }

}  // namespace

TEST_CASE("Dirac zero modes") {
  const FockSpec spec(8, 8);
  const auto h = [&](Valley v, Side s) { return dirac_hamiltonian(spec, v, s).hamiltonian; };
  for (int spectator : {0, 3, 7}) {
    CHECK(h(Valley::Plus, Side::A).apply(basis_vec(spec, {0, spectator, Spin::Up})).norm() == 0.0);
    CHECK(h(Valley::Minus, Side::A).apply(basis_vec(spec, {0, spectator, Spin::Down})).norm() == 0.0);
    CHECK(h(Valley::Plus, Side::B).apply(basis_vec(spec, {spectator, 0, Spin::Up})).norm() == 0.0);
    CHECK(h(Valley::Minus, Side::B).apply(basis_vec(spec, {spectator, 0, Spin::Down})).norm() == 0.0);
  }
}

TEST_CASE("Dirac a+ eigenvectors pair |n, up> with |n-1, down>") {
  const FockSpec spec(10, 4);
  const double w = 1.7;
  const LinearOp h = dirac_hamiltonian(spec, Valley::Plus, Side::A, w).hamiltonian;
  for (int n = 1; n < 10; ++n) {
    for (int sign : {1, -1}) {
      const Vector v = (basis_vec(spec, {n, 2, Spin::Up}) + sign * basis_vec(spec, {n - 1, 2, Spin::Down})) /
                       std::sqrt(2.0);
      CHECK((h.apply(v) - sign * w * std::sqrt(static_cast<double>(n)) * v).norm() < 1e-12);
    }
  }
}

TEST_CASE("Dirac Hamiltonians are Hermitian and block off-diagonal") {
  const FockSpec spec(6, 6);
  for (Valley v : {Valley::Plus, Valley::Minus}) {
    for (Side s : {Side::A, Side::B}) {
      const Matrix m = dirac_hamiltonian(spec, v, s, 2.0).hamiltonian.matrix();
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
      const LinearOp sz = pauli(spec, Pauli::Z);
      // anticommutes with σ_z
      CHECK(anticommutator(LinearOp(spec, m), sz).matrix().cwiseAbs().maxCoeff() == 0.0);
    }
  }
  CHECK_THROWS_AS((void)dirac_hamiltonian(spec, Valley::Plus, Side::A, 0.0), std::domain_error);
}

TEST_CASE("closed-form Dirac spectrum") {
  const auto e = dirac_spectrum(2, 2.0);
  REQUIRE(e.size() == 5);
  CHECK(e[0] == doctest::Approx(-2.0 * std::sqrt(2.0)));
  CHECK(e[2] == 0.0);
  CHECK(e[3] == doctest::Approx(2.0));
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(dirac_frequency(1.0, std::sqrt(2.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)dirac_frequency(1.0, 0.0), std::domain_error);
}

TEST_CASE("eigensolve oracle: Dirac spectra of all four Hamiltonians") {
  const FockSpec spec = default_spec();
  const int margin = 2;
  const int interior = spec.min_cut() - margin;
  const double w = 1.3;
  const auto closed = dirac_spectrum(interior - 1, w);
  for (Valley v : {Valley::Plus, Valley::Minus}) {
    for (Side s : {Side::A, Side::B}) {
      const Matrix h = dirac_hamiltonian(spec, v, s, w).hamiltonian.matrix();
      const Spectator fixed = s == Side::A ? Spectator::M : Spectator::N;
      const auto idx = spectator_block_indices(spec, margin, fixed, 5);
      const Eigen::VectorXd ev = hermitian_eigenvalues(restrict_to(h, idx));
      // every closed-form level appears among the block eigenvalues
      for (double target : closed) {
        double best = 1e300;
        for (double x : ev) best = std::min(best, std::abs(x - target));
        CAPTURE(target);
        CHECK(best < 1e-10);
      }
    }
  }
}

TEST_CASE("nonlinear SUSY suite passes at the defaults") {
  const VerificationReport r = verify_nonlinear_susy(default_spec(), 2, 1e-10, 1.0);
  CHECK(r.entries().size() == 4);
  for (const auto& e : r.entries()) {
    CAPTURE(e.check_id);
    CHECK(e.pass);
  }
  CHECK(r.overall_pass());
  const VerificationReport scaled = verify_nonlinear_susy(FockSpec(12, 12), 2, 1e-10, 2.5);
  CHECK(scaled.overall_pass());
  CHECK_THROWS_AS((void)verify_nonlinear_susy(default_spec(), 1, 1e-10), std::domain_error);
}

TEST_CASE("Jaynes-Cummings closed-form spectrum") {
  const auto levels = jc_susy_spectrum(JcVariant::JcB, 3, 1.0, 0.1);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].e_plus == -0.5);
  CHECK(levels[1].e_plus == doctest::Approx(0.6));
  CHECK(levels[1].e_minus == doctest::Approx(0.4));
  CHECK(levels[3].e_minus == doctest::Approx(2.5 - 0.1 * std::sqrt(3.0)));
  CHECK_THROWS_AS((void)jaynes_cummings(FockSpec(4, 4), JcVariant::JcB, 0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS((void)jaynes_cummings(FockSpec(4, 4), JcVariant::JcB, 1.0, -0.1), std::domain_error);
}

TEST_CASE("dressed states are eigenvectors with the closed-form energies") {
  const FockSpec spec = default_spec();
  for (JcVariant variant : {JcVariant::JcB, JcVariant::AjcA}) {
    for (double g : {0.0, 0.1, 0.37}) {
      const double omega = 1.2;
      const JaynesCummingsModel model = jaynes_cummings(spec, variant, omega, g);
      const auto levels = jc_susy_spectrum(variant, 12, omega, g);
      for (int l = 1; l <= 12; ++l) {
        for (int sign : {1, -1}) {
          const Vector v = jc_dressed_state(spec, variant, l, sign, 4).amplitudes();
          const double e = sign > 0 ? levels[l].e_plus : levels[l].e_minus;
          CAPTURE(l);
          CHECK((model.hamiltonian.apply(v) - e * v).norm() < 1e-12);
          CHECK((model.susy_form.apply(v) - e * v).norm() < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("J maps the JC dressed states onto the AJC dressed states") {
  const FockSpec spec(12, 12);
  const AntiLinearOp j = modular_conjugation(spec);
  for (int l = 1; l < 10; ++l) {
    const Vector jc = jc_dressed_state(spec, JcVariant::JcB, l, 1, 3).amplitudes();
    const Vector ajc = jc_dressed_state(spec, JcVariant::AjcA, l, 1, 3).amplitudes();
    // J|3, l−1, up⟩ = |l−1, 3, down⟩ and J|3, l, down⟩ = |l, 3, up⟩
    CHECK((j.apply(jc) - ajc).norm() < 1e-15);
  }
  CHECK_THROWS_AS((void)jc_dressed_state(spec, JcVariant::JcB, 0, 1, 0), std::domain_error);
  CHECK_THROWS_AS((void)jc_dressed_state(spec, JcVariant::JcB, 1, 2, 0), std::domain_error);
}

TEST_CASE("JC mapping suite passes") {
  for (double g : {0.0, 0.1, 0.8}) {
    const VerificationReport r = verify_jc_mapping(default_spec(), 2, 1e-10, 1.0, g, 1.0);
    for (const auto& e : r.entries()) {
      CAPTURE(e.check_id);
      CHECK(e.pass);
    }
    CHECK(r.entries().size() == 8);
  }
  CHECK_THROWS_AS((void)verify_jc_mapping(FockSpec(8, 10), 2, 1e-10, 1.0, 0.1), std::domain_error);
}
