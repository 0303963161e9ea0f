#include "susymod/fock.hpp"
#include "susymod/linalg.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace susymod;

namespace {

Vector basis_vec(const FockSpec& spec, BasisLabel l) { return PureState::basis(spec, l).amplitudes(); }

}  // namespace

TEST_CASE("basis_index follows spin-fastest ordering") {
  const FockSpec spec(4, 4);
  CHECK(basis_index(spec, {0, 0, Spin::Up}) == 0);
  CHECK(basis_index(spec, {0, 0, Spin::Down}) == 1);
  CHECK(basis_index(spec, {1, 2, Spin::Up}) == 12);
  CHECK_THROWS_AS((void)basis_index(spec, {4, 0, Spin::Up}), std::domain_error);
  CHECK_THROWS_AS((void)basis_index(spec, {0, -1, Spin::Up}), std::domain_error);
  CHECK_THROWS_AS((void)basis_label(spec, spec.total_dim()), std::domain_error);
}

TEST_CASE("basis_index is a bijection for assorted cutoffs") {
  for (auto [na, nb] : {std::pair{2, 2}, std::pair{3, 5}, std::pair{7, 2}, std::pair{16, 16}}) {
    const FockSpec spec(na, nb);
    CHECK(spec.total_dim() == na * nb * 2);
    for (Eigen::Index i = 0; i < spec.total_dim(); ++i) {
      REQUIRE(basis_index(spec, basis_label(spec, i)) == i);
    }
  }
}

TEST_CASE("FockSpec rejects cutoffs below two") {
  CHECK_THROWS_AS(FockSpec(1, 4), std::domain_error);
  CHECK_THROWS_AS(FockSpec(4, 0), std::domain_error);
  CHECK(default_spec().total_dim() == 512);
}

TEST_CASE("ladder operators act on the occupation labels") {
  const FockSpec spec(6, 5);
  const LinearOp a = ladder_a(spec);
  const LinearOp ad = ladder_a_dag(spec);

  CHECK((a.apply(basis_vec(spec, {1, 0, Spin::Up})) - basis_vec(spec, {0, 0, Spin::Up})).norm() ==
        0.0);
  for (int m = 0; m < 5; ++m) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      CHECK(a.apply(basis_vec(spec, {0, m, s})).norm() == 0.0);
      const Vector v = basis_vec(spec, {3, m, s});
      CHECK((ad * a).apply(v).isApprox(3.0 * v));
    }
  }
  // top-row truncation: a† annihilates the highest occupation
  CHECK(ad.apply(basis_vec(spec, {5, 2, Spin::Down})).norm() == 0.0);
  CHECK(ladder_b_dag(spec).apply(basis_vec(spec, {1, 4, Spin::Up})).norm() == 0.0);

  const Vector bv = ladder_b(spec).apply(basis_vec(spec, {2, 4, Spin::Down}));
  CHECK((bv - 2.0 * basis_vec(spec, {2, 3, Spin::Down})).norm() < 1e-15);
}

TEST_CASE("adjoint consistency of ladder matrices is exact") {
  const FockSpec spec(7, 4);
  CHECK(ladder_a_dag(spec).matrix() == ladder_a(spec).matrix().adjoint());
  CHECK(ladder_b_dag(spec).matrix() == ladder_b(spec).matrix().adjoint());
}

TEST_CASE("ladder chains respect the cutoff") {
  const FockSpec spec(5, 3);
  const Matrix a = ladder_a(spec).matrix();
  Matrix power = Matrix::Identity(spec.total_dim(), spec.total_dim());
  for (int i = 0; i < spec.na_cut(); ++i) power = a * power;
  CHECK(power.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Pauli operators on the spin factor") {
  const FockSpec spec(3, 3);
  const LinearOp sm = pauli(spec, Pauli::Minus);
  const LinearOp sp = pauli(spec, Pauli::Plus);
  const LinearOp sz = pauli(spec, Pauli::Z);

  CHECK(sm.apply(basis_vec(spec, {1, 2, Spin::Up})) == basis_vec(spec, {1, 2, Spin::Down}));
  CHECK(sm.apply(basis_vec(spec, {1, 2, Spin::Down})).norm() == 0.0);
  CHECK(sp.apply(basis_vec(spec, {0, 1, Spin::Down})) == basis_vec(spec, {0, 1, Spin::Up}));
  CHECK(sz.apply(basis_vec(spec, {2, 0, Spin::Down})) == -basis_vec(spec, {2, 0, Spin::Down}));
  CHECK((sm * sm).matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK((sp * sp).matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK(anticommutator(sm, sm).matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("interior projector") {
  const FockSpec spec(4, 4);
  CHECK(interior_projector(spec, 0).matrix() == Matrix::Identity(32, 32));

  const LinearOp p = interior_projector(spec, 2);
  CHECK(p.matrix().trace().real() == doctest::Approx(8.0));
  CHECK(interior_indices(spec, 2).size() == 8);

  for (int margin = 0; margin < 4; ++margin) {
    const Matrix q = interior_projector(spec, margin).matrix();
    CHECK((q * q - q).cwiseAbs().maxCoeff() == 0.0);
    CHECK((q.adjoint() - q).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS((void)interior_projector(spec, 4), std::domain_error);
  CHECK_THROWS_AS((void)interior_projector(FockSpec(6, 3), 3), std::domain_error);
}

TEST_CASE("canonical commutation holds exactly on the interior") {
  for (int cut : {3, 5, 8, 16}) {
    const FockSpec spec(cut, cut);
    const LinearOp ccr_a = commutator(ladder_a(spec), ladder_a_dag(spec)) - LinearOp::identity(spec);
    const LinearOp ccr_b = commutator(ladder_b(spec), ladder_b_dag(spec)) - LinearOp::identity(spec);
    CHECK(interior_norm(ccr_a, 1) < 1e-13);
    CHECK(interior_norm(ccr_b, 1) < 1e-13);
    // the truncation edge is where [a, a†] = 1 breaks
    CHECK(spectral_norm(ccr_a.matrix()) > 1.0);
  }
}

TEST_CASE("a and b operators commute on the full truncated space") {
  const FockSpec spec(6, 9);
  CHECK(spectral_norm(commutator(ladder_a(spec), ladder_b(spec)).matrix()) < 1e-13);
  CHECK(spectral_norm(commutator(ladder_a(spec), ladder_b_dag(spec)).matrix()) < 1e-13);
  CHECK(commutator(ladder_a(spec), ladder_b(spec)).matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("operations on mismatched spaces are rejected") {
  const FockSpec s1(3, 3);
  const FockSpec s2(3, 4);
  CHECK_THROWS_AS((void)commutator(ladder_a(s1), ladder_a(s2)), std::domain_error);
  CHECK_THROWS_AS((void)anticommutator(ladder_a(s1), ladder_b(s2)), std::domain_error);
  CHECK_THROWS_AS((void)(ladder_a(s1) + ladder_a(s2)), std::domain_error);
  CHECK_THROWS_AS(LinearOp(s1, Matrix::Zero(4, 4)), std::domain_error);
}

TEST_CASE("PureState enforces unit norm") {
  const FockSpec spec(2, 2);
  Vector v = Vector::Zero(spec.total_dim());
  v(0) = 2.0;
  CHECK_THROWS_AS(PureState(spec, v), std::domain_error);
  const PureState s = PureState::normalized(spec, v);
  CHECK(s.amplitude({0, 0, Spin::Up}) == Complex(1.0));
  CHECK_THROWS_AS((void)PureState::normalized(spec, Vector::Zero(spec.total_dim())),
                  std::domain_error);
}

TEST_CASE("spectral norm matches singular values on random matrices") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 5; ++trial) {
    Matrix m(12, 9);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(gauss(rng), gauss(rng));
    Eigen::JacobiSVD<Matrix> svd(m);
    CHECK(spectral_norm(m) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
  }
  CHECK(spectral_norm(Matrix::Zero(3, 3)) == 0.0);
  CHECK(spectral_norm(1e-200 * Matrix::Identity(3, 3)) == doctest::Approx(1e-200).epsilon(1e-12));
}
