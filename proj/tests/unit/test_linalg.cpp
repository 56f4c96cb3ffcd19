#include <doctest.h>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "polygamy/states.hpp"

using namespace testing;

TEST_CASE("layout validation and strides") {
  CHECK_THROWS_AS(SubsystemLayout({}), std::invalid_argument);
  CHECK_THROWS_AS(SubsystemLayout({2, 1}), std::invalid_argument);
  const SubsystemLayout l({2, 3, 4});
  CHECK(l.total() == 24);
  CHECK(l.strides() == std::vector<int>{12, 4, 1});
  const std::vector<int> pick{2, 0};
  CHECK(l.select(pick).dims() == std::vector<int>{4, 2});
}

TEST_CASE("state and density validation") {
  CHECK_THROWS_AS(StateVector(CVector::Ones(4), SubsystemLayout({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(CVector::Ones(3) / std::sqrt(3.0), SubsystemLayout({2, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(StateVector::normalized(CVector::Zero(4), SubsystemLayout({2, 2})),
                  std::invalid_argument);

  CMatrix not_hermitian = CMatrix::Identity(2, 2) / 2.0;
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityOperator(not_hermitian, SubsystemLayout({2})), std::invalid_argument);
  CHECK_THROWS_AS(DensityOperator(CMatrix::Identity(2, 2), SubsystemLayout({2})),
                  std::invalid_argument);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator(negative, SubsystemLayout({2})), std::invalid_argument);
}

TEST_CASE("tensor product") {
  CHECK(max_abs(tensor_product(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(2, 2))) -
                CMatrix::Identity(4, 4)) == 0.0);

  CMatrix sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  CVector ket00 = CVector::Zero(4);
  ket00(0) = 1.0;
  const CVector out = tensor_product(sy, sy) * ket00;
  CHECK(std::abs(out(3) - cplx(-1.0, 0.0)) < 1e-15);
  CHECK(out.head(3).norm() < 1e-15);

  // e1 e1^T (x) e2 e2^T on 3 (x) 3 projects onto index 1*3 + 2.
  CMatrix p1 = CMatrix::Zero(3, 3), p2 = CMatrix::Zero(3, 3);
  p1(1, 1) = 1.0;
  p2(2, 2) = 1.0;
  const CMatrix p = tensor_product(p1, p2);
  CHECK(p(5, 5) == cplx(1.0));
  CHECK(p.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("partial trace examples") {
  const std::vector<int> a{0}, b{1};
  CHECK(max_abs(partial_trace(projector(bell()), a).matrix() - CMatrix::Identity(2, 2) / 2.0) <
        1e-15);

  const DensityOperator rho_b = random_mixed(SubsystemLayout({3}), 2, 11);
  CMatrix zero = CMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const DensityOperator prod(tensor_product(zero, rho_b.matrix()), SubsystemLayout({2, 3}));
  CHECK(max_abs(partial_trace(prod, b).matrix() - rho_b.matrix()) < 1e-15);

  const DensityOperator w_a = partial_trace(w_state(3), a);
  CHECK(w_a.matrix()(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(w_a.matrix()(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(w_a.matrix()(0, 1)) < 1e-15);

  const std::vector<int> bad{3}, empty{}, dup{1, 1};
  CHECK_THROWS_AS(partial_trace(projector(bell()), bad), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(projector(bell()), empty), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(projector(bell()), dup), std::invalid_argument);
}

TEST_CASE("partial trace agrees with the oracle and composes") {
  const SubsystemLayout layout({2, 3, 2});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityOperator rho = random_mixed(layout, 3, seed);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {2, 0}}) {
      std::vector<int> sorted = keep;
      std::sort(sorted.begin(), sorted.end());
      const CMatrix ref = oracle::partial_trace(rho.matrix(), layout.dims(), sorted);
      CHECK(max_abs(partial_trace(rho, keep).matrix() - ref) < 1e-13);
    }
  }
  // Pure and mixed paths agree.
  const StateVector psi = haar_random_pure(layout, 5);
  const std::vector<int> keep{0, 2};
  CHECK(max_abs(partial_trace(psi, keep).matrix() - partial_trace(projector(psi), keep).matrix()) <
        1e-14);
}

TEST_CASE("property: partial trace associativity on 2x2x2") {
  const SubsystemLayout layout({2, 2, 2});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityOperator rho = random_mixed(layout, 4, 100 + seed);
    const std::vector<int> ab{0, 1}, a{0}, ac{0, 2}, c{1};
    const CMatrix direct = partial_trace(rho, a).matrix();
    CHECK(max_abs(partial_trace(partial_trace(rho, ab), a).matrix() - direct) < 1e-14);
    CHECK(max_abs(partial_trace(partial_trace(rho, ac), a).matrix() - direct) < 1e-14);
    const std::vector<int> cc{2};
    CHECK(max_abs(partial_trace(partial_trace(rho, ac), c).matrix() -
                  partial_trace(rho, cc).matrix()) < 1e-14);
  }
}

TEST_CASE("partial transpose") {
  CMatrix diag = CMatrix::Zero(4, 4);
  diag.diagonal() << 0.1, 0.2, 0.3, 0.4;
  const DensityOperator d(diag, SubsystemLayout({2, 2}));
  CHECK(max_abs(partial_transpose(d, 0) - diag) == 0.0);

  const CMatrix pt = partial_transpose(projector(bell()), 0);
  const Eigensystem es = hermitian_eigensystem(pt);
  CHECK(es.values(0) == doctest::Approx(0.5));
  CHECK(es.values(2) == doctest::Approx(0.5));
  CHECK(es.values(3) == doctest::Approx(-0.5));

  // Product state: PPT.
  const DensityOperator a = random_mixed(SubsystemLayout({2}), 2, 1);
  const DensityOperator b = random_mixed(SubsystemLayout({3}), 2, 2);
  const DensityOperator prod(tensor_product(a.matrix(), b.matrix()), SubsystemLayout({2, 3}));
  CHECK(hermitian_eigensystem(partial_transpose(prod, 1)).values.minCoeff() >= -1e-10);

  CHECK_THROWS_AS(partial_transpose(d, 2), std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(d, -1), std::invalid_argument);
}

TEST_CASE("property: partial transpose is a trace-preserving involution") {
  const SubsystemLayout layout({2, 3, 2});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DensityOperator rho = random_mixed(layout, 4, 200 + seed);
    for (int k = 0; k < 3; ++k) {
      const CMatrix once = partial_transpose(rho, k);
      CHECK(max_abs(once - oracle::partial_transpose(rho.matrix(), layout.dims(), k)) < 1e-15);
      CHECK(std::abs(once.trace() - rho.matrix().trace()) < 1e-14);
      CHECK(hermiticity_error(once) < 1e-14);
      const std::vector<int> sub{k};
      CHECK(max_abs(partial_transpose(once, layout, sub) - rho.matrix()) < 1e-15);
    }
  }
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(CMatrix::Identity(4, 4)) == doctest::Approx(4.0));
  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << 0.5, 0.5, 0.5, -0.5;
  CHECK(trace_norm(d) == doctest::Approx(2.0));
  CHECK_THROWS_AS(trace_norm(CMatrix::Zero(2, 3)), std::invalid_argument);

  Rng rng = make_rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix g = complex_gaussian(rng, 5, 5);
    const CMatrix h = (g + g.adjoint()) / 2.0;
    double abs_sum = 0.0;
    for (double l : oracle::real_eigenvalues(h)) abs_sum += std::abs(l);
    CHECK(std::abs(trace_norm(h) - abs_sum) < 1e-10);
    CHECK(trace_norm(h) >= std::abs(h.trace().real()) - 1e-12);
  }
}

TEST_CASE("hermitian eigensystem") {
  CHECK(hermitian_eigensystem(CMatrix::Identity(2, 2)).values.isApprox(RVector::Ones(2)));
  CMatrix sz = CMatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  const Eigensystem z = hermitian_eigensystem(sz);
  CHECK(z.values(0) == 1.0);
  CHECK(z.values(1) == -1.0);

  const std::vector<int> a{0};
  const Eigensystem w = hermitian_eigensystem(partial_trace(w_state(3), a).matrix());
  CHECK(w.values(0) == doctest::Approx(2.0 / 3.0));
  CHECK(w.values(1) == doctest::Approx(1.0 / 3.0));

  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(bad), std::invalid_argument);

  const DensityOperator rho = random_mixed(SubsystemLayout({2, 3}), 6, 9);
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  const CMatrix back = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
  CHECK(max_abs(back - rho.matrix()) < 1e-10);
  CHECK(max_abs(es.vectors.adjoint() * es.vectors - CMatrix::Identity(6, 6)) < 1e-10);
  for (Eigen::Index i = 1; i < es.values.size(); ++i) CHECK(es.values(i - 1) >= es.values(i));
}

TEST_CASE("psd square root") {
  CHECK(max_abs(psd_sqrt(CMatrix::Identity(2, 2) / 2.0) -
                CMatrix::Identity(2, 2) / std::sqrt(2.0)) < 1e-15);
  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 4.0 / 5.0, 1.0 / 5.0;
  CMatrix expect = CMatrix::Zero(2, 2);
  expect.diagonal() << 2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0);
  CHECK(max_abs(psd_sqrt(d) - expect) < 1e-15);

  CMatrix slightly = CMatrix::Zero(2, 2);
  slightly.diagonal() << 1.0, -5e-11;
  CHECK_NOTHROW(psd_sqrt(slightly));
  slightly(1, 1) = -1e-8;
  CHECK_THROWS_AS(psd_sqrt(slightly), std::domain_error);
}

TEST_CASE("property: psd sqrt reconstructs on 100 random PSD matrices") {
  Rng rng = make_rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const CMatrix g = complex_gaussian(rng, n, std::max(1, n - trial % 3));
    const CMatrix r = g * g.adjoint();
    const CMatrix s = psd_sqrt(r);
    CHECK(max_abs(s * s - r) < 1e-9);
  }
}

TEST_CASE("haar random pure states") {
  const SubsystemLayout layout({2, 3});
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(std::abs(haar_random_pure(layout, seed).amplitudes().norm() - 1.0) < 1e-12);
  CHECK(haar_random_pure(layout, 42).amplitudes() == haar_random_pure(layout, 42).amplitudes());
  CHECK(haar_random_pure(layout, 42).amplitudes() != haar_random_pure(layout, 43).amplitudes());

  RVector mean = RVector::Zero(6);
  const int samples = 10000;
  for (int s = 0; s < samples; ++s)
    mean += haar_random_pure(layout, 1000 + s).amplitudes().cwiseAbs2();
  mean /= samples;
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(std::abs(mean(i) - 1.0 / 6.0) < 5e-3);
}

TEST_CASE("haar random unitary") {
  const CMatrix u = haar_random_unitary(5, 3);
  CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(5, 5)) < 1e-12);
  CHECK(max_abs(u - haar_random_unitary(5, 3)) == 0.0);
}

TEST_CASE("permute subsystems") {
  const SubsystemLayout layout({2, 3});
  const StateVector psi = haar_random_pure(layout, 4);
  const std::vector<int> swap{1, 0};
  const CVector swapped = permute_subsystems(psi.amplitudes(), layout, swap);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(swapped(j * 2 + i) == psi[i * 3 + j]);
  const std::vector<int> bad{0, 0};
  CHECK_THROWS_AS(permute_subsystems(psi.amplitudes(), layout, bad), std::invalid_argument);
}

TEST_CASE("pure_state_of") {
  const auto psi = pure_state_of(projector(bell()));
  REQUIRE(psi.has_value());
  CHECK(std::abs(std::abs(psi->amplitudes().dot(bell().amplitudes())) - 1.0) < 1e-12);
  CHECK_FALSE(pure_state_of(maximally_mixed(SubsystemLayout({2, 2}))).has_value());
}
