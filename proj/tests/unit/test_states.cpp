#include <doctest.h>

#include "helpers.hpp"
#include "polygamy/measures.hpp"
#include "polygamy/states.hpp"

using namespace testing;

TEST_CASE("five-term state placement") {
  const StateVector zero = gen_schmidt_3q({{1.0, 0.0, 0.0, 0.0, 0.0}, 0.0});
  CHECK(zero[0] == cplx(1.0));
  CHECK(zero.amplitudes().tail(7).norm() == 0.0);

  const double s = std::sqrt(6.0) / 6.0;
  const StateVector ex2 = gen_schmidt_3q({{0.5, 0.5, s, s, s}, 0.0});
  for (int i : {1, 2, 3}) CHECK(ex2[i] == cplx(0.0));
  CHECK(ex2[0].real() == doctest::Approx(0.5));
  CHECK(ex2[4].real() == doctest::Approx(0.5));
  for (int i : {5, 6, 7}) CHECK(ex2[i].real() == doctest::Approx(s));

  const StateVector phased = gen_schmidt_3q({{0.5, 0.5, s, s, s}, std::numbers::pi / 2});
  CHECK(std::abs(phased[4] - cplx(0.0, 0.5)) < 1e-15);

  const auto sat = GenSchmidtParams::from_angles({0.9, 0.7, std::numbers::pi / 2, 0.0});
  const StateVector psi = gen_schmidt_3q(sat);
  CHECK(std::abs(psi[5]) < 1e-15);
  CHECK(std::abs(psi[7]) < 1e-15);

  CHECK_THROWS_AS(gen_schmidt_3q({{0.5, 0.5, 0.0, 0.0, 0.0}, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_schmidt_3q({{-1.0, 0.0, 0.0, 0.0, 0.0}, 0.0}), std::invalid_argument);
}

TEST_CASE("angle parameterization is normalized") {
  const auto p = GenSchmidtParams::from_angles({0.3, 1.2, 0.4, 1.0});
  double norm = 0.0;
  for (double l : p.lambdas) norm += l * l;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("W states") {
  const StateVector w3 = w_state(3);
  for (int i : {1, 2, 4}) CHECK(w3[i].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(w3[0]) + std::abs(w3[3]) + std::abs(w3[5]) + std::abs(w3[6]) + std::abs(w3[7]) ==
        0.0);
  const StateVector w4 = w_state(4);
  for (int i : {1, 2, 4, 8}) CHECK(w4[i].real() == doctest::Approx(0.5));
  CHECK(concurrence_pure(w_state(2), Bipartition({0}, {1})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(w_state(1), std::invalid_argument);
}

TEST_CASE("GHZ states") {
  const StateVector g2 = ghz_state(2);
  CHECK(std::abs(g2.amplitudes().dot(bell().amplitudes())) == doctest::Approx(1.0));
  CHECK(concurrence_pure(ghz_state(3), Bipartition::first_vs_rest(3)) == doctest::Approx(1.0));
  const std::vector<int> ab{0, 1};
  CHECK(wootters_concurrence_2q(partial_trace(ghz_state(3), ab)) < 1e-12);
  CHECK_THROWS_AS(ghz_state(1), std::invalid_argument);
}

TEST_CASE("basis states") {
  const StateVector b = basis_state(SubsystemLayout({2, 3}), 4);
  CHECK(b[4] == cplx(1.0));
  CHECK_THROWS_AS(basis_state(SubsystemLayout({2, 3}), 6), std::invalid_argument);
}

TEST_CASE("random mixed states") {
  const SubsystemLayout l({2, 2});
  const DensityOperator pure = random_mixed(l, 1, 3);
  CHECK(std::abs((pure.matrix() * pure.matrix()).trace().real() - 1.0) < 1e-12);
  for (int rank = 1; rank <= 4; ++rank) {
    const DensityOperator rho = random_mixed(l, rank, 10 + rank);
    const RVector ev = hermitian_eigensystem(rho.matrix()).values;
    CHECK(ev.minCoeff() >= -1e-12);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    int above = 0;
    for (double x : ev) above += x > 1e-10 ? 1 : 0;
    CHECK(above == rank);
  }
  CHECK(random_mixed(l, 2, 5).matrix() == random_mixed(l, 2, 5).matrix());
  CHECK_THROWS_AS(random_mixed(l, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_mixed(l, 5, 1), std::invalid_argument);
}
