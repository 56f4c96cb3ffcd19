#include <doctest.h>

#include "helpers.hpp"
#include "polygamy/assistance.hpp"
#include "polygamy/measures.hpp"
#include "polygamy/polygamy.hpp"
#include "polygamy/states.hpp"

using namespace testing;

namespace {

StateVector ex2_state() {
  const double s = std::sqrt(6.0) / 6.0;
  return gen_schmidt_3q({{0.5, 0.5, s, s, s}, 0.0});
}

StateVector product(int n) { return basis_state(SubsystemLayout(std::vector<int>(n, 2)), 0); }

}  // namespace

TEST_CASE("lemma1 gap examples and domain") {
  CHECK(lemma1_gap(1.0, 5.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(lemma1_gap(2.0, 1.0)) < 1e-12);
  CHECK(lemma1_gap(2.0, 2.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(lemma1_gap(0.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(lemma1_gap(2.0, 0.5), std::domain_error);
}

TEST_CASE("property: lemma1 gap is nonnegative on a grid") {
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double x = 1.0 + 5.0 * i / 99.0;
      const double t = 1.0 + 49.0 * j / 99.0;
      CHECK(lemma1_gap(x, t) >= -1e-12);
    }
}

TEST_CASE("ordering classification") {
  const std::vector<double> ones{1, 1, 1, 1};
  CHECK(classify_ordering(ones, true).kind == OrderingKind::all_ascending);
  const std::vector<double> zeros{0, 0};
  CHECK(classify_ordering(zeros, false).kind == OrderingKind::all_ascending);
  const std::vector<double> mirrored{2, 1};
  CHECK(classify_ordering(mirrored, false).kind == OrderingKind::mirrored);

  // Ascending fails at index 1 (10 > 2), and the only admissible split
  // (m = 1) needs the same prefix, so nothing applies.
  const std::vector<double> spike{1, 10, 1, 1};
  CHECK(classify_ordering(spike, false).kind == OrderingKind::unsatisfied);

  // 0.1 <= 1.6, 0.5 <= 1.1, then 1.0 >= 0.1: split at m = 1.
  const std::vector<double> split{0.1, 0.5, 1.0, 0.1};
  const auto c = classify_ordering(split, false);
  CHECK(c.kind == OrderingKind::split);
  REQUIRE(c.split_m.has_value());
  CHECK(*c.split_m == 1);

  // Three values leave no room for a split (m in [1, 0]).
  const std::vector<double> three{5, 1, 1};
  CHECK(classify_ordering(three, false).kind == OrderingKind::unsatisfied);

  const std::vector<double> negative{1, -1};
  CHECK_THROWS_AS(classify_ordering(negative, false), std::invalid_argument);
  const std::vector<double> one{1};
  CHECK_THROWS_AS(classify_ordering(one, false), std::invalid_argument);

  // Squaring changes the verdict: 1.2 <= 1.3 linearly, 1.44 > 0.85 squared.
  const std::vector<double> near{1.2, 0.6, 0.7};
  CHECK(classify_ordering(near, false).kind == OrderingKind::all_ascending);
  CHECK(classify_ordering(near, true).kind == OrderingKind::unsatisfied);
}

TEST_CASE("split rhs and hierarchy") {
  const std::vector<double> t{0.3, 0.5, 0.7, 0.9, 1.1};
  const double w = 0.4;
  // m = N-2 collapses to the all-ascending sum.
  double ascending = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) ascending += std::pow(w, double(j)) * t[j];
  CHECK(split_rhs(t, w, 3) == doctest::Approx(ascending).epsilon(1e-15));
  // m = 1: t0 + w t1 + w^3 (t2 + t3) + w^2 t4.
  CHECK(split_rhs(t, w, 1) ==
        doctest::Approx(t[0] + w * t[1] + w * w * w * (t[2] + t[3]) + w * w * t[4]));

  OrderingClassification asc;
  asc.kind = OrderingKind::all_ascending;
  CHECK(weighted_rhs(t, w, asc) == doctest::Approx(split_rhs(t, w, int(t.size()) - 2)));
}

TEST_CASE("theorem 1 on the five-term example") {
  const PolygamyReport r = check_tau_tripartite(ex2_state(), 2.0);
  CHECK(r.theorem_id == "t1");
  CHECK(r.precondition_met);
  CHECK(r.holds);
  CHECK(std::abs(r.residual - 1.0 / 6.0) < 1e-6);
  CHECK(std::abs(r.lhs - 0.5) < 1e-9);
  CHECK(std::abs(r.rhs - 2.0 / 3.0) < 1e-9);
  CHECK(r.residual == r.rhs - r.lhs);
}

TEST_CASE("theorem 1 saturation and products") {
  const auto sat = GenSchmidtParams::from_angles({0.8, 0.6, std::numbers::pi / 2, 0.0});
  CHECK(std::abs(check_tau_tripartite(gen_schmidt_3q(sat), 2.0).residual) < 1e-9);
  const PolygamyReport p = check_tau_tripartite(product(3), 3.0);
  CHECK(p.lhs == 0.0);
  CHECK(p.rhs == 0.0);

  CHECK_THROWS_AS(check_tau_tripartite(ex2_state(), 1.5), std::domain_error);
  CHECK_THROWS_AS(check_tau_tripartite(w_state(4), 2.0), std::invalid_argument);
}

TEST_CASE("theorem 1 branch follows the larger pair") {
  // l2 only: A entangled with C alone, so AC >= AB and branch (2) applies.
  const std::array<double, 5> l{0.6, 0.0, 0.8, 0.0, 0.0};
  const PolygamyReport r = check_tau_tripartite(gen_schmidt_3q({l, 0.0}), 3.0);
  CHECK(r.form == "branch (2)");
  CHECK(r.residual >= -1e-9);
}

TEST_CASE("property: theorem 1 on 200 random states and four exponents") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = haar_random_pure(SubsystemLayout({2, 2, 2}), 40000 + seed);
    for (double a : {2.0, 2.5, 3.0, 4.0}) CHECK(check_tau_tripartite(psi, a).residual >= -1e-9);
  }
}

TEST_CASE("property: the example residual curve is positive and decreasing") {
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 40; ++k) {
    const double a = 2.0 + 0.1 * k;
    const double y = std::pow(2.0, a / 2) * std::pow(std::sqrt(3.0) / 3.0, a);
    CHECK(y > 0.0);
    CHECK(y < previous);
    previous = y;
  }
}

TEST_CASE("multi-party tau checks") {
  const PolygamyReport w4 = check_tau_multi(w_state(4), 2.0);
  CHECK(w4.classification.kind == OrderingKind::all_ascending);
  CHECK(w4.theorem_id == "t3");
  double sum = 0.0;
  for (double v : w4.classification.values) sum += v * v;
  CHECK(w4.rhs == doctest::Approx(sum));
  CHECK(w4.holds);

  const PolygamyReport prod = check_tau_multi(product(4), 2.0);
  CHECK(prod.lhs == 0.0);
  CHECK(prod.rhs == 0.0);

  // GHZ4: the precondition flag mirrors the classification.
  const PolygamyReport ghz = check_tau_multi(ghz_state(4), 3.0);
  CHECK(ghz.precondition_met == (ghz.classification.kind != OrderingKind::unsatisfied));
}

TEST_CASE("unsatisfied precondition never holds") {
  PolygamyInputs in;
  in.family = Family::tau;
  in.whole = 0.1;
  in.pairs = {5.0, 1.0, 1.0};
  const PolygamyReport r = assess(in, 2.0);
  CHECK(r.classification.kind == OrderingKind::unsatisfied);
  CHECK_FALSE(r.precondition_met);
  CHECK_FALSE(r.holds);
  CHECK(r.residual > 0.0);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("split form is reported as theorem 2") {
  PolygamyInputs in;
  in.family = Family::tau;
  in.whole = 0.5;
  in.pairs = {0.1, 0.5, 1.0, 0.1};
  const PolygamyReport r = assess(in, 2.0);
  CHECK(r.classification.kind == OrderingKind::split);
  CHECK(r.theorem_id == "t2");
  CHECK(r.precondition_met);
}

TEST_CASE("assess domain checks") {
  PolygamyInputs in;
  in.pairs = {0.5, 0.5};
  in.family = Family::tau;
  CHECK_THROWS_AS(assess(in, 1.9), std::domain_error);
  in.family = Family::eoa;
  CHECK_NOTHROW(assess(in, 1.0));
  CHECK_THROWS_AS(assess(in, 0.9), std::domain_error);
}

TEST_CASE("eoa checks on W3") {
  const RoofConfig config;
  const DensityOperator w3 = projector(w_state(3));
  const PolygamyReport b1 = check_eoa_multi(w3, 1.0, config);
  CHECK(std::abs(b1.residual - (2.0 - std::log2(3.0))) < 5e-3);
  CHECK(std::abs(b1.lhs - (std::log2(3.0) - 2.0 / 3.0)) < 1e-12);
  CHECK(b1.holds);
  const PolygamyReport b2 = check_eoa_multi(w3, 2.0, config);
  const double e = std::log2(3.0) - 2.0 / 3.0;
  CHECK(std::abs(b2.residual - (16.0 / 9.0 - e * e)) < 5e-3);

  const PolygamyReport prod = check_eoa_multi(projector(product(3)), 1.0, config);
  CHECK(prod.lhs == 0.0);
  CHECK(std::abs(prod.rhs) < 1e-12);
  CHECK_THROWS_AS(check_eoa_multi(w3, 0.5, config), std::domain_error);
}

TEST_CASE("screnoa checks on W4") {
  const RoofConfig config;
  const DensityOperator w4 = projector(w_state(4));
  const PolygamyReport b1 = check_screnoa_multi(w4, 1.0, config);
  CHECK(b1.theorem_id == "t7");
  CHECK(std::abs(b1.residual) < 1e-2);
  CHECK(b1.holds);
  const PolygamyReport b2 = check_screnoa_multi(w4, 2.0, config);
  CHECK(std::abs(b2.residual - 0.25) < 1e-2);
  CHECK(std::abs(check_screnoa_multi(projector(product(3)), 1.0, config).residual) < 1e-12);
  CHECK_THROWS_AS(check_screnoa_multi(w4, 0.0, config), std::domain_error);
}

TEST_CASE("squared-sum polygamy") {
  const PolygamyReport r = check_tau_squared_sum(ex2_state());
  CHECK(r.theorem_id == "eq8");
  CHECK(std::abs(r.lhs - 0.5) < 1e-9);
  CHECK(std::abs(r.rhs - 2.0 / 3.0) < 1e-9);
  CHECK(r.holds);
}

TEST_CASE("CKW gaps") {
  const CkwGaps ghz = ckw_check(ghz_state(3));
  CHECK(ghz.monogamy_gap == doctest::Approx(1.0));
  CHECK(ghz.dual_gap == doctest::Approx(1.0));
  const CkwGaps w = ckw_check(w_state(3));
  CHECK(std::abs(w.monogamy_gap) < 1e-9);
  const CkwGaps p = ckw_check(product(3));
  CHECK(std::abs(p.monogamy_gap) < 1e-12);
  CHECK(std::abs(p.dual_gap) < 1e-12);
  CHECK_THROWS_AS(ckw_check(haar_random_pure(SubsystemLayout({2, 3, 2}), 1)),
                  std::invalid_argument);
}
