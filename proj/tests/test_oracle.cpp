#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"
#include "cantorq/oracle.hpp"
#include "test_util.hpp"

using namespace cantorq;
using tq::operator""_w;

namespace {
const Ratio kR0(0.4350411707);
}

TEST_CASE("discretize") {
  const AtomList k1 = discretize(kR0, 1);
  REQUIRE(k1.positions.size() == 2);
  CHECK(k1.atom_mass == 0.5);
  CHECK(k1.positions[0] == doctest::Approx(centroid_of_word(kR0, "1"_w)).epsilon(1e-15));
  CHECK(k1.positions[1] == doctest::Approx(centroid_of_word(kR0, "2"_w)).epsilon(1e-15));

  const AtomList k2 = discretize(kR0, 2);
  CHECK(k2.positions.front() == doctest::Approx(centroid_of_word(kR0, "11"_w)).epsilon(1e-15));
  CHECK(k2.positions.back() == doctest::Approx(centroid_of_word(kR0, "22"_w)).epsilon(1e-15));
  CHECK(k2.positions.front() + k2.positions.back() == doctest::Approx(1.0).epsilon(1e-15));

  for (const int k : {1, 5, 10}) {
    const AtomList atoms = discretize(kR0, k);
    double mean = 0.0;
    for (double p : atoms.positions) mean += atoms.atom_mass * p;
    CHECK(mean == doctest::Approx(0.5).epsilon(1e-13));
    for (std::size_t i = 1; i < atoms.positions.size(); ++i)
      CHECK(atoms.positions[i - 1] < atoms.positions[i]);
  }

  CHECK_THROWS_AS(discretize(kR0, 0), DepthOutOfRange);
  CHECK_THROWS_AS(discretize(kR0, 23), DepthOutOfRange);
}

TEST_CASE("dp_optimal degenerate cluster counts") {
  const AtomList atoms = discretize(kR0, 4);
  const OracleResult all = dp_optimal(atoms, 16);
  CHECK(std::abs(all.value - atoms.within_atom_variance) < 1e-15);
  CHECK(all.partition.size() == 16);

  // one cluster recovers the global variance by the decomposition identity
  const AtomList deep = discretize(kR0, 12);
  const OracleResult one = dp_optimal(deep, 1);
  CHECK(std::abs(one.value - variance(kR0)) < 1e-12);
  CHECK(one.codepoints.size() == 1);
  CHECK(one.codepoints[0] == doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(dp_optimal(atoms, 0), NTooLarge);
  CHECK_THROWS_AS(dp_optimal(atoms, 17), NTooLarge);
}

TEST_CASE("oracle meets the closed formula in the optimal regime") {
  const Ratio third(1.0 / 3.0);
  const AtomList atoms = discretize(third, 12);
  const OracleResult res = dp_optimal(atoms, 5);
  CHECK(std::abs(res.value - beta_distortion_formula(third, 5)) < 2e-6);
}

TEST_CASE("dp matches exhaustive enumeration") {
  const struct {
    int k;
    int max_n;
  } combos[] = {{2, 4}, {3, 6}, {4, 6}, {5, 6}, {8, 3}};
  for (const double rv : {1.0 / 3.0, 0.437}) {
    const Ratio r(rv);
    for (const auto& combo : combos) {
      const AtomList atoms = discretize(r, combo.k);
      for (int n = 1; n <= combo.max_n; ++n) {
        const double brute = atoms.within_atom_variance + tq::brute_force_sse(atoms, n);
        const OracleResult dp = dp_optimal(atoms, n);
        CHECK(std::abs(dp.value - brute) <= 1e-12 * std::max(1.0, std::abs(brute)));
      }
    }
  }
}

TEST_CASE("divide-and-conquer equals the naive scan bit for bit") {
  for (const double rv : {1.0 / 3.0, 0.4350411707, 0.42}) {
    const Ratio r(rv);
    for (const int k : {6, 9, 12}) {
      const AtomList atoms = discretize(r, k);
      for (const int n : {2, 3, 7, 16}) {
        const OracleResult fast = dp_optimal(atoms, n);
        const OracleResult slow = dp_optimal_naive(atoms, n);
        CHECK(fast.value == slow.value);
        CHECK(fast.partition == slow.partition);
        REQUIRE(fast.codepoints.size() == slow.codepoints.size());
        for (int i = 0; i < fast.codepoints.size(); ++i)
          CHECK(fast.codepoints[i] == slow.codepoints[i]);
      }
    }
  }
  CHECK_THROWS_AS(dp_optimal_naive(discretize(kR0, 13), 2), NTooLarge);
}

TEST_CASE("exact ties resolve to the leftmost refinement") {
  // at r = 1/3 every way of refining one quarter costs the same; the tie
  // rule must reproduce the canonical choice
  const Ratio third(1.0 / 3.0);
  const AtomList atoms = discretize(third, 10);
  for (const int n : {3, 5, 6, 7, 9, 11, 13, 15}) {
    const OracleResult res = dp_optimal(atoms, n);
    const Quantizer beta = build_beta(third, n);
    REQUIRE(res.codepoints.size() == n);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(res.codepoints[i] - beta[i]) < 1e-12);
  }
}

TEST_CASE("discretization error bound dominates depth refinement") {
  const struct {
    double r;
    int n;
  } cases[] = {{0.437, 3}, {1.0 / 3.0, 5}};
  for (const auto& c : cases) {
    const Ratio r(c.r);
    for (const int k : {8, 10, 12}) {
      const OracleResult coarse = dp_optimal(discretize(r, k), c.n);
      const OracleResult fine = dp_optimal(discretize(r, k + 2), c.n);
      CHECK(std::abs(fine.value - coarse.value) < coarse.discretization_error_bound);
    }
  }
}

TEST_CASE("oracle lower-bounds the candidate constructions") {
  for (const double rv : {0.42, 0.4350411707, 0.437}) {
    const Ratio r(rv);
    for (const int n : {3, 5, 7}) {
      const CompareRow row = compare(r, n, 12);
      const double best = std::min({row.v_beta, row.v_gamma, row.v_delta});
      CHECK(row.oracle <= best + row.discretization_error_bound);
    }
  }
}

TEST_CASE("lloyd fixed points") {
  {
    const Ratio r(0.43);
    const Quantizer init = build_beta(r, 4);
    const Quantizer out = lloyd(r, init, 1, 1e-9);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(out[i] - init[i]) < 1e-9);
    CHECK(check_cvt(r, out).is_cvt);
  }
  {
    const Ratio r(0.40);
    const Quantizer init = build_gamma(r, 3);
    const Quantizer out = lloyd(r, init, 1, 1e-9);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(out[i] - init[i]) < 1e-9);
  }
}

TEST_CASE("lloyd converges from generic initializers") {
  const Ratio third(1.0 / 3.0);
  const Quantizer out = lloyd(third, tq::quantizer_of({0.1, 0.5, 0.9}), 500, 1e-12);
  CHECK(check_cvt(third, out, 1e-8).is_cvt);
  CHECK(distortion(third, out).value >= beta_distortion_formula(third, 3) - 1e-12);

  const Quantizer qinit = quantile_init(discretize(third, 10), 3);
  const Quantizer out2 = lloyd(third, qinit, 500, 1e-12);
  CHECK(check_cvt(third, out2, 1e-8).is_cvt);
  CHECK(distortion(third, out2).value >= beta_distortion_formula(third, 3) - 1e-12);
}

TEST_CASE("lloyd reports empty cells") {
  CHECK_THROWS_AS(lloyd(kR0, tq::quantizer_of({0.45, 0.5, 0.55}), 10, 1e-9),
                  EmptyCellEncountered);
}

TEST_CASE("lloyd never increases distortion") {
  const Ratio r(0.42);
  Quantizer current = tq::quantizer_of({0.15, 0.4, 0.62, 0.9});
  DistortionResult prev = distortion(r, current);
  for (int step = 0; step < 8; ++step) {
    current = lloyd(r, current, 1, 0.0);
    const DistortionResult next = distortion(r, current);
    CHECK(next.value <= prev.value + (prev.upper - prev.lower) + (next.upper - next.lower) +
                            1e-14);
    prev = next;
  }
}

TEST_CASE("compare rows") {
  {
    const CompareRow row = compare(Ratio(1.0 / 3.0), 3, 14);
    CHECK(row.argmin == Family::beta);
    CHECK(std::abs(row.oracle - closed_form_v_beta3(Ratio(1.0 / 3.0))) < 1e-6);
    CHECK_FALSE(row.exploratory);
  }
  {
    const CompareRow row = compare(kR0, 3, 14);
    CHECK(std::abs(row.oracle - 0.0110764) < 5e-7);
    CHECK(std::abs(row.v_beta - row.v_gamma) < 2e-11);
  }
  {
    const CompareRow row = compare(Ratio(0.438), 3, 14);
    CHECK(row.oracle < row.v_beta);
    CHECK(row.argmin != Family::beta);
    CHECK(row.exploratory);
  }
}
