#include <random>

#include "doctest.h"
#include "paretail/inversion.hpp"
#include "paretail/typo_ledger.hpp"
#include "reference.hpp"

using namespace paretail;

TEST_SUITE("inversion") {

TEST_CASE("inversion: examples") {
  auto id = invert_series(FormalSeries<double>{1.0, 0.0, 0.0, 0.0}, 0.7, 1);
  CHECK(id.coeffs() == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  auto one = invert_series(FormalSeries<double>{1.0, 0.4}, 1.0, 1);
  CHECK(one[1] == doctest::Approx(-0.4));
  auto two = invert_series(FormalSeries<double>{1.0, 0.4, -0.3}, 1.0, 1);
  CHECK(two[2] == doctest::Approx(2 * 0.16 + 0.3));
  CHECK(invert_series(FormalSeries<double>{2.0, 1.0}, 1.0, 3)[0] == doctest::Approx(0.125));
  CHECK_THROWS_AS(invert_series(FormalSeries<double>{0.0, 1.0}, 1.0, 1), SingularInputError);
  CHECK_THROWS_AS(invert_series(FormalSeries<double>{1.0, 1.0}, HUGE_VAL, 1), ArgumentError);
  CHECK_THROWS_AS(invert_series(FormalSeries<double>{1.0, 1.0}, 1.0, 0), ArgumentError);
}

TEST_CASE("inversion: low-order closed forms") {
  std::mt19937_64 rng(29);
  int printed_x1_mismatch = 0, printed_x3_mismatch = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Rational c0 = ref::random_rational(rng, 1, 3);
    if (c0 == 0) c0 = 1;
    Rational c1 = ref::random_rational(rng, -2, 2), c2 = ref::random_rational(rng, -2, 2),
             c3 = ref::random_rational(rng, -2, 2);
    const int a = 1 + rep % 3;
    const Rational A(a);
    auto xs = invert_series(FormalSeries<Rational>({c0, c1, c2, c3}), A, 1);
    CHECK(xs[0] == 1 / c0);
    CHECK(xs[1] == -ipow(c0, -a - 2) * c1);
    CHECK(xs[2] == ipow(c0, -2 * a - 3) * (-c0 * c2 + (A + 1) * c1 * c1));
    const Rational x3 = ipow(c0, -3 * a - 4) *
                        (-c0 * c0 * c3 + (2 + 3 * A) * c0 * c1 * c2 - (2 + 3 * A) * (1 + A) * c1 * c1 * c1 / 2);
    CHECK(xs[3] == x3);
    if (c1 != 0 && xs[1] != ipow(c0, -a - 2) * c1) ++printed_x1_mismatch;
    const Rational x3_printed = ipow(c0, -3 * a - 4) *
                                (-c0 * c0 * c3 + (2 + 3 * A) * c0 * c1 * c2 - (2 + 3 * A) * (1 + A) * c1 * c1 / 2);
    if (xs[3] != x3_printed) ++printed_x3_mismatch;
  }
  CHECK(printed_x1_mismatch > 0);
  CHECK(printed_x3_mismatch > 0);
  CHECK(find_typo("x1-star-sign") != nullptr);
  CHECK(find_typo("x3-star-degree") != nullptr);
}

TEST_CASE("inversion: round trip") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u0(0.5, 2.0), ui(-1.0, 1.0);
  const double grid[] = {0.5, 1.0, 2.0};
  double worst = 0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> x(9);
    x[0] = u0(rng);
    for (int i = 1; i <= 8; ++i) x[i] = ui(rng);
    const double a = grid[rep % 3];
    const int k = 1 + (rep / 3) % 3;
    auto xs = invert_series(FormalSeries<double>(x), a, k);
    worst = std::max(worst, ref::round_trip_defect(x, xs.coeffs(), a, k));
  }
  CHECK(worst < 1e-9);

  // Omitting the x_0^{-n} factor is visible as soon as x_0 != 1.
  std::vector<double> x{1.7, 0.3, -0.2};
  auto good = invert_series(FormalSeries<double>(x), 1.0, 1);
  CHECK(ref::round_trip_defect(x, good.coeffs(), 1.0, 1) < 1e-12);
  auto bad = good.coeffs();
  for (int i = 1; i <= 2; ++i) bad[i] *= std::pow(x[0], 1.0 + i);
  CHECK(ref::round_trip_defect(x, bad, 1.0, 1) > 1e-3);
  CHECK(find_typo("reversion-prefactor") != nullptr);
}

TEST_CASE("inversion: k-consistency") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u0(0.5, 2.0), ui(-1.0, 1.0), ua(0.2, 3.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> x(8);
    x[0] = u0(rng);
    for (int i = 1; i < 8; ++i) x[i] = ui(rng);
    const double a = ua(rng);
    auto base = invert_series(FormalSeries<double>(x), a, 1).coeffs();
    for (int k = 2; k <= 4; ++k) {
      auto direct = invert_series(FormalSeries<double>(x), a, k).coeffs();
      auto powered = ref::powk(base, k, 7);
      for (int i = 0; i <= 7; ++i)
        CHECK(std::fabs(direct[i] - powered[i]) <= 1e-10 * std::max(1.0, std::fabs(powered[i])));
    }
  }
}

TEST_CASE("inversion: exponential variant") {
  // y*_i = k y_0^{-n} sum_j (n+1)_{j-1} B_ij(y) (-y_0)^{-j}, n = k + a i,
  // with exponential Bell polynomials from the reference recurrence.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u0(0.5, 2.0), ui(-1.0, 1.0);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<double> y(7);
    y[0] = u0(rng);
    for (int i = 1; i < 7; ++i) y[i] = ui(rng);
    const double a = rep % 2 ? 2.0 : 0.5;
    const int k = 1 + rep % 3;
    auto ys = invert_series_exponential(FormalSeries<double>(y), a, k);
    for (int i = 1; i <= 6; ++i) {
      const double n = k + a * i;
      double sum = 0;
      for (int j = 1; j <= i; ++j)
        sum += rising(n + 1, j - 1) * ref::exp_bell(y, i, j) * std::pow(-y[0], -j);
      CHECK(ys[i] == doctest::Approx(k * std::pow(y[0], -n) * sum).epsilon(1e-10));
    }
  }
  // With (ia)! in place of i! the round trip fails for a = 2.
  std::vector<double> x{1.0, 0.5, 0.25};
  auto ys = invert_series_exponential(to_exponential(FormalSeries<double>(x)), 2.0, 1);
  std::vector<double> wrong{ys[0], ys[1] / factorial<double>(2), ys[2] / factorial<double>(4)};
  CHECK(ref::round_trip_defect(x, from_exponential(ys).coeffs(), 2.0, 1) < 1e-12);
  CHECK(ref::round_trip_defect(x, wrong, 2.0, 1) > 1e-3);
  CHECK(find_typo("reversion-exponential-factorial") != nullptr);
}

TEST_CASE("inversion: forward evaluation") {
  FormalSeries<double> x{1.0, 2.0, 3.0};
  CHECK(eval_series(x, 0.5) == doctest::Approx(1.0 + 1.0 + 0.75));
}

}  // TEST_SUITE
