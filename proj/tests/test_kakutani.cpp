#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mdim/info.hpp"
#include "mdim/kakutani.hpp"

using namespace mdim;

TEST_CASE("hellinger_sq_coupled closed form") {
  CHECK(hellinger_sq_coupled(0.0) == 0.0);
  CHECK(hellinger_sq_coupled(1.0) ==
        doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hellinger_sq_coupled(0.5) ==
        doctest::Approx(0.06814834742186343).epsilon(1e-12));
  CHECK_THROWS_AS(hellinger_sq_coupled(1.5), std::out_of_range);
}

TEST_CASE("closed form matches the 4-symbol Hellinger distance") {
  for (int g = 0; g <= 1000; ++g) {
    double rho = -1.0 + 2.0 * double(g) / 1000.0;
    JointPmf coupled = rho_joint(rho);
    auto [m1, m2] = marginals(coupled);
    double h = hellinger(product(m1, m2).flatten(), coupled.flatten());
    CHECK(std::abs(hellinger_sq_coupled(rho) - h * h) < 1e-12);
  }
}

TEST_CASE("small-rho expansion bound: H^2 in [rho^2/4, rho^2/2]") {
  // sqrt(1+x)+sqrt(1-x) = 2 - x^2/4 - 5x^4/64 - ..., so the quadratic
  // coefficient is 1/4 and higher terms only push the value up
  for (int g = 1; g <= 1000; ++g) {
    double rho = 0.9 * double(g) / 1000.0;
    double h2 = hellinger_sq_coupled(rho);
    CHECK(h2 >= rho * rho / 4.0);
    CHECK(h2 <= rho * rho / 2.0);
  }
}

TEST_CASE("partial sums") {
  SUBCASE("zero schedule") {
    auto s = hellinger_partial_sums(RhoSchedule::constant(0.0), 100);
    for (double v : s) CHECK(v == 0.0);
  }
  SUBCASE("nondecreasing") {
    auto s = hellinger_partial_sums(RhoSchedule::inverse_sqrt(2), 10000);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] >= s[i - 1]);
  }
  SUBCASE("inverse-sqrt final sum matches direct summation") {
    std::size_t n = 1000000;
    auto s = hellinger_partial_sums(RhoSchedule::inverse_sqrt(2), n);
    long double direct = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      long double rho = 1.0L / std::sqrt((long double)(i) + 2.0L);
      direct += 2.0L - std::sqrt(1.0L + rho) - std::sqrt(1.0L - rho);
    }
    CHECK(s.back() == doctest::Approx(double(direct)).epsilon(1e-9));
    // leading-order size: a quarter of the harmonic sum
    long double harmonic = 0.0L;
    for (std::size_t i = 0; i < n; ++i) harmonic += 1.0L / ((long double)i + 2.0L);
    CHECK(s.back() > double(harmonic) / 4.0);
    CHECK(s.back() < double(harmonic) / 2.0);
  }
  SUBCASE("geometric sums stay bounded") {
    auto s = hellinger_partial_sums(RhoSchedule::geometric(0.5, 0.5), 10000);
    // bounded by sum rho_0^2 r^2n / 2
    double bound = 0.5 * 0.25 / (1.0 - 0.25);
    CHECK(s.back() <= bound);
  }
}

TEST_CASE("classify_schedule") {
  CHECK(classify_schedule(RhoSchedule::inverse_sqrt(2)).tag ==
        DichotomyVerdict::Tag::SumDiverges);
  CHECK(classify_schedule(RhoSchedule::harmonic(1)).tag ==
        DichotomyVerdict::Tag::SumConverges);
  CHECK(classify_schedule(RhoSchedule::constant(0.0)).tag ==
        DichotomyVerdict::Tag::SumConverges);
  CHECK(classify_schedule(RhoSchedule::constant(0.7)).tag ==
        DichotomyVerdict::Tag::SumDiverges);
  CHECK(classify_schedule(RhoSchedule::geometric(0.9, 0.99)).tag ==
        DichotomyVerdict::Tag::SumConverges);
  CHECK(classify_schedule(RhoSchedule::explicit_list({0.9, 0.5}, 0.0)).tag ==
        DichotomyVerdict::Tag::SumConverges);
  CHECK(classify_schedule(RhoSchedule::explicit_list({0.0}, 0.25)).tag ==
        DichotomyVerdict::Tag::SumDiverges);

  DichotomyVerdict v = classify_schedule(RhoSchedule::inverse_sqrt(2), 100);
  CHECK(v.partial_sums.size() == 100);
  CHECK(v.interpretation.find("not independently random") !=
        std::string::npos);
}

TEST_CASE("divergent partial sums pass any fixed threshold") {
  // threshold 10 for inverse-sqrt; at leading order the sum needs
  // exp(40)-ish terms, so certify via the harmonic lower bound instead of
  // brute force: sum_{n<N} H^2 >= (1/4) sum 1/(n+2) -> unbounded.
  auto s = hellinger_partial_sums(RhoSchedule::inverse_sqrt(2), 2000000);
  long double harmonic = 0.0L;
  for (std::size_t i = 0; i < 2000000; ++i)
    harmonic += 1.0L / ((long double)i + 2.0L);
  CHECK(s.back() >= double(harmonic) / 4.0);
  CHECK(s.back() > 3.5);  // already past the convergent families' plateaus
}

TEST_CASE("strong positivity margin") {
  SUBCASE("uniform constant") {
    auto m = strong_positivity_margin(MeasureSeq::constant(Pmf::uniform(2)),
                                      1000);
    CHECK(m.empirical_min == 0.5);
    REQUIRE(m.analytic_inf.has_value());
    CHECK(*m.analytic_inf == 0.5);
  }
  SUBCASE("rho constant 0.5") {
    auto m = strong_positivity_margin(
        MeasureSeq::rho_family(RhoSchedule::constant(0.5)), 1000);
    CHECK(m.empirical_min == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(*m.analytic_inf == doctest::Approx(0.125).epsilon(1e-15));
  }
  SUBCASE("rho 1 is not strongly positive") {
    auto m = strong_positivity_margin(
        MeasureSeq::rho_family(RhoSchedule::constant(1.0)), 10);
    CHECK(m.empirical_min == 0.0);
    CHECK(*m.analytic_inf == 0.0);
  }
  SUBCASE("inverse-sqrt margin") {
    auto m = strong_positivity_margin(
        MeasureSeq::rho_family(RhoSchedule::inverse_sqrt(2)), 100);
    CHECK(m.empirical_min ==
          doctest::Approx((1.0 - 1.0 / std::sqrt(2.0)) / 4.0).epsilon(1e-12));
    CHECK(*m.analytic_inf ==
          doctest::Approx((1.0 - 1.0 / std::sqrt(2.0)) / 4.0).epsilon(1e-12));
  }
}
