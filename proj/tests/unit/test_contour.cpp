#include <doctest.h>

#include <cmath>
#include <numbers>

#include "congaps/constants.hpp"
#include "congaps/contour.hpp"
#include "congaps/error.hpp"

using namespace congaps;

TEST_CASE("Hankel integral matches the closed form") {
  auto p = HankelParams::defaults(std::exp(10.0), 0.5);
  p.eta = 0.2;
  p.r = 0.05;
  const auto r = hankel_evaluate(p);
  CHECK(r.closed_form == doctest::Approx(std::exp(10.0) * std::pow(10.0, -0.5) / std::sqrt(std::numbers::pi)));
  CHECK(r.rel_deviation <= 2.0 * std::exp(-10.0 * 0.2));
  CHECK(r.envelope == doctest::Approx(2.0 * std::exp(-2.0)));
}

TEST_CASE("Hankel integral with a long slit") {
  for (double beta : {0.25, 0.5, 0.75}) {
    auto p = HankelParams::defaults(std::exp(20.0), beta);
    p.eta = 1.0;
    p.r = 0.02;
    CHECK(hankel_evaluate(p).rel_deviation < 1e-6);
  }
}

TEST_CASE("total does not depend on the circle radius") {
  auto p = HankelParams::defaults(std::exp(12.0), 0.5);
  p.eta = 0.5;
  double prev = 0.0;
  for (double r : {0.01, 0.03, 0.1, 0.2}) {
    p.r = r;
    const double total = hankel_main(p);
    if (prev != 0.0) CHECK(total == doctest::Approx(prev).epsilon(1e-8));
    prev = total;
  }
}

TEST_CASE("total does not depend on the quadrature targets") {
  auto p = HankelParams::defaults(std::exp(12.0), 0.25);
  p.eta = 0.5;
  p.r = 0.05;
  const double loose = hankel_evaluate(p, {.rel = 1e-8, .abs = 1e-8}).total;
  const double tight = hankel_evaluate(p, {.rel = 1e-12, .abs = 1e-12}).total;
  CHECK(loose == doctest::Approx(tight).epsilon(1e-7));
}

TEST_CASE("beta = 1 circle is the residue") {
  for (double X : {10.0, 1e3, 1e6}) CHECK(hankel_circle(X, 1.0, 0.1) == doctest::Approx(X).epsilon(1e-10));
}

TEST_CASE("invalid Hankel parameters") {
  auto p = HankelParams::defaults(std::exp(10.0), 0.5);
  p.r = p.eta * 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(hankel_circle(10.0, 1.5, 0.1), DomainError);
}

TEST_CASE("incomplete gamma") {
  CHECK(std::abs(incomplete_gamma_check(0.5, 20).value - std::sqrt(std::numbers::pi)) < 1e-7);
  CHECK(std::abs(incomplete_gamma_check(0.25, 30).value - gamma_function(0.75)) < 1e-10);
  const double d5 = std::abs(incomplete_gamma_check(0.5, 5).value - std::sqrt(std::numbers::pi));
  const double d10 = std::abs(incomplete_gamma_check(0.5, 10).value - std::sqrt(std::numbers::pi));
  CHECK(d10 < d5);
}

TEST_CASE("gamma reflection") {
  CHECK(gamma_reflection_check(0.5) < 1e-12);
  CHECK(gamma_reflection_check(1.0 / 3.0) < 1e-10);
  CHECK(gamma_reflection_check(1.0 / 6.0) < 1e-10);
}

TEST_CASE("Perron formula") {
  const std::vector<double> ones(20, 1.0);
  const auto r = perron_check(ones, 10.5, 1e4, 1.0 + 1.0 / std::log(10.5));
  CHECK(r.partial_sum == 10.0);
  CHECK(std::abs(r.error) < 0.01);

  const auto single = perron_check({1.0}, 1.5, 1e4, 1.5);
  CHECK(single.partial_sum == 1.0);
  CHECK(std::abs(single.error) < 1e-3);

  // Decades: at most one non-monotone step.
  std::vector<double> errs;
  for (double T : {1e2, 1e3, 1e4, 1e5}) errs.push_back(std::abs(perron_check(ones, 10.5, T, 1.2).error));
  int rises = 0;
  for (std::size_t i = 1; i < errs.size(); ++i) rises += errs[i] > errs[i - 1];
  CHECK(rises <= 1);
  CHECK(errs.back() < errs.front());

  // Doubling T the error changes sign, so only the X log X / T envelope is monotone.
  const double xlogx = 10.5 * std::log(10.5);
  double early = 0.0, late = 0.0;
  int k = 0;
  for (double T = 100; T <= 1e5; T *= 2, ++k) {
    const double e = std::abs(perron_check(ones, 10.5, T, 1.2).error);
    CHECK(e <= xlogx / T);
    (k < 3 ? early : late) += k < 3 || k >= 7 ? e : 0.0;
  }
  CHECK(late < early);

  CHECK_THROWS_AS(perron_check(ones, 10.0, 100, 1.2), DomainError);
  CHECK_THROWS_AS(perron_check(ones, 10.5, 100, 1.0), DomainError);
  CHECK_THROWS_AS(perron_check({}, 10.5, 100, 1.2), DomainError);
  CHECK_THROWS_AS(perron_check(ones, 10.5, 1e12, 1.2), NumericError);
}
