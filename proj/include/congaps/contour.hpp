#pragma once

#include <vector>

#include <json.hpp>

namespace congaps {

inline constexpr double kDefaultCbar = 1.0 / 6.41;

struct HankelParams {
  double X = 0.0;
  double beta = 0.5;
  double eta = 0.0;
  double r = 0.0;
  double kappa = 0.0;
  double T = 0.0;
  double cbar = kDefaultCbar;

  // kappa = 1 + 1/log X, T = exp((cbar log X)^{1/2} / 4), eta = cbar / (2 log T),
  // r = min(eta, kappa - 1) / 2.
  static HankelParams defaults(double X, double beta, double cbar = kDefaultCbar);
  void validate() const;
};

struct HankelResult {
  double total = 0.0;
  double segments = 0.0;  // both slit edges
  double circle = 0.0;
  double closed_form = 0.0;  // X (log X)^{beta - 1} / Gamma(beta)
  double rel_deviation = 0.0;
  double envelope = 0.0;  // 2 X^{-eta}
  double quad_error = 0.0;
};

struct QuadTargets {
  double rel = 1e-10;
  double abs = 1e-10;
};

// (1/2 pi i) over the truncated Hankel contour of X^s (s - 1)^{-beta}.
HankelResult hankel_evaluate(const HankelParams& p, QuadTargets targets = {});
double hankel_main(const HankelParams& p);

// (1/2 pi i) over |s - 1| = r, counterclockwise from arg -pi, of
// X^s (s - 1)^{-beta}; beta in (0, 1]. For beta = 1 this is the residue X.
double hankel_circle(double X, double beta, double r, QuadTargets targets = {});

struct IncompleteGammaCheck {
  double value = 0.0;         // int_0^{u_max} e^{-u} u^{-beta} du
  double gamma_target = 0.0;  // Gamma(1 - beta)
  double envelope = 0.0;      // e^{-u_max} u_max^{1 - beta}
};
IncompleteGammaCheck incomplete_gamma_check(double beta, double u_max);

// |Gamma(theta) Gamma(1 - theta) - pi / sin(pi theta)|.
double gamma_reflection_check(double theta);

struct PerronResult {
  double integral = 0.0;
  double partial_sum = 0.0;
  double error = 0.0;  // integral - partial_sum
  double quad_error = 0.0;
  std::size_t panels = 0;
};

inline constexpr std::size_t kPerronPanelBudget = 20'000'000;

// (1/2 pi i) int_{kappa - iT}^{kappa + iT} F(s) X^s / s ds for the finite
// Dirichlet polynomial F(s) = sum_n coeffs[n-1] n^{-s}, against the partial
// sum of coefficients up to X.
PerronResult perron_check(const std::vector<double>& coeffs, double X, double T, double kappa);

nlohmann::ordered_json to_json(const HankelParams& p, const HankelResult& r);
nlohmann::ordered_json to_json(const PerronResult& r);

}  // namespace congaps
