#include "congaps/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "congaps/constants.hpp"
#include "congaps/error.hpp"
#include "congaps/quadrature.hpp"
#include "congaps/report.hpp"

namespace congaps {

using std::numbers::pi;

HankelParams HankelParams::defaults(double X, double beta, double cbar) {
  if (!(X > std::numbers::e)) throw DomainError("HankelParams: X must exceed e");
  HankelParams p;
  p.X = X;
  p.beta = beta;
  p.cbar = cbar;
  const double log_x = std::log(X);
  p.kappa = 1.0 + 1.0 / log_x;
  p.T = std::exp(0.25 * std::sqrt(cbar * log_x));
  p.eta = cbar / (2.0 * std::log(p.T));
  p.r = 0.5 * std::min(p.eta, p.kappa - 1.0);
  return p;
}

void HankelParams::validate() const {
  if (!(X > std::numbers::e)) throw DomainError("HankelParams: X must exceed e");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("HankelParams: beta must lie in (0, 1)");
  if (!(eta > 0.0)) throw DomainError("HankelParams: eta must be > 0");
  if (!(r > 0.0 && r < eta)) throw DomainError("HankelParams: need 0 < r < eta");
  if (!(kappa > 1.0)) throw DomainError("HankelParams: kappa must exceed 1");
}

double hankel_circle(double X, double beta, double r, QuadTargets targets) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("hankel_circle: beta must lie in (0, 1]");
  if (!(r > 0.0)) throw DomainError("hankel_circle: r must be > 0");
  const double rl = r * std::log(X);
  const double phase = 1.0 - beta;
  const auto q = integrate([&](double th) { return std::exp(rl * std::cos(th)) * std::cos(rl * std::sin(th) + phase * th); },
                           -pi, pi, targets.rel, targets.abs);
  return X * std::pow(r, 1.0 - beta) * q.value / (2.0 * pi);
}

HankelResult hankel_evaluate(const HankelParams& p, QuadTargets targets) {
  p.validate();
  const double log_x = std::log(p.X);
  const double a = 1.0 - p.beta;
  // sigma = v^{1/a} removes the sigma^{-beta} endpoint singularity:
  // sigma^{-beta} d sigma = dv / a.
  auto integrand = [&](double v) { return std::exp(-log_x * std::pow(v, 1.0 / a)) / a; };
  const auto seg = integrate(integrand, std::pow(p.r, a), std::pow(p.eta, a), targets.rel, targets.abs);

  HankelResult out;
  out.segments = std::sin(pi * p.beta) / pi * p.X * seg.value;
  out.circle = hankel_circle(p.X, p.beta, p.r, targets);
  out.total = out.segments + out.circle;
  out.closed_form = p.X * std::pow(log_x, p.beta - 1.0) / gamma_function(p.beta);
  out.rel_deviation = std::abs(out.total - out.closed_form) / out.closed_form;
  out.envelope = 2.0 * std::pow(p.X, -p.eta);
  out.quad_error = std::sin(pi * p.beta) / pi * p.X * seg.error;
  return out;
}

double hankel_main(const HankelParams& p) { return hankel_evaluate(p).total; }

IncompleteGammaCheck incomplete_gamma_check(double beta, double u_max) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("incomplete_gamma_check: beta must lie in (0, 1)");
  if (!(u_max > 1.0)) throw DomainError("incomplete_gamma_check: u_max must exceed 1");
  const double a = 1.0 - beta;
  // [0, 1] by the series sum (-1)^n / (n! (n + a)); [1, u_max] is smooth.
  double head = 0.0, fact = 1.0;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) fact *= n;
    head += (n % 2 ? -1.0 : 1.0) / (fact * (n + a));
  }
  const auto q = integrate([&](double u) { return std::exp(-u) * std::pow(u, -beta); }, 1.0, u_max, 1e-13, 1e-15);
  return {head + q.value, gamma_function(a), std::exp(-u_max) * std::pow(u_max, a)};
}

double gamma_reflection_check(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("gamma_reflection_check: theta must lie in (0, 1)");
  return std::abs(gamma_function(theta) * gamma_function(1.0 - theta) - pi / std::sin(pi * theta));
}

PerronResult perron_check(const std::vector<double>& coeffs, double X, double T, double kappa) {
  if (coeffs.empty()) throw DomainError("perron_check: need at least one coefficient");
  if (!(X > 0.0) || X == std::floor(X)) throw DomainError("perron_check: X must be positive and non-integer");
  if (!(T > 0.0)) throw DomainError("perron_check: T must be > 0");
  if (!(kappa > 1.0)) throw DomainError("perron_check: kappa must exceed 1");

  const std::size_t n_terms = coeffs.size();
  std::vector<double> freq(n_terms), weight(n_terms);
  double max_freq = 0.0;
  for (std::size_t i = 0; i < n_terms; ++i) {
    freq[i] = std::log(X / static_cast<double>(i + 1));
    weight[i] = coeffs[i] * std::pow(X / static_cast<double>(i + 1), kappa);
    max_freq = std::max(max_freq, std::abs(freq[i]));
  }
  // Re[(X/n)^{kappa + i tau} / (kappa + i tau)] summed over n.
  auto integrand = [&](double tau) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i) {
      const double w = tau * freq[i];
      acc += weight[i] * (kappa * std::cos(w) + tau * std::sin(w));
    }
    return acc / (kappa * kappa + tau * tau);
  };

  // Dyadic blocks [0,1], [1,2], [2,4], ... each cut into panels no wider than
  // a quarter period of the fastest oscillation.
  const double panel_width = std::min(1.0, 0.5 * pi / std::max(max_freq, 1e-12));
  if (T / panel_width > static_cast<double>(kPerronPanelBudget))
    throw NumericError("perron_check: oscillation needs " + format_double(T / panel_width) +
                       " panels, above the budget of " + std::to_string(kPerronPanelBudget));
  PerronResult out;
  double lo = 0.0;
  double hi = std::min(1.0, T);
  while (lo < T) {
    const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / panel_width));
    const double h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t k = 0; k < panels; ++k) {
      const double x0 = lo + h * static_cast<double>(k);
      const double x1 = k + 1 == panels ? hi : x0 + h;
      const auto q = integrate(integrand, x0, x1, 1e-10, 1e-12, 12);
      out.integral += q.value;
      out.quad_error += q.error;
    }
    out.panels += panels;
    lo = hi;
    hi = std::min(2.0 * hi, T);
  }
  out.integral /= pi;
  out.quad_error /= pi;
  for (std::size_t i = 0; i < n_terms && static_cast<double>(i + 1) <= X; ++i) out.partial_sum += coeffs[i];
  out.error = out.integral - out.partial_sum;
  return out;
}

nlohmann::ordered_json to_json(const HankelParams& p, const HankelResult& r) {
  nlohmann::ordered_json j;
  j["mode"] = "hankel";
  j["inputs"] = {{"X", p.X}, {"beta", p.beta}, {"eta", p.eta}, {"r", p.r},
                 {"kappa", p.kappa}, {"T", p.T}, {"cbar", p.cbar}};
  j["total"] = r.total;
  j["segments"] = r.segments;
  j["circle"] = r.circle;
  j["closed_form"] = r.closed_form;
  j["rel_deviation"] = r.rel_deviation;
  j["envelope"] = r.envelope;
  j["quad_error"] = r.quad_error;
  return j;
}

nlohmann::ordered_json to_json(const PerronResult& r) {
  nlohmann::ordered_json j;
  j["integral"] = r.integral;
  j["partial_sum"] = r.partial_sum;
  j["error"] = r.error;
  j["quad_error"] = r.quad_error;
  j["panels"] = r.panels;
  return j;
}

}  // namespace congaps
