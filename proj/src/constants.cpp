#include "opineq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opineq/error.hpp"

namespace opineq {

namespace {

constexpr long kScanPoints = 4096;
constexpr double kGoldenTolerance = 1e-12;
constexpr double kLimitGuard = 1e-8;

void require_finite_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
    throw DomainError("invalid maximization interval");
}

}  // namespace

ChordCoefficients chord(const ScalarFunctionSpec& f, const SpectralInterval& iv) {
  const double m = iv.lower();
  const double big_m = iv.upper();
  if (iv.degenerate()) throw DomainError("chord is undefined on a single-point interval");
  const double fm = f(m);
  const double fbig = f(big_m);
  return {(fbig - fm) / (big_m - m), (big_m * fm - m * fbig) / (big_m - m)};
}

Maximum grid_maximize(const std::function<double(double)>& g, double lo, double hi,
                      long points) {
  require_finite_interval(lo, hi);
  if (points < 2 || lo == hi) return {lo, g(lo)};
  const double h = (hi - lo) / static_cast<double>(points - 1);
  Maximum best{lo, g(lo)};
  for (long k = 1; k < points; ++k) {
    const double t = k == points - 1 ? hi : lo + static_cast<double>(k) * h;
    const double v = g(t);
    if (v > best.value) best = {t, v};
  }
  return best;
}

Maximum maximize(const std::function<double(double)>& g, double lo, double hi) {
  require_finite_interval(lo, hi);
  if (lo == hi) return {lo, g(lo)};
  const double h = (hi - lo) / static_cast<double>(kScanPoints - 1);
  const Maximum scan = grid_maximize(g, lo, hi, kScanPoints);

  double a = std::max(lo, scan.argmax - h);
  double b = std::min(hi, scan.argmax + h);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > kGoldenTolerance) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - ratio * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + ratio * (b - a);
      gd = g(d);
    }
  }
  const double t = 0.5 * (a + b);
  Maximum refined{t, g(t)};
  for (const Maximum& cand : {Maximum{c, gc}, Maximum{d, gd}, scan})
    if (cand.value > refined.value) refined = cand;
  return refined;
}

double kantorovich_constant(const SpectralInterval& iv) {
  const double m = iv.lower();
  const double big_m = iv.upper();
  return (big_m + m) * (big_m + m) / (4.0 * big_m * m);
}

double generalized_kantorovich(double p, const SpectralInterval& iv) {
  if (!std::isfinite(p)) throw DomainError("exponent must be finite");
  if (iv.degenerate() || std::abs(p - 1.0) < kLimitGuard || std::abs(p) < kLimitGuard)
    return 1.0;
  if (p > 0.0 && p < 1.0)
    throw DomainError("generalized Kantorovich constant is only defined for p >= 1 or p <= 0");
  const double m = iv.lower();
  const double big_m = iv.upper();
  const double mp = std::pow(m, p);
  const double big_mp = std::pow(big_m, p);
  const double cross = m * big_mp - big_m * mp;
  const double lead = cross / ((p - 1.0) * (big_m - m));
  const double base = (p - 1.0) / p * (big_mp - mp) / cross;
  return lead * std::pow(base, p);
}

double alpha_constant(const ScalarFunctionSpec& f, const SpectralInterval& iv) {
  if (iv.degenerate()) return 1.0;
  const double lo = iv.lower();
  const double hi = iv.upper();
  const Maximum neg = maximize([&](double t) { return -f(t); }, lo, hi);
  if (!(-neg.value > 0.0))
    throw DomainError("alpha constant requires " + f.name() + " > 0 on [m, M]");
  const auto line = chord(f, iv);
  return maximize([&](double t) { return line(t) / f(t); }, lo, hi).value;
}

double beta0_constant(const ScalarFunctionSpec& f, const SpectralInterval& iv) {
  if (iv.degenerate()) return 0.0;
  const auto line = chord(f, iv);
  return maximize([&](double t) { return f(t) - line(t); }, iv.lower(), iv.upper()).value;
}

double beta_p_constant(double p, const SpectralInterval& iv) {
  if (!(p >= 1.0 - kLimitGuard)) throw DomainError("beta_p requires p >= 1");
  if (iv.degenerate() || std::abs(p - 1.0) < kLimitGuard) return 0.0;
  const double m = iv.lower();
  const double big_m = iv.upper();
  const double mp = std::pow(m, p);
  const double big_mp = std::pow(big_m, p);
  const double slope = (big_m - m) / (big_mp - mp);
  const double intercept = (m * big_mp - big_m * mp) / (big_mp - mp);
  double t = std::pow(p * slope, p / (1.0 - p));
  t = std::clamp(t, mp, big_mp);
  const double gap = std::pow(t, 1.0 / p) - slope * t - intercept;
  return 2.0 * gap;
}

double mond_pecaric_beta(const ScalarFunctionSpec& f, const SpectralInterval& iv, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("Mond-Pecaric alpha must be >= 0");
  if (iv.degenerate()) return (1.0 - alpha) * f(iv.lower());
  const auto line = chord(f, iv);
  return maximize([&](double t) { return line(t) - alpha * f(t); }, iv.lower(), iv.upper())
      .value;
}

SpectralInterval image_interval(const ScalarFunctionSpec& f, const SpectralInterval& iv) {
  const double lo = iv.lower();
  const double hi = iv.upper();
  const double low = -maximize([&](double t) { return -f(t); }, lo, hi).value;
  const double high = maximize([&](double t) { return f(t); }, lo, hi).value;
  return {low, high};
}

}  // namespace opineq
