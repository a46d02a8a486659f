#pragma once

#include <functional>

#include "opineq/functions.hpp"
#include "opineq/hermitian.hpp"

namespace opineq {

/// Line through (m, f(m)) and (M, f(M)).
struct ChordCoefficients {
  double slope;
  double intercept;

  double operator()(double t) const { return slope * t + intercept; }
};

/// Throws DomainError for a degenerate interval, where the chord is undefined.
ChordCoefficients chord(const ScalarFunctionSpec& f, const SpectralInterval& iv);

struct Maximum {
  double argmax;
  double value;
};

/// Global maximum of a smooth function on [lo, hi]: a 4096-point uniform scan
/// locates the best sample, golden-section search refines it to 1e-12 in t.
Maximum maximize(const std::function<double(double)>& g, double lo, double hi);

/// Plain maximum over `points` equispaced samples, endpoints included.
Maximum grid_maximize(const std::function<double(double)>& g, double lo, double hi,
                      long points);

/// (M+m)^2 / (4Mm).
double kantorovich_constant(const SpectralInterval& iv);

/// K(p,m,M). Returns the limit value 1 when m == M or p is within 1e-8 of 0
/// or 1. Throws DomainError for 0 < p < 1, where the constant is not used.
double generalized_kantorovich(double p, const SpectralInterval& iv);

/// max over [m,M] of chord(t) / f(t).
double alpha_constant(const ScalarFunctionSpec& f, const SpectralInterval& iv);

/// max over [m,M] of f(t) - chord(t).
double beta0_constant(const ScalarFunctionSpec& f, const SpectralInterval& iv);

/// 2 * beta0[t^{1/p}; m^p, M^p], evaluated from the stationary point of the
/// concave gap function. p == 1 and m == M give 0.
double beta_p_constant(double p, const SpectralInterval& iv);

/// max over [m,M] of chord(t) - alpha f(t).
double mond_pecaric_beta(const ScalarFunctionSpec& f, const SpectralInterval& iv, double alpha);

/// (min f, max f) over [m, M], located with maximize().
SpectralInterval image_interval(const ScalarFunctionSpec& f, const SpectralInterval& iv);

}  // namespace opineq
