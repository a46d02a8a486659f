#pragma once

// Test-side oracles. Nothing here calls the constants or eigensolver code
// under test: maxima come from a plain dense grid and spectra from Eigen.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>

#include "opineq/hermitian.hpp"

namespace oracle {

inline constexpr long kGridPoints = 1'000'000;

inline double grid_max(const std::function<double(double)>& g, double lo, double hi,
                       long points = kGridPoints) {
  double best = g(lo);
  for (long k = 1; k < points; ++k) {
    const double t = k == points - 1 ? hi : lo + (hi - lo) * static_cast<double>(k) /
                                                    static_cast<double>(points - 1);
    best = std::max(best, g(t));
  }
  return best;
}

struct Line {
  double slope;
  double intercept;
  double operator()(double t) const { return slope * t + intercept; }
};

inline Line secant(const std::function<double(double)>& f, double m, double big_m) {
  const double slope = (f(big_m) - f(m)) / (big_m - m);
  return {slope, f(m) - slope * m};
}

/// max chord/f, the ratio form shared by the Kantorovich-type constants.
inline double chord_ratio(const std::function<double(double)>& f, double m, double big_m) {
  const auto line = secant(f, m, big_m);
  return grid_max([&](double t) { return line(t) / f(t); }, m, big_m);
}

inline double kantorovich(double m, double big_m) {
  return chord_ratio([](double t) { return 1.0 / t; }, m, big_m);
}

inline double generalized_kantorovich(double p, double m, double big_m) {
  return chord_ratio([p](double t) { return std::pow(t, p); }, m, big_m);
}

inline double beta0(const std::function<double(double)>& f, double m, double big_m) {
  const auto line = secant(f, m, big_m);
  return grid_max([&](double t) { return f(t) - line(t); }, m, big_m);
}

inline double beta_p(double p, double m, double big_m) {
  const double lo = std::pow(m, p);
  const double hi = std::pow(big_m, p);
  return 2.0 * beta0([p](double s) { return std::pow(s, 1.0 / p); }, lo, hi);
}

inline double mond_pecaric_beta(const std::function<double(double)>& f, double m, double big_m,
                                double alpha) {
  const auto line = secant(f, m, big_m);
  return grid_max([&](double t) { return line(t) - alpha * f(t); }, m, big_m);
}

inline Eigen::VectorXd eigenvalues(const opineq::HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<opineq::CMatrix> es(a.entries(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline double lambda_min(const opineq::HermitianMatrix& a) { return oracle::eigenvalues(a)(0); }

// max_ij |a_ij - b_ij|.
inline double max_abs_diff(const opineq::CMatrix& a, const opineq::CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Relative Frobenius distance, |a - b| / max(1, |b|).
inline double rel_diff(const opineq::HermitianMatrix& a, const opineq::HermitianMatrix& b) {
  return (a.entries() - b.entries()).norm() / std::max(1.0, b.frobenius_norm());
}

}  // namespace oracle
