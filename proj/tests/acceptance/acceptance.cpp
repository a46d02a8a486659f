// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "opineq/checks.hpp"
#include "opineq/constants.hpp"
#include "opineq/falsifier.hpp"
#include "opineq/functions.hpp"
#include "opineq/generators.hpp"
#include "opineq/means.hpp"
#include "opineq/registry.hpp"
#include "oracles.hpp"

using namespace opineq;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Reference values for T(2, pi/3, pi/4).
const double kReferenceT[2][2] = {{0.0624675, -0.0252995}, {-0.0252995, -0.115758}};
const double kReferenceEig[2] = {-0.11928, 0.0659892};

Outcome counterexample_values() {
  Outcome o;
  const auto start = Clock::now();
  const auto c = counterexample_T(2.0, pi / 3, pi / 4);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto z = c.t(i, j);
      worst = std::max(worst, std::abs(z - kReferenceT[i][j]));
    }
  o.require(worst <= 1e-6, fmt("entry error %.6g", worst));
  const double eig_err =
      std::max(std::abs(c.lambda_min - kReferenceEig[0]), std::abs(c.lambda_max - kReferenceEig[1]));
  o.require(eig_err <= 1e-5, fmt("eigenvalues (%.9g, %.9g), error %.6g", c.lambda_min,
                                 c.lambda_max, eig_err));
  o.require(!c.psd, "T is positive semidefinite");
  o.require(secs < 1.0, fmt("%.3fs", secs));
  return o;
}

Outcome counterexample_consistency() {
  Outcome o;
  const auto c = counterexample_T(2.0, pi / 3, pi / 4);
  const auto& t = c.t.entries();
  const double trace = t.trace().real();
  const double det = t.determinant().real();
  o.require(std::abs(trace - (c.lambda_min + c.lambda_max)) <= 1e-9, "trace");
  o.require(std::abs(det - c.lambda_min * c.lambda_max) <= 1e-9, "determinant");
  o.detail += (o.detail.empty() ? "" : "; ") +
              fmt("trace %.12g, det %.12g", trace, det);
  return o;
}

Outcome falsifier_sensitivity() {
  Outcome o;
  const auto start = Clock::now();
  const auto reports = search_violations("eq11_candidate", FamilyGrid::standard());
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(!reports.empty(), "no violation on the 1152-point grid");
  bool anchored = false;
  for (const auto& r : reports) {
    const auto& w = r.witness;
    if (std::abs(w.at("x").get<double>() - 2.0) < 1e-12 &&
        std::abs(w.at("alpha").get<double>() - pi / 3) < 1e-12 &&
        std::abs(w.at("beta").get<double>() - pi / 4) < 1e-12 &&
        std::abs(r.margin - kReferenceEig[0]) <= 2e-5)
      anchored = true;
  }
  o.require(anchored, "no witness at (2, pi/3, pi/4) with margin near -0.11928");
  o.require(secs < 10.0, fmt("%.3fs", secs));
  if (o.pass) o.detail = fmt("%g reports in %.2fs", static_cast<double>(reports.size()), secs);
  return o;
}

Outcome soundness_sweep() {
  Outcome o;
  SuiteConfig c;
  c.suite = "acceptance";
  c.dims = {2, 3, 4, 5, 6, 7, 8};
  c.trials = 1000;
  c.tol = 1e-9;
  const auto start = Clock::now();
  const auto report = run_suite(c);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  long evaluations = 0;
  for (const auto& s : report.checks) {
    evaluations += s.evaluations;
    o.require(s.failures == 0 && s.errors == 0,
              s.name + fmt(": %g failures, %g errors", static_cast<double>(s.failures),
                           static_cast<double>(s.errors)));
  }
  o.require(secs < 60.0, fmt("%.1fs", secs));
  if (o.pass)
    o.detail = fmt("%g checks, %g evaluations, %.1fs", static_cast<double>(report.checks.size()),
                   static_cast<double>(evaluations), secs);
  return o;
}

Outcome constant_oracles() {
  Outcome o;
  double worst = 0.0;
  const auto agree = [&](const std::string& what, double value, double expected) {
    const double err = std::abs(value - expected);
    worst = std::max(worst, err);
    o.require(err <= 1e-8, what + fmt(" off by %.3g", err));
  };
  const auto pw = [](double p) { return [p](double t) { return std::pow(t, p); }; };

  for (const auto& iv : sweep_intervals()) {
    const double m = iv.lower();
    const double big_m = iv.upper();
    const std::string at = fmt(" on (%g, %g)", m, big_m);

    agree("kantorovich" + at, kantorovich_constant(iv), oracle::kantorovich(m, big_m));
    for (double p : {-1.0, 1.5, 2.0, 3.0})
      agree(fmt("K(%g)", p) + at, generalized_kantorovich(p, iv),
            oracle::generalized_kantorovich(p, m, big_m));
    for (double p : {2.0, 1.5})
      agree(fmt("alpha[t^%g]", p) + at, alpha_constant(catalog::power(p), iv),
            oracle::chord_ratio(pw(p), m, big_m));
    agree("beta0[sqrt]" + at, beta0_constant(catalog::sqrt(), iv),
          oracle::beta0([](double t) { return std::sqrt(t); }, m, big_m));
    for (double p : {1.25, 1.5, 2.0})
      agree(fmt("beta_p(%g)", p) + at, beta_p_constant(p, iv), oracle::beta_p(p, m, big_m));
    for (double alpha : {0.0, 0.5, 1.0, 2.0})
      agree(fmt("mond_pecaric[t^2, %g]", alpha) + at,
            mond_pecaric_beta(catalog::square(), iv, alpha),
            oracle::mond_pecaric_beta(pw(2.0), m, big_m, alpha));
    agree("mond_pecaric[1/t, 1]" + at, mond_pecaric_beta(catalog::power(-1.0), iv, 1.0),
          oracle::mond_pecaric_beta(pw(-1.0), m, big_m, 1.0));

    // Closed forms.
    const double k2 = (big_m + m) * (big_m + m) / (4.0 * big_m * m);
    const double k2_err = std::abs(generalized_kantorovich(2.0, iv) - k2) / k2;
    o.require(k2_err <= 1e-12, "K(2) closed form" + at);
    const double b2 = (big_m - m) * (big_m - m) / (2.0 * (big_m + m));
    const double b2_err = std::abs(beta_p_constant(2.0, iv) - b2) / b2;
    o.require(b2_err <= 1e-10, "beta_2 closed form" + at);
  }
  if (o.pass) o.detail = fmt("max abs deviation from grid oracle %.3g", worst);
  return o;
}

Outcome structural_identities() {
  Outcome o;
  double riccati = 0.0;
  double sym = 0.0;
  double cong = 0.0;
  double sqrt_conn = 0.0;
  double inv_conn = 0.0;
  const SpectralInterval iv(0.25, 4.0);
  for (std::uint64_t t = 0; t < 500; ++t) {
    RandomStream rng(2024, "acceptance-structure", t);
    const Index n = 1 + static_cast<Index>(t % 8);
    const auto a = random_spd(n, iv, rng);
    const auto b = random_spd(n, iv, rng);
    riccati = std::max(riccati, riccati_residual(a, b));

    const auto ab = geometric_mean(a, b);
    sym = std::max(sym, oracle::rel_diff(geometric_mean(b, a), ab));
    CMatrix s = random_unitary(n, rng) * 1.5;
    s(0, 0) += 0.4;
    cong = std::max(cong, oracle::rel_diff(geometric_mean(congruence(s, a), congruence(s, b)),
                                           congruence(s, ab)));
    sqrt_conn =
        std::max(sqrt_conn, oracle::rel_diff(connection(a, b, ConnectionSpec(catalog::sqrt())), ab));
    inv_conn = std::max(
        inv_conn, oracle::rel_diff(connection(a, HermitianMatrix::identity(n),
                                              ConnectionSpec(catalog::square())),
                                   inverse(a)));
  }
  o.require(riccati <= 1e-9, fmt("riccati residual %.3g", riccati));
  o.require(sym <= 1e-8, fmt("symmetry %.3g", sym));
  o.require(cong <= 1e-8, fmt("congruence %.3g", cong));
  o.require(sqrt_conn <= 1e-10, fmt("sqrt connection %.3g", sqrt_conn));
  o.require(inv_conn <= 1e-9, fmt("t^2 connection %.3g", inv_conn));
  if (o.pass)
    o.detail = fmt("riccati %.2g, symmetry %.2g, congruence %.2g", riccati, sym, cong);
  return o;
}

Outcome tightness_trend() {
  Outcome o;
  const double m = 1.0;
  std::vector<double> margins;
  for (int k = 1; k <= 10; ++k) {
    const SpectralInterval iv(m, m * (1.0 + std::ldexp(1.0, -k)));
    RandomStream rng(7, "acceptance-tightness");
    const Index n = 4;
    CheckInstance inst(random_spd(n, iv, rng), PositiveMap::identity(n), iv);
    margins.push_back(check_kantorovich(inst).margin);
  }
  for (std::size_t i = 1; i < margins.size(); ++i)
    o.require(margins[i] < margins[i - 1], fmt("margin not decreasing at k = %g", double(i + 1)));
  o.require(margins.back() < 1e-4, fmt("final margin %.3g", margins.back()));
  if (o.pass) o.detail = fmt("margins %.3g -> %.3g", margins.front(), margins.back());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"counterexample T(2, pi/3, pi/4) matches reference values", counterexample_values},
      {"counterexample trace/determinant consistency", counterexample_consistency},
      {"falsifier finds candidate violation on the rotation grid", falsifier_sensitivity},
      {"soundness sweep, 1000 trials, dims 2-8", soundness_sweep},
      {"constants agree with grid oracle", constant_oracles},
      {"geometric mean and connection identities", structural_identities},
      {"Kantorovich margin tightens as M -> m", tightness_trend},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s  [%s]\n", index, o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
