#include "opineq/registry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "opineq/constants.hpp"
#include "opineq/error.hpp"
#include "opineq/generators.hpp"
#include "opineq/json_io.hpp"

namespace opineq {

using nlohmann::json;

const std::vector<SpectralInterval>& sweep_intervals() {
  static const std::vector<SpectralInterval> ivs = {{1.0, 2.0}, {1.0, 4.0}, {0.5, 3.0}};
  return ivs;
}

namespace {

SpectralInterval draw_interval(RandomStream& rng, const std::vector<SpectralInterval>& choices) {
  return choices[rng.below(choices.size())];
}

struct Draw {
  SpectralInterval iv;
  HermitianMatrix a;
  PositiveMap phi;
};

Draw draw_standard(RandomStream& rng, Index dim, MapFamily family = MapFamily::kAny) {
  const auto iv = draw_interval(rng, sweep_intervals());
  auto a_rng = rng.substream("A");
  auto phi_rng = rng.substream("phi");
  auto a = random_spd(dim, iv, a_rng);
  auto phi = random_unital_map(dim, phi_rng, family);
  return {iv, std::move(a), std::move(phi)};
}

CheckInstance standard_instance(RandomStream& rng, Index dim) {
  auto d = draw_standard(rng, dim);
  return {std::move(d.a), std::move(d.phi), d.iv};
}

VectorState draw_state(RandomStream& rng, Index dim) {
  auto x_rng = rng.substream("x");
  return VectorState(random_unit_vector(dim, x_rng));
}

HermitianMatrix draw_b(RandomStream& rng, Index dim, const SpectralInterval& iv) {
  auto b_rng = rng.substream("B");
  return random_spd(dim, iv, b_rng);
}

/// B = A^{1/2} D A^{1/2} with spectrum(D) in [lo, hi], so lo A <= B <= hi A.
HermitianMatrix transported_b(RandomStream& rng, const HermitianMatrix& a, double lo, double hi) {
  auto d_rng = rng.substream("D");
  const auto d = random_spd(a.dim(), SpectralInterval(lo, hi), d_rng);
  return sandwich(sqrt(a), d);
}

double variant_number(const CheckVariant& v, const char* key) { return v.params.at(key).get<double>(); }

std::string variant_string(const CheckVariant& v, const char* key) {
  return v.params.at(key).get<std::string>();
}

std::vector<CheckVariant> single() { return {CheckVariant{"default", json::object()}}; }

std::vector<CheckVariant> function_variants(std::initializer_list<const char*> names) {
  std::vector<CheckVariant> out;
  for (const char* n : names) out.push_back({std::string("f=") + n, {{"function", n}}});
  return out;
}

std::vector<CheckVariant> number_variants(const char* key, std::initializer_list<double> values) {
  std::vector<CheckVariant> out;
  for (double v : values) {
    json p;
    p[key] = v;
    out.push_back({std::string(key) + "=" + json(v).dump(), std::move(p)});
  }
  return out;
}

template <class F>
std::function<std::vector<CheckResult>(const CheckInstance&, double)> one(F f) {
  return [f](const CheckInstance& inst, double tol) { return std::vector<CheckResult>{f(inst, tol)}; };
}

template <class F>
std::function<std::vector<CheckResult>(const CheckInstance&, double)> two(F f) {
  return [f](const CheckInstance& inst, double tol) {
    auto [first, second] = f(inst, tol);
    return std::vector<CheckResult>{std::move(first), std::move(second)};
  };
}

CheckInstance with_function_of(CheckInstance inst, const CheckVariant& v) {
  inst.with_function(catalog::by_name(variant_string(v, "function")));
  return inst;
}

CheckPair tuple_from_instance(const CheckInstance& inst, double tol) {
  const auto* sum = std::get_if<DirectSum>(&inst.phi().variant());
  if (sum == nullptr) throw HypothesisError("tuple Minkowski needs a direct-sum map");
  std::vector<HermitianMatrix> as;
  std::vector<HermitianMatrix> bs;
  std::vector<PositiveMap> phis;
  for (std::size_t i = 0; i < sum->components.size(); ++i) {
    const Index k = sum->components[i]->input_dim();
    const Index off = sum->offsets[i];
    as.push_back(HermitianMatrix::hermitian_part(inst.a().entries().block(off, off, k, k)));
    bs.push_back(HermitianMatrix::hermitian_part(inst.b().entries().block(off, off, k, k)));
    phis.push_back(*sum->components[i]);
  }
  return check_tuple_minkowski(as, bs, phis, inst.iv(), sum->weights, tol);
}

std::vector<CheckEntry> build_registry() {
  std::vector<CheckEntry> r;

  r.push_back({"choi_davis", "f(Phi(A)) <= Phi(f(A)) for operator convex f", true, false,
               function_variants({"pow(2)", "pow(-1)", "pow(1.5)"}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 return with_function_of(standard_instance(rng, dim), v);
               },
               one([](const CheckInstance& i, double t) { return check_choi_davis(i, t); })});

  r.push_back({"kantorovich", "Phi(A^-1) <= (M+m)^2/(4Mm) Phi(A)^-1", true, true, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 return standard_instance(rng, dim);
               },
               one([](const CheckInstance& i, double t) { return check_kantorovich(i, t); })});

  r.push_back({"kantorovich_squared", "Phi(A^2) <= (M+m)^2/(4Mm) Phi(A)^2", true, true, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 return standard_instance(rng, dim);
               },
               one([](const CheckInstance& i, double t) {
                 return check_kantorovich_squared(i, t);
               })});

  r.push_back({"kantorovich_sharp", "Phi(A^-1) # Phi(A) <= (M+m)/(2 sqrt(Mm)) I", true, true,
               single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 return standard_instance(rng, dim);
               },
               one([](const CheckInstance& i, double t) { return check_kantorovich_sharp(i, t); })});

  r.push_back({"refinement",
               "Phi(A^-1) # Phi(A) <= |(Phi(A)^1/2 Phi(A^-1) Phi(A)^1/2)^1/2| I "
               "<= (M+m)/(2 sqrt(Mm)) I",
               true, true, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 return standard_instance(rng, dim);
               },
               two([](const CheckInstance& i, double t) { return check_refinement(i, t); })});

  r.push_back({"power_inner_product", "<Ax,x>^r <= <A^r x,x> for r >= 1 or r < 0", true, false,
               number_variants("r", {1.0, 2.0, 3.0, -1.0}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 const auto iv = draw_interval(rng, sweep_intervals());
                 auto a_rng = rng.substream("A");
                 CheckInstance inst(random_spd(dim, iv, a_rng), PositiveMap::identity(dim), iv);
                 inst.with_state(draw_state(rng, dim)).with_exponent(variant_number(v, "r"));
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_power_inner_product(i, t);
               })});

  r.push_back({"ando", "Phi(A # B) <= Phi(A) # Phi(B)", true, false, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_b(draw_b(rng, dim, inst.iv()));
                 return inst;
               },
               one([](const CheckInstance& i, double t) { return check_ando(i, t); })});

  r.push_back({"ando_connection", "Phi(A s_f B) <= Phi(A) s_f Phi(B) for an operator mean f", true,
               false, function_variants({"pow(0.5)", "pow(0.25)", "pow(1)"}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = with_function_of(standard_instance(rng, dim), v);
                 inst.with_b(draw_b(rng, dim, inst.iv()));
                 return inst;
               },
               one([](const CheckInstance& i, double t) { return check_ando_connection(i, t); })});

  r.push_back({"reverse_ando_convex",
               "Phi(A) s_f Phi(B) <= Phi(A s_f B) for operator convex f > 0", true, false,
               function_variants({"pow(2)", "pow(1.5)", "pow(-1)"}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = with_function_of(standard_instance(rng, dim), v);
                 inst.with_b(draw_b(rng, dim, inst.iv()));
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_reverse_ando_convex(i, t);
               })});

  r.push_back({"reverse_ando_sandwich",
               "Phi(A) # Phi(B) <= (M+m)/(2 sqrt(mM)) Phi(A # B) given m^2 A <= B <= M^2 A", true,
               false, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 auto inst = standard_instance(rng, dim);
                 const double m = inst.iv().lower();
                 const double big_m = inst.iv().upper();
                 inst.with_b(transported_b(rng, inst.a(), m * m, big_m * big_m),
                             Sandwich::kRelativeSquared);
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_reverse_ando_sandwich(i.a(), i.b(), i.phi(), i.iv(), t);
               })});

  r.push_back({"theorem2",
               "the four Kantorovich forms: operator, vector state, geometric mean, squared", true,
               false, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_state(draw_state(rng, inst.phi().output_dim()));
                 return inst;
               },
               [](const CheckInstance& i, double t) { return check_theorem2_all(i, t); }});

  r.push_back({"reverse_choi_quadratic",
               "Phi(B A^-1 B) <= (M+m)^2/(4Mm) Phi(B) Phi(A)^-1 Phi(B) given mA <= B <= MA", true,
               false, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_b(transported_b(rng, inst.a(), inst.iv().lower(), inst.iv().upper()),
                             Sandwich::kRelative);
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_reverse_choi_quadratic(i.a(), i.b(), i.phi(), i.iv(), t);
               })});

  r.push_back({"mond_pecaric", "<Phi(f(A))x,x> <= beta + alpha f(<Phi(A)x,x>) for convex f", true,
               false,
               {{"alpha=0", {{"alpha", "0"}}},
                {"alpha=1", {{"alpha", "1"}}},
                {"alpha=K", {{"alpha", "K"}}}},
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 static const double exponents[] = {2.0, 3.0, -1.0};
                 auto inst = standard_instance(rng, dim);
                 const double p = exponents[rng.below(3)];
                 const auto kind = variant_string(v, "alpha");
                 const double alpha = kind == "0"   ? 0.0
                                      : kind == "1" ? 1.0
                                                    : generalized_kantorovich(p, inst.iv());
                 inst.with_function(catalog::power(p))
                     .with_alpha(alpha)
                     .with_state(draw_state(rng, inst.phi().output_dim()));
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_mond_pecaric(i, i.alpha(), t);
               })});

  r.push_back({"generalized_kantorovich", "Phi(A^p) <= K(p,m,M) Phi(A)^p for p >= 1 or p < 0",
               true, false, number_variants("p", {1.0, 1.5, 2.0, 3.0, -1.0}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_exponent(variant_number(v, "p"));
                 return inst;
               },
               one([](const CheckInstance& i, double t) {
                 return check_generalized_kantorovich_operator(i, i.exponent(), t);
               })});

  r.push_back({"eq5_improves_eq6",
               "<Phi(A^p)x,x> <= K <Phi(A)x,x>^p <= K <Phi(A)^p x,x>", true, false,
               number_variants("p", {1.5, 2.0, 3.0, -1.0}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_exponent(variant_number(v, "p"))
                     .with_state(draw_state(rng, inst.phi().output_dim()));
                 return inst;
               },
               two([](const CheckInstance& i, double t) {
                 return check_eq5_improves_eq6(i, i.exponent(), t);
               })});

  r.push_back({"additive_sqrt", "Phi(A^2)^1/2 <= (M-m)^2/(4(M+m)) + Phi(A)", true, true,
               single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 return standard_instance(rng, dim);
               },
               one([](const CheckInstance& i, double t) { return check_additive_sqrt(i, t); })});

  r.push_back({"minkowski_general",
               "g(Phi(f(A))) + g(Phi(f(B))) <= alpha g(Phi(f(A+B))) and <= beta + "
               "g(Phi(f(A+B))), g = f^-1",
               true, false, function_variants({"pow(1)", "pow(1.5)", "pow(2)"}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = with_function_of(standard_instance(rng, dim), v);
                 inst.with_b(draw_b(rng, dim, inst.iv()));
                 return inst;
               },
               two([](const CheckInstance& i, double t) {
                 return check_minkowski_general(i.a(), i.b(), i.phi(), i.iv(), i.function(), t);
               })});

  r.push_back({"power_minkowski",
               "Phi(A^p)^1/p + Phi(B^p)^1/p <= K_p^1/p Phi((A+B)^p)^1/p and <= beta_p + "
               "Phi((A+B)^p)^1/p",
               true, false, number_variants("p", {1.0, 1.5, 2.0}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 auto inst = standard_instance(rng, dim);
                 inst.with_b(draw_b(rng, dim, inst.iv())).with_exponent(variant_number(v, "p"));
                 return inst;
               },
               two([](const CheckInstance& i, double t) {
                 return check_power_minkowski(i.a(), i.b(), i.phi(), i.iv(), i.exponent(), t);
               })});

  r.push_back({"tuple_minkowski",
               "(sum Phi_i(A_i^2))^1/2 + (sum Phi_i(B_i^2))^1/2 <= (M+m)/(2 sqrt(Mm)) "
               "(sum Phi_i((A_i+B_i)^2))^1/2",
               true, false, number_variants("k", {1.0, 3.0}),
               [](RandomStream& rng, Index dim, const CheckVariant& v) {
                 const auto k = static_cast<std::size_t>(variant_number(v, "k"));
                 const auto iv = draw_interval(rng, sweep_intervals());
                 std::vector<HermitianMatrix> as;
                 std::vector<HermitianMatrix> bs;
                 std::vector<PositiveMap> phis;
                 for (std::size_t i = 0; i < k; ++i) {
                   auto a_rng = rng.substream("A", i);
                   auto b_rng = rng.substream("B", i);
                   auto phi_rng = rng.substream("phi", i);
                   as.push_back(random_spd(dim, iv, a_rng));
                   bs.push_back(random_spd(dim, iv, b_rng));
                   phis.push_back(random_unital_map(dim, phi_rng, MapFamily::kUnitaryMixture));
                 }
                 auto w_rng = rng.substream("weights");
                 auto phi = PositiveMap::direct_sum(std::move(phis), random_weights(k, w_rng));
                 CheckInstance inst(direct_sum(as), std::move(phi), iv);
                 inst.with_b(direct_sum(bs));
                 return inst;
               },
               two(tuple_from_instance)});

  // Not a theorem: fails for compressions once M/m is large enough.
  r.push_back({"eq11_candidate",
               "Phi(A^-1)^2 <= (M+m)^2/(4Mm) Phi(A)^-1/2 Phi(A^-1) Phi(A)^-1/2 (false in general)",
               false, true, single(),
               [](RandomStream& rng, Index dim, const CheckVariant&) {
                 static const std::vector<SpectralInterval> wide = {
                     {1.0, 20.0}, {1.0, 50.0}, {1.0, 100.0}};
                 const Index n = std::max<Index>(dim, 3);
                 const auto iv = draw_interval(rng, wide);
                 auto a_rng = rng.substream("A");
                 auto phi_rng = rng.substream("phi");
                 const Index k = 2 + static_cast<Index>(phi_rng.below(static_cast<std::uint64_t>(n - 2)));
                 const CMatrix u = random_unitary(n, phi_rng);
                 return CheckInstance(random_spd(n, iv, a_rng), PositiveMap::compression(u.leftCols(k)),
                                      iv);
               },
               one([](const CheckInstance& i, double t) { return check_eq11_candidate(i, t); })});

  return r;
}

struct TrialOutcome {
  std::vector<CheckResult> results;
  std::string error;
  json instance;  // kept only for failures and errors
  Index dim = 0;
};

struct Task {
  std::size_t entry;
  std::size_t variant;
  long trial;
};

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> registry = build_registry();
  return registry;
}

const CheckEntry& find_check(const std::string& name) {
  for (const auto& e : check_registry())
    if (e.name == name) return e;
  throw UnknownCheckError(name);
}

RandomStream trial_stream(std::uint64_t seed, std::string_view purpose, const CheckEntry& entry,
                          const CheckVariant& variant, std::uint64_t trial) {
  std::string label(purpose);
  label += ':';
  label += entry.name;
  label += '#';
  label += variant.label;
  return RandomStream(seed, label, trial);
}

std::vector<CheckResult> evaluate_variant(const CheckEntry& entry, const CheckVariant& variant,
                                          const CheckInstance& inst, double tol) {
  auto results = entry.evaluate(inst, tol);
  for (auto& r : results) {
    r.params["variant"] = variant.label;
    for (auto it = variant.params.begin(); it != variant.params.end(); ++it)
      if (!r.params.contains(it.key())) r.params[it.key()] = it.value();
  }
  return results;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 0) throw DomainError("trial count must be nonnegative");
  if (config.dims.empty()) throw DomainError("at least one dimension is required");
  for (Index d : config.dims)
    if (d < 1) throw DimensionError("dimensions must be >= 1");
  if (!(config.tol > 0.0)) throw DomainError("tolerance must be positive");

  std::vector<const CheckEntry*> entries;
  if (config.names.empty()) {
    for (const auto& e : check_registry())
      if (e.expected_to_hold) entries.push_back(&e);
  } else {
    for (const auto& n : config.names) entries.push_back(&find_check(n));
  }

  std::vector<Task> tasks;
  for (std::size_t e = 0; e < entries.size(); ++e)
    for (std::size_t v = 0; v < entries[e]->variants.size(); ++v)
      for (long t = 0; t < config.trials; ++t) tasks.push_back({e, v, t});

  std::vector<TrialOutcome> outcomes(tasks.size());
  const auto work = [&](std::size_t i) {
    const auto& task = tasks[i];
    const auto& entry = *entries[task.entry];
    const auto& variant = entry.variants[task.variant];
    const Index dim = config.dims[static_cast<std::size_t>(task.trial) % config.dims.size()];
    auto& out = outcomes[i];
    out.dim = dim;
    auto rng = trial_stream(config.seed, "trial", entry, variant, static_cast<std::uint64_t>(task.trial));
    try {
      const auto inst = entry.generate(rng, dim, variant);
      out.results = evaluate_variant(entry, variant, inst, config.tol);
      const bool all_hold = std::all_of(out.results.begin(), out.results.end(),
                                        [](const CheckResult& r) { return r.holds; });
      if (!all_hold) out.instance = instance_to_json(inst);
    } catch (const std::exception& ex) {
      out.error = ex.what();
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  // Merge in task order.
  SuiteReport report;
  report.config = config;
  report.min_margin = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> kept(entries.size(), 0);
  for (const auto* e : entries) {
    CheckSummary s;
    s.name = e->name;
    s.expected_to_hold = e->expected_to_hold;
    s.min_margin = std::numeric_limits<double>::infinity();
    s.min_normalized_margin = std::numeric_limits<double>::infinity();
    report.checks.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& task = tasks[i];
    const auto& entry = *entries[task.entry];
    auto& s = report.checks[task.entry];
    auto& out = outcomes[i];
    const auto record_base = [&] {
      return json{{"check_name", entry.name},
                  {"variant", entry.variants[task.variant].label},
                  {"trial", task.trial},
                  {"dim", out.dim}};
    };
    if (!out.error.empty()) {
      ++s.errors;
      if (kept[task.entry]++ < config.max_failures_per_check) {
        auto rec = record_base();
        rec["error"] = out.error;
        report.failures.push_back(std::move(rec));
      }
      continue;
    }
    for (auto& r : out.results) {
      ++s.evaluations;
      r.params["trial"] = task.trial;
      r.params["seed"] = config.seed;
      if (r.params.contains("gap")) s.max_gap = std::max(s.max_gap, r.params["gap"].get<double>());
      s.min_margin = std::min(s.min_margin, r.margin);
      if (r.normalized_margin() < s.min_normalized_margin) {
        s.min_normalized_margin = r.normalized_margin();
        s.worst = r;
      }
      if (!r.holds) {
        ++s.failures;
        if (kept[task.entry]++ < config.max_failures_per_check) {
          auto rec = record_base();
          rec["result"] = result_to_json(r);
          rec["instance"] = out.instance;
          report.failures.push_back(std::move(rec));
        }
      }
    }
  }
  for (auto& s : report.checks) {
    s.ok = s.errors == 0 && (s.expected_to_hold ? s.failures == 0 : s.failures > 0);
    report.ok = report.ok && s.ok;
    if (s.expected_to_hold) report.min_margin = std::min(report.min_margin, s.min_margin);
  }
  return report;
}

json SuiteReport::to_json() const {
  json checks_json = json::array();
  for (const auto& s : checks) {
    json c = {{"check_name", s.name},
              {"expected_to_hold", s.expected_to_hold},
              {"evaluations", s.evaluations},
              {"failures", s.failures},
              {"errors", s.errors},
              {"ok", s.ok}};
    // Infinity has no JSON literal; an empty check reports null margins.
    if (s.evaluations > 0) {
      c["min_margin"] = s.min_margin;
      c["min_normalized_margin"] = s.min_normalized_margin;
      c["worst"] = result_to_json(s.worst);
    } else {
      c["min_margin"] = nullptr;
      c["min_normalized_margin"] = nullptr;
    }
    if (s.name == "refinement") c["max_gap"] = s.max_gap;
    checks_json.push_back(std::move(c));
  }
  return {{"suite", config.suite},
          {"seed", config.seed},
          {"trials", config.trials},
          {"dims", config.dims},
          {"tolerance", config.tol},
          {"checks", std::move(checks_json)},
          {"min_margin", std::isfinite(min_margin) ? json(min_margin) : json(nullptr)},
          {"failures", failures},
          {"ok", ok}};
}

}  // namespace opineq
