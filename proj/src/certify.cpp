#include "ulrich/certify.hpp"

#include <chrono>
#include <set>

#include <json.hpp>

#include "ulrich/cohomology.hpp"
#include "ulrich/error.hpp"
#include "ulrich/numerology.hpp"
#include "ulrich/parallel.hpp"

namespace ulrich {

std::string to_string(Level level) { return level == Level::Full ? "full" : "basic"; }

Level parse_level(const std::string& text) {
  if (text == "basic") return Level::Basic;
  if (text == "full") return Level::Full;
  throw ParameterError("level must be basic or full, got \"" + text + "\"");
}

bool FullProfile::passed() const {
  for (const auto& item : items) {
    if (!item.passed()) return false;
  }
  return determined;
}

bool UlrichCertificate::valid() const {
  if (!generic_rank.injective) return false;
  if (static_cast<int>(vanishings.size()) != std::max(0, alpha - 1)) return false;
  for (const auto& v : vanishings) {
    if (v.h1 != 0) return false;
  }
  return true;
}

bool UlrichCertificate::passed() const {
  if (!valid()) return false;
  if (level == Level::Full) return full.has_value() && full->passed();
  return true;
}

std::string UlrichCertificate::failure_reason() const {
  if (!generic_rank.injective) return "generic-rank";
  for (const auto& v : vanishings) {
    if (v.h1 != 0) return "h1(E(-" + std::to_string(v.t) + "d))";
  }
  if (level == Level::Full && !passed()) return "full-profile";
  return "";
}

std::vector<CheckItem> UlrichCertificate::discrepancies() const {
  std::vector<CheckItem> out;
  if (!generic_rank.injective) {
    out.push_back({"basic", "generic rank of M equals a (1 = witnessed)", 1, 0, "injectivity of the resolution map"});
  }
  for (const auto& v : vanishings) {
    if (v.h1 != 0) {
      out.push_back({"basic", "h1(E(" + std::to_string(-v.t) + "d))", 0, v.h1, "finite vanishing criterion"});
    }
  }
  if (full) {
    for (const auto& item : full->items) {
      if (!item.passed()) out.push_back(item);
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string twist_name(int t) {
  if (t == 0) return "E";
  if (t == 1) return "E(d)";
  if (t == -1) return "E(-d)";
  return "E(" + std::to_string(t) + "d)";
}

FullProfile full_profile(const CohomologyEngine& engine, const CertifyOptions& options) {
  const UlrichPresentation& p = engine.presentation();
  const int d = p.d();
  const int r = p.r();
  const UlrichInvariants inv = invariants(d, r);
  FullProfile prof;
  prof.window_lo = -p.alpha() - options.window_below;
  prof.window_hi = options.window_above;

  // Warm the caches in parallel; the assembly below is sequential.
  std::set<int> bundle_twists{-d, 1 - d, 2 - d};
  for (int t = prof.window_lo; t <= prof.window_hi; ++t) bundle_twists.insert(t * d);
  for (int t = 0; t <= 2; ++t) bundle_twists.insert(t * d);
  const std::set<int> dual_twists{3 * d - 3, 2 * d - 3, d - 3, 3 * d - 3, 4 * d - 3};
  std::vector<std::pair<bool, int>> jobs;
  for (int m : bundle_twists) jobs.emplace_back(false, m);
  for (int m : dual_twists) jobs.emplace_back(true, m);
  parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
    if (jobs[i].first) {
      engine.dual(jobs[i].second);
    } else {
      engine.bundle(jobs[i].second);
    }
  });

  auto add = [&](const char* group, std::string check, std::int64_t expected, std::int64_t computed,
                 const char* ref, bool determined) {
    prof.items.push_back({group, std::move(check), expected, computed, ref});
    prof.determined = prof.determined && determined;
  };

  const CohomologyDims e0 = engine.bundle(-d);
  const CohomologyDims e1 = engine.bundle(1 - d);
  const CohomologyDims e2 = engine.bundle(2 - d);
  const char* ladder = "vanishing ladder at the twists -d, -d+1, -d+2";
  add("ladder", "h0(E(-d))", 0, e0.h0, ladder, e0.determined);
  add("ladder", "h1(E(-d))", 0, e0.h1, ladder, e0.determined);
  add("ladder", "h2(E(-d))", 0, e0.h2, ladder, e0.determined);
  add("ladder", "h0(E(-d+1))", inv.b, e1.h0, ladder, e1.determined);
  add("ladder", "h1(E(-d+1))", 0, e1.h1, ladder, e1.determined);
  add("ladder", "h2(E(-d+1))", 0, e1.h2, ladder, e1.determined);
  add("ladder", "h0(E(-d+2))", static_cast<std::int64_t>(r) * (d + 2), e2.h0, ladder, e2.determined);
  add("ladder", "h1(E(-d+2))", 0, e2.h1, ladder, e2.determined);

  for (int t = prof.window_lo; t <= prof.window_hi; ++t) {
    const CohomologyDims c = engine.bundle(t * d);
    add("acm", "h1(" + twist_name(t) + ")", 0, c.h1, "no intermediate cohomology in any dH-twist", c.determined);
  }
  for (int t = 0; t <= 2; ++t) {
    const CohomologyDims c = engine.bundle(t * d);
    add("sections", "h0(" + twist_name(t) + ")", inv.hilbert(t), c.h0, "h0 equals the Hilbert polynomial",
        c.determined);
  }
  for (int t : {-3, -4}) {
    // h^2(E(m)) = h^0(E^v(-m-3)).
    const CohomologyDims c = engine.dual(-t * d - 3);
    add("top", "h2(" + twist_name(t) + ") via h0(E^v(" + std::to_string(-t * d - 3) + "))", inv.hilbert(t), c.h0,
        "h2 equals the Hilbert polynomial below -2d", c.determined);
  }

  const OmegaTable omega = engine.omega_table();
  const std::array<std::array<std::int64_t, 3>, 3> omega_expected{{{0, inv.a, inv.b}, {0, 0, 0}, {0, 0, 0}}};
  for (int q = 0; q < 3; ++q) {
    for (int col = 0; col < 3; ++col) {
      add("omega", "h" + std::to_string(q) + " at p=" + std::to_string(col - 2), omega_expected[q][col],
          omega.h[q][col], "Beilinson table of E(1-d) twisted by Omega^{-p}(-p)", omega.determined);
    }
  }

  const CohomologyDims end = engine.end_cohomology();
  const char* end_ref = "End of a simple Ulrich bundle";
  add("end", "h0(End E)", 1, end.h0, end_ref, end.determined);
  add("end", "h1(End E)", inv.h1_end_simple, end.h1, end_ref, end.determined);
  add("end", "h2(End E)", 0, end.h2, end_ref, end.determined);

  // F = E^v(3d-3) is Ulrich: h^*(F(-d)) = h^*(F(-2d)) = 0 and h0(F) = d^2 r.
  const char* dual_ref = "the twisted dual E^v(3d-3) is Ulrich";
  for (int t : {1, 2}) {
    const int m = 3 * d - 3 - t * d;
    const CohomologyDims c = engine.dual(m);
    const std::string name = "(E^v(" + std::to_string(m) + "))";
    add("ulrich-dual", "h0" + name, 0, c.h0, dual_ref, c.determined);
    add("ulrich-dual", "h1" + name, 0, c.h1, dual_ref, c.determined);
    add("ulrich-dual", "h2" + name, 0, c.h2, dual_ref, c.determined);
  }
  const CohomologyDims f = engine.dual(3 * d - 3);
  add("ulrich-dual", "h0(E^v(" + std::to_string(3 * d - 3) + "))", inv.hilbert(0), f.h0, dual_ref, f.determined);

  prof.module_hom_self = hom_presentations(p, p);
  return prof;
}

}  // namespace

UlrichCertificate certify(const UlrichPresentation& p, const CertifyOptions& options) {
  UlrichCertificate cert;
  cert.presentation_hash = p.hash();
  cert.p = p.field().modulus();
  cert.d = p.d();
  cert.r = p.r();
  cert.a = p.a();
  cert.b = p.b();
  cert.alpha = p.alpha();
  cert.seed = options.seed;
  cert.level = options.level;
  cert.freeness_k_max = options.freeness_k_max;

  auto start = Clock::now();
  Rng rank_rng(derive_seed(options.seed, 0));
  cert.generic_rank = generic_rank_check(p, options.rank_trials, rank_rng);
  cert.timings_ms["generic_rank"] = ms_since(start);

  start = Clock::now();
  Rng freeness_rng(derive_seed(options.seed, 1));
  cert.freeness = local_freeness_sample(p, options.freeness_k_max, options.freeness_trials_per_k, freeness_rng);
  cert.timings_ms["local_freeness"] = ms_since(start);

  if (!cert.generic_rank.injective) return cert;

  start = Clock::now();
  const CohomologyEngine engine(p);
  const int count = std::max(0, p.alpha() - 1);
  cert.vanishings.resize(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), options.workers, [&](std::size_t i) {
    const int t = static_cast<int>(i) + 2;
    cert.vanishings[i] = {t, -t * p.d(), engine.bundle(-t * p.d()).h1};
  });
  cert.timings_ms["vanishings"] = ms_since(start);

  if (options.level == Level::Full) {
    start = Clock::now();
    cert.full = full_profile(engine, options);
    cert.timings_ms["full_profile"] = ms_since(start);
  }
  return cert;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson item_json(const CheckItem& item) {
  ojson j;
  j["check"] = item.group + ": " + item.check;
  j["expected"] = item.expected;
  j["computed"] = item.computed;
  j["paper_ref"] = item.ref;
  return j;
}

}  // namespace

std::string to_json(const UlrichCertificate& cert, bool include_timings) {
  ojson j;
  j["format"] = "ulrich-certificate/1";
  j["presentation_hash"] = cert.presentation_hash;
  j["p"] = cert.p;
  j["d"] = cert.d;
  j["r"] = cert.r;
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["alpha"] = cert.alpha;
  j["seed"] = cert.seed;
  j["level"] = to_string(cert.level);
  j["valid"] = cert.valid();
  j["passed"] = cert.passed();
  j["failure_reason"] = cert.failure_reason();

  ojson gr;
  gr["injective"] = cert.generic_rank.injective;
  gr["trials_used"] = cert.generic_rank.trials_used;
  if (cert.generic_rank.injective) {
    gr["witness"] = cert.generic_rank.witness;
  }
  j["generic_rank"] = gr;

  ojson van = ojson::array();
  for (const auto& v : cert.vanishings) {
    ojson e;
    e["t"] = v.t;
    e["m"] = v.m;
    e["h1"] = v.h1;
    van.push_back(e);
  }
  j["vanishings"] = van;

  if (cert.full) {
    ojson full;
    full["passed"] = cert.full->passed();
    full["determined"] = cert.full->determined;
    full["acm_window"] = {cert.full->window_lo, cert.full->window_hi};
    full["module_hom_self"] = cert.full->module_hom_self;
    ojson items = ojson::array();
    for (const auto& item : cert.full->items) {
      ojson e;
      e["group"] = item.group;
      e["check"] = item.check;
      e["expected"] = item.expected;
      e["computed"] = item.computed;
      e["passed"] = item.passed();
      items.push_back(e);
    }
    full["items"] = items;
    j["full"] = full;
  }

  ojson lf;
  lf["status"] = cert.freeness.falsified ? "falsified" : "no-degeneracy-found";
  lf["complete"] = false;
  lf["k_max"] = cert.freeness_k_max;
  lf["samples"] = cert.freeness.samples;
  if (cert.freeness.falsified) {
    lf["extension_degree"] = cert.freeness.extension_degree;
    lf["point"] = cert.freeness.point;
  }
  lf["note"] = "sampling can only falsify local freeness; it never proves it";
  j["local_freeness"] = lf;

  j["field_of_definition"] =
      "all ranks computed over F_" + std::to_string(cert.p) + "; the certificate does not transfer to characteristic 0";

  ojson disc = ojson::array();
  for (const auto& item : cert.discrepancies()) disc.push_back(item_json(item));
  j["discrepancies"] = disc;

  if (include_timings) {
    ojson t;
    for (const auto& [k, v] : cert.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string discrepancy_report_json(const UlrichCertificate& cert) {
  ojson disc = ojson::array();
  for (const auto& item : cert.discrepancies()) disc.push_back(item_json(item));
  return disc.dump(2) + "\n";
}

}  // namespace ulrich
