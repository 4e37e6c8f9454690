#include "ulrich/search.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ulrich/error.hpp"
#include "ulrich/parallel.hpp"

namespace ulrich {

std::uint64_t trial_seed(std::uint64_t master_seed, int index) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(index));
}

namespace {

struct TrialResult {
  TrialOutcome outcome;
  std::optional<UlrichPresentation> presentation;
  std::optional<UlrichCertificate> certificate;
};

TrialResult run_trial(const PrimeField& field, int d, int r, std::uint64_t master, int index) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = trial_seed(master, index);
  Rng rng(seed);
  UlrichPresentation p = random_presentation(field, d, r, rng);
  CertifyOptions opts;
  opts.seed = seed;
  UlrichCertificate cert = certify(p, opts);
  TrialResult res;
  res.outcome.index = index;
  res.outcome.presentation_hash = p.hash();
  res.outcome.failure = cert.failure_reason();
  res.outcome.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.presentation = std::move(p);
  res.certificate = std::move(cert);
  return res;
}

}  // namespace

SearchReport search(int d, int r, const SearchOptions& options) {
  const Shape s = shape(d, r);
  if (options.trials < 1) throw ParameterError("trials must be >= 1");
  const PrimeField field(options.p);
  SearchReport report;
  report.d = d;
  report.r = r;
  report.a = s.a;
  report.b = s.b;
  report.alpha = s.alpha;
  report.p = options.p;
  report.master_seed = options.master_seed;
  report.trials_requested = options.trials;

  const unsigned batch = std::max(1u, options.workers);
  for (int first = 1; first <= options.trials && !report.success_index; first += static_cast<int>(batch)) {
    const int count = std::min(static_cast<int>(batch), options.trials - first + 1);
    std::vector<TrialResult> results(static_cast<std::size_t>(count));
    parallel_for(results.size(), batch, [&](std::size_t i) {
      results[i] = run_trial(field, d, r, options.master_seed, first + static_cast<int>(i));
    });
    // Assemble in index order, discarding trials after the first success.
    for (auto& res : results) {
      report.trials.push_back(res.outcome);
      if (res.outcome.failure.empty()) {
        report.success_index = res.outcome.index;
        report.presentation = std::move(res.presentation);
        report.certificate = std::move(res.certificate);
        break;
      }
      ++report.failure_histogram[res.outcome.failure];
    }
  }
  return report;
}

std::string presentation_file_name(int d, int r, std::uint32_t p, std::uint64_t seed) {
  return "d" + std::to_string(d) + "_r" + std::to_string(r) + "_p" + std::to_string(p) + "_s" +
         std::to_string(seed) + ".json";
}

int SweepReport::successes() const {
  int n = 0;
  for (const auto& e : results) n += e.report.success_index ? 1 : 0;
  return n;
}

SweepReport sweep(const std::vector<int>& d_list, int r, const SweepOptions& options) {
  for (int d : d_list) shape(d, r);
  SweepReport out;
  out.p = options.search.p;
  out.r = r;
  out.master_seed = options.search.master_seed;
  out.trials_per_d = options.search.trials;
  if (options.out_dir) std::filesystem::create_directories(*options.out_dir);
  const auto start = std::chrono::steady_clock::now();
  for (int d : d_list) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.time_budget > 0 && elapsed >= options.time_budget) {
      out.skipped.push_back(d);
      continue;
    }
    SweepEntry entry;
    entry.report = search(d, r, options.search);
    if (entry.report.presentation) {
      entry.presentation_file = presentation_file_name(d, r, out.p, out.master_seed);
      if (options.out_dir) save(*entry.report.presentation, *options.out_dir / entry.presentation_file);
    }
    out.results.push_back(std::move(entry));
  }
  return out;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson report_json(const SearchReport& r, const std::string& file, bool timings) {
  ojson j;
  j["d"] = r.d;
  j["r"] = r.r;
  j["a"] = r.a;
  j["b"] = r.b;
  j["alpha"] = r.alpha;
  j["success_trial"] = r.success_index ? ojson(*r.success_index) : ojson(nullptr);
  j["trials_attempted"] = r.trials_attempted();
  j["presentation_hash"] = r.success_index ? ojson(r.trials.back().presentation_hash) : ojson(nullptr);
  j["presentation_file"] = file.empty() ? ojson(nullptr) : ojson(file);
  ojson checks = ojson::array();
  if (r.certificate) {
    for (const auto& v : r.certificate->vanishings) {
      ojson c;
      c["t"] = v.t;
      c["m"] = v.m;
      c["h1"] = v.h1;
      checks.push_back(c);
    }
  }
  j["h1_checks"] = checks;
  ojson hist = ojson::object();
  for (const auto& [k, v] : r.failure_histogram) hist[k] = v;
  j["failure_histogram"] = hist;
  if (timings) {
    double total = 0;
    ojson per = ojson::array();
    for (const auto& t : r.trials) {
      per.push_back(t.ms);
      total += t.ms;
    }
    j["trial_ms"] = per;
    j["ms"] = total;
  }
  return j;
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string to_json(const SearchReport& report, bool include_timings) {
  ojson j;
  j["format"] = "ulrich-search/1";
  j["p"] = report.p;
  j["seed"] = report.master_seed;
  j["trials"] = report.trials_requested;
  j["result"] = report_json(report, "", include_timings);
  return j.dump(2) + "\n";
}

std::string to_json(const SweepReport& report, bool include_timings) {
  ojson j;
  j["format"] = "ulrich-sweep/1";
  j["p"] = report.p;
  j["r"] = report.r;
  j["seed"] = report.master_seed;
  j["trials"] = report.trials_per_d;
  j["partial"] = report.partial();
  j["skipped"] = report.skipped;
  ojson results = ojson::array();
  for (const auto& e : report.results) results.push_back(report_json(e.report, e.presentation_file, include_timings));
  j["results"] = results;
  return j.dump(2) + "\n";
}

namespace {

void text_row(std::ostringstream& os, const SearchReport& r, const std::string& file, bool timings) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%4d %3d %4d %4d %5d  ", r.d, r.r, r.a, r.b, r.alpha);
  os << buf;
  os << (r.success_index ? std::to_string(*r.success_index) + "/" + std::to_string(r.trials_attempted())
                         : "none/" + std::to_string(r.trials_attempted()));
  if (r.certificate) {
    os << "  h1:";
    for (const auto& v : r.certificate->vanishings) os << " E(" << v.m << ")=" << v.h1;
  }
  if (!r.failure_histogram.empty()) {
    os << "  failures:";
    for (const auto& [k, v] : r.failure_histogram) os << " " << k << "x" << v;
  }
  if (!file.empty()) os << "  " << file;
  if (timings) {
    double total = 0;
    for (const auto& t : r.trials) total += t.ms;
    os << "  " << fmt_ms(total) << " ms";
  }
  os << "\n";
}

}  // namespace

std::string to_text(const SearchReport& report, bool include_timings) {
  std::ostringstream os;
  os << "search p=" << report.p << " seed=" << report.master_seed << " trials=" << report.trials_requested << "\n";
  os << "   d   r    a    b alpha  success\n";
  text_row(os, report, "", include_timings);
  return os.str();
}

std::string to_text(const SweepReport& report, bool include_timings) {
  std::ostringstream os;
  os << "sweep p=" << report.p << " r=" << report.r << " seed=" << report.master_seed
     << " trials=" << report.trials_per_d << "\n";
  os << "   d   r    a    b alpha  success\n";
  for (const auto& e : report.results) text_row(os, e.report, e.presentation_file, include_timings);
  for (int d : report.skipped) os << "   " << d << "  skipped (time budget exhausted)\n";
  os << report.successes() << "/" << report.results.size() + report.skipped.size() << " degrees succeeded"
     << (report.partial() ? " (partial)" : "") << "\n";
  return os.str();
}

}  // namespace ulrich
