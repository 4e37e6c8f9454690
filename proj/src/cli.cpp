#include "ulrich/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulrich/certify.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/error.hpp"
#include "ulrich/numerology.hpp"
#include "ulrich/parallel.hpp"
#include "ulrich/search.hpp"

namespace ulrich {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  int d = 0;
  int r = 0;
  std::uint32_t p = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 5;
  std::string level = "basic";
  std::string in;
  std::string out;
  std::string format = "text";
  unsigned workers = 0;
  int from = 0;
  int to = 0;
  bool from_set = false;
  bool to_set = false;
  std::vector<int> d_list;
  double budget = 0.0;
  bool timings = false;
  int window_below = 3;
  int window_above = 3;
};

unsigned effective_workers(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ULRICH_FORGE_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<unsigned>(v);
    throw ParameterError(std::string("ULRICH_FORGE_WORKERS must be a positive integer, got \"") + env + "\"");
  }
  return resolve_workers(0);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path.string());
  f << text;
  if (!f) throw ParseError("write failed for " + path.string());
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

int cmd_numerology(const Config& c, std::ostream& out) {
  const UlrichInvariants inv = invariants(c.d, c.r);
  const auto [degree, ambient] = veronese_facts(c.d);
  const auto lines = line_bundle_solutions(c.d);
  if (c.format == "json") {
    ojson j;
    j["format"] = "ulrich-numerology/1";
    j["d"] = c.d;
    j["r"] = c.r;
    j["a"] = inv.a;
    j["b"] = inv.b;
    j["alpha"] = inv.alpha;
    j["c1"] = inv.c1;
    j["c2"] = inv.c2;
    j["chi_end"] = inv.chi_end;
    j["h1_end_simple"] = inv.h1_end_simple;
    ojson h = ojson::array();
    for (int t = -3; t <= 3; ++t) h.push_back({{"t", t}, {"chi", hilbert_check(c.d, c.r, t)}});
    j["hilbert"] = h;
    j["veronese_degree"] = degree;
    j["veronese_ambient_dim"] = ambient;
    j["ulrich_line_bundles"] = lines;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "d=" << c.d << " r=" << c.r << "\n";
  out << "a=" << inv.a << " b=" << inv.b << " alpha=" << inv.alpha << "\n";
  out << "c1=" << inv.c1 << " c2=" << inv.c2 << "\n";
  out << "chi_end=" << inv.chi_end << " h1_end_simple=" << inv.h1_end_simple << "\n";
  out << "hilbert:";
  for (int t = -3; t <= 3; ++t) out << " t=" << t << ":" << hilbert_check(c.d, c.r, t);
  out << "\n";
  out << "veronese degree=" << degree << " ambient_dim=" << ambient << "\n";
  out << "ulrich line bundles O(t0):";
  if (lines.empty()) out << " none";
  for (auto t0 : lines) out << " " << t0;
  out << "\n";
  return kExitOk;
}

int cmd_certify(const Config& c, std::ostream& out) {
  const std::filesystem::path in(c.in);
  const UlrichPresentation p = load(in);
  CertifyOptions opts;
  opts.level = parse_level(c.level);
  opts.seed = c.seed;
  opts.workers = effective_workers(c.workers);
  opts.window_below = c.window_below;
  opts.window_above = c.window_above;
  const UlrichCertificate cert = certify(p, opts);
  const std::string json = to_json(cert, c.timings);

  std::filesystem::path cert_path = in;
  cert_path.replace_extension(".cert.json");
  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    cert_path = std::filesystem::path(c.out) / cert_path.filename();
  }
  write_file(cert_path, json);

  if (c.format == "json") {
    out << json;
  } else {
    out << "presentation " << cert.presentation_hash << "  p=" << cert.p << " d=" << cert.d << " r=" << cert.r
        << " a=" << cert.a << " b=" << cert.b << " alpha=" << cert.alpha << "\n";
    out << "level=" << to_string(cert.level) << " seed=" << cert.seed << "\n";
    out << "generic rank: " << (cert.generic_rank.injective ? "a (witnessed)" : "undetermined") << "\n";
    for (const auto& v : cert.vanishings) out << "h1(E(" << v.m << ")) = " << v.h1 << "\n";
    if (cert.full) {
      std::size_t ok = 0;
      for (const auto& item : cert.full->items) ok += item.passed() ? 1 : 0;
      out << "full profile: " << ok << "/" << cert.full->items.size() << " items pass"
          << (cert.full->determined ? "" : " (some values undetermined)") << "\n";
      out << "module endomorphisms (degree 0): " << cert.full->module_hom_self << "\n";
    }
    out << "local freeness: " << cert.freeness.describe() << "\n";
    out << (cert.passed() ? "VALID" : "FAILED: " + cert.failure_reason()) << "\n";
    out << "certificate: " << cert_path.string() << "\n";
  }
  if (!cert.passed()) {
    std::ostringstream report;
    report << "discrepancies:\n" << discrepancy_report_json(cert);
    out << report.str();
    return kExitCertificationFailed;
  }
  return kExitOk;
}

int cmd_search(const Config& c, std::ostream& out) {
  SearchOptions opts;
  opts.trials = c.trials;
  opts.master_seed = c.seed;
  opts.p = c.p;
  opts.workers = effective_workers(c.workers);
  const SearchReport report = search(c.d, c.r, opts);
  std::string file;
  if (report.presentation && !c.out.empty()) {
    std::filesystem::create_directories(c.out);
    file = presentation_file_name(c.d, c.r, c.p, c.seed);
    save(*report.presentation, std::filesystem::path(c.out) / file);
  }
  out << (c.format == "json" ? to_json(report, c.timings) : to_text(report, c.timings));
  if (!file.empty() && c.format != "json") out << "saved " << (std::filesystem::path(c.out) / file).string() << "\n";
  return report.success_index ? kExitOk : kExitCertificationFailed;
}

int cmd_sweep(const Config& c, std::ostream& out) {
  SweepOptions opts;
  opts.search.trials = c.trials;
  opts.search.master_seed = c.seed;
  opts.search.p = c.p;
  opts.search.workers = effective_workers(c.workers);
  opts.time_budget = c.budget;
  if (!c.out.empty()) opts.out_dir = std::filesystem::path(c.out);
  const SweepReport report = sweep(c.d_list, c.r, opts);
  const std::string json = to_json(report, c.timings);
  if (opts.out_dir) write_file(*opts.out_dir / "sweep.json", json);
  out << (c.format == "json" ? json : to_text(report, c.timings));
  const bool all = report.successes() == static_cast<int>(c.d_list.size());
  return all ? kExitOk : kExitCertificationFailed;
}

int cmd_table(const Config& c, std::ostream& out) {
  const UlrichPresentation p = load(std::filesystem::path(c.in));
  const int from = c.from_set ? c.from : -3 * p.d();
  const int to = c.to_set ? c.to : 3;
  if (from > to) throw ParameterError("--from must not exceed --to");
  const CohomologyEngine engine(p);
  const unsigned workers = effective_workers(c.workers);
  std::vector<int> twists;
  for (int m = from; m <= to; ++m) twists.push_back(m);
  parallel_for(twists.size(), workers, [&](std::size_t i) { engine.bundle(twists[i]); });
  const CohomologyProfile prof = engine.profile(from, to);
  const OmegaTable omega = engine.omega_table();

  if (c.format == "json") {
    ojson j;
    j["format"] = "ulrich-table/1";
    j["presentation_hash"] = prof.presentation_hash;
    j["p"] = p.field().modulus();
    j["d"] = p.d();
    j["r"] = p.r();
    j["from"] = from;
    j["to"] = to;
    ojson rows = ojson::array();
    for (const auto& row : prof.rows) {
      ojson e;
      e["m"] = row.m;
      e["h0"] = row.dims.h0;
      e["h1"] = row.dims.h1;
      e["h2"] = row.dims.h2;
      e["chi"] = row.dims.chi();
      e["determined"] = row.dims.determined;
      rows.push_back(e);
    }
    j["rows"] = rows;
    ojson om;
    om["columns_p"] = {-2, -1, 0};
    om["rows_q"] = ojson::array();
    for (int q = 0; q < 3; ++q) om["rows_q"].push_back({{"q", q}, {"h", omega.h[q]}});
    om["determined"] = omega.determined;
    j["omega"] = om;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "presentation " << prof.presentation_hash << "  p=" << p.field().modulus() << " d=" << p.d()
      << " r=" << p.r() << "\n";
  out << pad("m", 6) << pad("h0", 10) << pad("h1", 10) << pad("h2", 10) << pad("chi", 11) << "\n";
  for (const auto& row : prof.rows) {
    out << pad(std::to_string(row.m), 6) << pad(std::to_string(row.dims.h0), 10)
        << pad(std::to_string(row.dims.h1), 10) << pad(std::to_string(row.dims.h2), 10)
        << pad(std::to_string(row.dims.chi()), 11) << (row.dims.determined ? "" : "  (undetermined)") << "\n";
  }
  out << "\nh^q(E(1-d) (x) Omega^{-p}(-p))\n";
  out << pad("", 6) << pad("p=-2", 8) << pad("p=-1", 8) << pad("p=0", 8) << "\n";
  for (int q = 2; q >= 0; --q) {
    out << pad("q=" + std::to_string(q), 6);
    for (int col = 0; col < 3; ++col) out << pad(std::to_string(omega.h[q][col]), 8);
    out << "\n";
  }
  if (!omega.determined) out << "(table undetermined: a required vanishing failed)\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Ulrich bundles on Veronese surfaces over F_p", "ulrich-forge"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads (fallback: ULRICH_FORGE_WORKERS)")
        ->check(CLI::Range(1u, 1024u));
  };

  auto* numerology = app.add_subcommand("numerology", "Closed-form invariants for (d, r)");
  numerology->add_option("--d", c.d, "Degree of the polarization")->required();
  numerology->add_option("--r", c.r, "Rank")->required();
  add_format(numerology);

  auto* cert = app.add_subcommand("certify", "Certify a presentation file");
  cert->add_option("--in", c.in, "Presentation file")->required();
  cert->add_option("--level", c.level, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  cert->add_option("--seed", c.seed, "Seed of the point samplers");
  cert->add_option("--out", c.out, "Directory for the certificate (default: next to the input)");
  cert->add_option("--window-below", c.window_below, "ACM window extends to -alpha minus this")
      ->check(CLI::Range(0, 50));
  cert->add_option("--window-above", c.window_above, "ACM window upper end")->check(CLI::Range(0, 50));
  cert->add_flag("--timings", c.timings, "Include wall-clock timings");
  add_format(cert);
  add_workers(cert);

  auto* srch = app.add_subcommand("search", "Seeded random search for one (d, r)");
  srch->add_option("--d", c.d, "Degree of the polarization")->required();
  srch->add_option("--r", c.r, "Rank")->required();
  srch->add_option("--p", c.p, "Prime modulus");
  srch->add_option("--seed", c.seed, "Master seed");
  srch->add_option("--trials", c.trials, "Maximum number of trials")->check(CLI::PositiveNumber);
  srch->add_option("--out", c.out, "Directory for the saved presentation");
  srch->add_flag("--timings", c.timings, "Include wall-clock timings");
  add_format(srch);
  add_workers(srch);

  auto* swp = app.add_subcommand("sweep", "Search over a list of degrees");
  swp->add_option("--d", c.d_list, "Comma-separated degrees")->required()->delimiter(',');
  swp->add_option("--r", c.r, "Rank")->required();
  swp->add_option("--p", c.p, "Prime modulus");
  swp->add_option("--seed", c.seed, "Master seed");
  swp->add_option("--trials", c.trials, "Trials per degree")->check(CLI::PositiveNumber);
  swp->add_option("--out", c.out, "Directory for sweep.json and presentations");
  swp->add_option("--budget", c.budget, "Time budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  swp->add_flag("--timings", c.timings, "Include wall-clock timings");
  add_format(swp);
  add_workers(swp);

  auto* table = app.add_subcommand("table", "Cohomology table and Omega table of a presentation");
  table->add_option("--in", c.in, "Presentation file")->required();
  table->add_option("--from", c.from, "First twist m (default -3d)");
  table->add_option("--to", c.to, "Last twist m (default 3)");
  add_format(table);
  add_workers(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadParameters;
  }
  c.from_set = table->count("--from") > 0;
  c.to_set = table->count("--to") > 0;

  try {
    if (*numerology) return cmd_numerology(c, out);
    if (*cert) return cmd_certify(c, out);
    if (*srch) return cmd_search(c, out);
    if (*swp) return cmd_sweep(c, out);
    if (*table) return cmd_table(c, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCertificationFailed;
  }
  return kExitBadParameters;
}

}  // namespace ulrich
