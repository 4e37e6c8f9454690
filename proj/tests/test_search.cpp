#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ulrich/certify.hpp"
#include "ulrich/error.hpp"
#include "ulrich/search.hpp"

using namespace ulrich;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ulrich_test_search_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("d=7 r=3 search succeeds on the first trial") {
  const auto report = search(7, 3, {.trials = 5, .master_seed = 0, .p = 32003});
  REQUIRE(report.success_index);
  CHECK(*report.success_index == 1);
  CHECK(report.a == 9);
  CHECK(report.b == 12);
  CHECK(report.certificate->vanishings.size() == 2);
  CHECK(report.failure_histogram.empty());
}

TEST_CASE("parity errors propagate before any trial") {
  CHECK_THROWS_AS(search(4, 3), ParameterError);
  CHECK_THROWS_AS(search(3, 2, {.trials = 0}), ParameterError);
  CHECK_THROWS_AS(sweep({3, 4}, 3, {}), ParameterError);
}

TEST_CASE("d=2 r=2 successes span the linear forms") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto report = search(2, 2, {.master_seed = seed});
    REQUIRE(report.presentation);
    const auto& p = *report.presentation;
    MatrixFp m(p.field(), 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) m.set(i, k, p.entry(i, 0).coeffs[k]);
    CHECK(rank(m) == 3);
  }
}

TEST_CASE("trials are a pure function of (seed, index)") {
  const auto a = search(3, 3, {.trials = 3, .master_seed = 11, .workers = 1});
  const auto b = search(3, 3, {.trials = 3, .master_seed = 11, .workers = 3});
  CHECK(to_json(a) == to_json(b));
  Rng rng(trial_seed(11, 1));
  CHECK(random_presentation(PrimeField(32003), 3, 3, rng).hash() == a.trials.front().presentation_hash);
  CHECK(trial_seed(11, 1) != trial_seed(11, 2));
}

TEST_CASE("sweep reports and files are reproducible") {
  const auto d1 = fresh_dir("a"), d2 = fresh_dir("b");
  SweepOptions opts;
  opts.search.trials = 5;
  opts.out_dir = d1;
  const auto r1 = sweep({2, 3, 4, 5}, 2, opts);
  opts.out_dir = d2;
  opts.search.workers = 2;
  const auto r2 = sweep({2, 3, 4, 5}, 2, opts);
  CHECK(r1.successes() == 4);
  CHECK_FALSE(r1.partial());
  CHECK(to_json(r1) == to_json(r2));
  for (const auto& e : r1.results) {
    REQUIRE_FALSE(e.presentation_file.empty());
    CHECK(slurp(d1 / e.presentation_file) == slurp(d2 / e.presentation_file));
    // A saved success re-certifies from disk.
    CHECK(certify(load(d1 / e.presentation_file)).valid());
  }
  const auto j = nlohmann::json::parse(to_json(r1));
  CHECK(j["format"] == "ulrich-sweep/1");
  CHECK(j["results"].size() == 4);
  CHECK_FALSE(j["results"][0].contains("ms"));
  CHECK(nlohmann::json::parse(to_json(r1, true))["results"][0].contains("ms"));
  CHECK(presentation_file_name(7, 3, 32003, 0) == "d7_r3_p32003_s0.json");
}

TEST_CASE("empty and exhausted sweeps") {
  const auto empty = sweep({}, 3, {});
  CHECK(empty.results.empty());
  CHECK(nlohmann::json::parse(to_json(empty))["results"].empty());
  SweepOptions opts;
  opts.time_budget = 1e-9;
  const auto partial = sweep({3, 5}, 3, opts);
  CHECK(partial.partial());
  CHECK(partial.results.size() + partial.skipped.size() == 2);
  CHECK(to_text(partial).find("partial") != std::string::npos);
}
