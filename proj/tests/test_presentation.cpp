#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ulrich/error.hpp"
#include "ulrich/presentation.hpp"

using namespace ulrich;

namespace {

UlrichPresentation euler(const PrimeField& f) {
  return UlrichPresentation(f, 2, 2, {LinearForm::x(), LinearForm::y(), LinearForm::z()});
}

UlrichPresentation with_zero_column(const PrimeField& f, int d, int r, std::uint64_t seed) {
  Rng rng(seed);
  const UlrichPresentation p = random_presentation(f, d, r, rng);
  auto entries = p.entries();
  for (int i = 0; i < p.b(); ++i) entries[static_cast<std::size_t>(i * p.a())] = LinearForm{};
  return UlrichPresentation(f, d, r, entries);
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "ulrich_test_presentation";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("shape") {
  CHECK(shape(7, 3) == Shape{9, 12, 3});
  CHECK(shape(2, 2) == Shape{1, 3, 2});
  CHECK(shape(3, 2) == Shape{2, 4, 2});
  CHECK(shape(1, 1) == Shape{0, 1, 2});
  CHECK_THROWS_AS(shape(4, 3), ParameterError);
  CHECK_THROWS_AS(shape(0, 2), ParameterError);
  CHECK_THROWS_AS(shape(3, 0), ParameterError);
  for (int d = 1; d <= 30; ++d) {
    for (int r = 1; r <= 12; ++r) {
      if (d % 2 == 0 && r % 2 == 1) continue;
      const Shape s = shape(d, r);
      CHECK(s.b - s.a == r);
      CHECK(2 * s.a == r * (d - 1));
      CHECK(s.alpha == (r + 3) / 2);
      CHECK(2 * s.alpha >= r + 2);  // ceiling
    }
  }
}

TEST_CASE("random_presentation is seeded and sized") {
  const PrimeField f(32003);
  Rng r1(0), r2(0);
  const auto p1 = random_presentation(f, 3, 2, r1);
  const auto p2 = random_presentation(f, 3, 2, r2);
  CHECK(p1 == p2);
  CHECK(p1.hash() == p2.hash());
  CHECK(p1.entries().size() == 8);
  CHECK(p1.a() == 2);
  CHECK(p1.b() == 4);
  Rng r3(1);
  CHECK_FALSE(random_presentation(f, 3, 2, r3) == p1);
  CHECK_THROWS_AS(UlrichPresentation(f, 3, 2, {}), ParameterError);
  CHECK_THROWS_AS(UlrichPresentation(f, 2, 2, {LinearForm{{32003, 0, 0}}, LinearForm::y(), LinearForm::z()}),
                  FieldError);
}

TEST_CASE("coefficient histogram is close to uniform") {
  const PrimeField f(11);
  Rng rng(7);
  std::vector<int> counts(11, 0);
  int total = 0;
  while (total < 10000) {
    const auto p = random_presentation(f, 5, 2, rng);
    for (const auto& l : p.entries()) {
      for (auto c : l.coeffs) {
        ++counts[c];
        ++total;
      }
    }
  }
  const double expected = static_cast<double>(total) / 11;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 35.0);  // 10 degrees of freedom; far beyond the 0.999 quantile (29.6)
}

TEST_CASE("generic rank check") {
  const PrimeField f(32003);
  Rng rng(1);
  auto v = generic_rank_check(euler(f), 4, rng);
  CHECK(v.injective);
  CHECK(rank(evaluate_at(euler(f), {1, 0, 0})) == 1);

  // Duplicated column: rank < a everywhere.
  Rng r0(2);
  const auto p = random_presentation(f, 3, 2, r0);
  auto entries = p.entries();
  for (int i = 0; i < p.b(); ++i) entries[static_cast<std::size_t>(i * 2 + 1)] = entries[static_cast<std::size_t>(i * 2)];
  Rng r4(3);
  const auto dup = generic_rank_check(UlrichPresentation(f, 3, 2, entries), 10, r4);
  CHECK_FALSE(dup.injective);
  CHECK(dup.trials_used == 10);

  Rng r5(4), r6(5);
  const auto good = random_presentation(f, 5, 2, r5);
  const auto verdict = generic_rank_check(good, 3, r6);
  REQUIRE(verdict.injective);
  // Injective at the witness means the evaluated matrix has trivial kernel.
  CHECK(kernel_basis(evaluate_at(good, verdict.witness)).empty());
  CHECK_THROWS_AS(evaluate_at(good, {0, 0, 0}), DimensionError);
}

TEST_CASE("local freeness sampler") {
  const PrimeField f(32003);
  Rng rng(1);
  const auto zero = local_freeness_sample(with_zero_column(f, 3, 2, 9), 2, 10, rng);
  CHECK(zero.falsified);
  CHECK(zero.samples == 1);
  CHECK(zero.extension_degree == 1);

  Rng r2(2);
  const auto e = local_freeness_sample(euler(f), 3, 30, r2);
  CHECK_FALSE(e.falsified);
  CHECK(e.samples == 90);
  CHECK(e.describe().find("incomplete") != std::string::npos);

  Rng r3(3), r4(4);
  const auto p = random_presentation(f, 3, 2, r3);
  CHECK_FALSE(local_freeness_sample(p, 2, 100, r4).falsified);
}

TEST_CASE("serialization round trip is canonical") {
  const PrimeField f(32003);
  const auto dir = temp_dir();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int d = 1 + static_cast<int>(seed % 9);
    const int r = d % 2 == 0 ? 2 : 1 + static_cast<int>(seed % 3);
    const auto p = random_presentation(f, d, r, rng);
    const auto path = dir / "rt.json";
    save(p, path);
    const auto q = load(path);
    CHECK(q == p);
    CHECK(to_json(q) == to_json(p));
  }
}

TEST_CASE("malformed presentation files are rejected") {
  const auto dir = temp_dir();
  auto write = [&](const std::string& text) {
    const auto path = dir / "bad.json";
    std::ofstream(path) << text;
    return path;
  };
  CHECK_THROWS_AS(load(dir / "does_not_exist.json"), ParseError);
  CHECK_THROWS_AS(load(write("{not json")), ParseError);
  CHECK_THROWS_AS(load(write(R"({"format":"other"})")), ParseError);
  // b - a != r
  CHECK_THROWS_WITH_AS(
      load(write(R"({"format":"ulrich-presentation/1","p":32003,"d":2,"r":2,"a":1,"b":4,"entries":[]})")),
      doctest::Contains("b - a = r"), ParseError);
  CHECK_THROWS_AS(
      load(write(R"({"format":"ulrich-presentation/1","p":32001,"d":2,"r":2,"a":1,"b":3,"entries":[]})")),
      ParseError);
  CHECK_THROWS_AS(
      load(write(R"({"format":"ulrich-presentation/1","p":32003,"d":4,"r":3,"a":4,"b":7,"entries":[]})")),
      ParseError);
  CHECK_THROWS_AS(load(write(R"({"format":"ulrich-presentation/1","p":7,"d":2,"r":2,"a":1,"b":3,)"
                             R"("entries":[[[1,0,0]],[[0,1,0]],[[0,0,7]]]})")),
                  ParseError);
  CHECK_NOTHROW(load(write(R"({"format":"ulrich-presentation/1","p":7,"d":2,"r":2,"a":1,"b":3,)"
                           R"("entries":[[[1,0,0]],[[0,1,0]],[[0,0,1]]]})")));
}

TEST_CASE("hand-written d=7 r=3 file loads with its shape") {
  std::string text = R"({"format":"ulrich-presentation/1","p":32003,"d":7,"r":3,"a":9,"b":12,"entries":[)";
  for (int i = 0; i < 12; ++i) {
    text += i ? ",[" : "[";
    for (int j = 0; j < 9; ++j) text += std::string(j ? "," : "") + "[" + std::to_string(i) + "," + std::to_string(j) + ",1]";
    text += "]";
  }
  text += "]}";
  const auto p = presentation_from_json(text);
  CHECK(p.a() == 9);
  CHECK(p.b() == 12);
  CHECK(p.alpha() == 3);
  CHECK(p.entry(11, 8).coeffs == std::array<std::uint32_t, 3>{11, 8, 1});
}

TEST_CASE("direct sum is block diagonal") {
  const PrimeField f(32003);
  const auto s = direct_sum(euler(f), euler(f));
  CHECK(s.r() == 4);
  CHECK(s.a() == 2);
  CHECK(s.b() == 6);
  CHECK(s.entry(0, 0) == LinearForm::x());
  CHECK(s.entry(5, 1) == LinearForm::z());
  CHECK(s.entry(5, 0).is_zero());
  CHECK(s.entry(0, 1).is_zero());
  Rng rng(0);
  CHECK_THROWS_AS(direct_sum(euler(f), random_presentation(f, 3, 2, rng)), ParameterError);
}
