#include "ulrich/presentation.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ulrich/error.hpp"

namespace ulrich {

Shape shape(int d, int r) {
  if (d < 1) throw ParameterError("degree d must be >= 1, got " + std::to_string(d));
  if (r < 1) throw ParameterError("rank r must be >= 1, got " + std::to_string(r));
  if ((static_cast<long long>(r) * (d - 1)) % 2 != 0) {
    throw ParameterError("rank parity: for even d = " + std::to_string(d) +
                         " the rank must be even (c1 = 3r(d-1)/2 is not an integer for r = " + std::to_string(r) +
                         ")");
  }
  return Shape{r * (d - 1) / 2, r * (d + 1) / 2, (r + 3) / 2};
}

UlrichPresentation::UlrichPresentation(PrimeField field, int d, int r, std::vector<LinearForm> entries)
    : field_(field), d_(d), r_(r), shape_(ulrich::shape(d, r)), entries_(std::move(entries)) {
  const auto expected = static_cast<std::size_t>(shape_.a) * static_cast<std::size_t>(shape_.b);
  if (entries_.size() != expected) {
    throw ParameterError("presentation for d=" + std::to_string(d) + ", r=" + std::to_string(r) + " needs " +
                         std::to_string(shape_.b) + "x" + std::to_string(shape_.a) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (const auto& f : entries_) {
    for (auto c : f.coeffs) {
      if (c >= field_.modulus()) throw FieldError("coefficient " + std::to_string(c) + " not reduced mod p");
    }
  }
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string UlrichPresentation::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(*this))));
  return buf;
}

UlrichPresentation random_presentation(PrimeField field, int d, int r, Rng& rng) {
  const Shape s = shape(d, r);
  std::vector<LinearForm> entries(static_cast<std::size_t>(s.a) * static_cast<std::size_t>(s.b));
  for (auto& f : entries) {
    for (auto& c : f.coeffs) c = field.random_element(rng).value;
  }
  return UlrichPresentation(field, d, r, std::move(entries));
}

UlrichPresentation direct_sum(const UlrichPresentation& p1, const UlrichPresentation& p2) {
  require_same_field(p1.field(), p2.field(), "direct_sum");
  if (p1.d() != p2.d()) throw ParameterError("direct_sum: degrees differ");
  const int d = p1.d();
  const int r = p1.r() + p2.r();
  const Shape s = shape(d, r);
  std::vector<LinearForm> entries(static_cast<std::size_t>(s.a) * static_cast<std::size_t>(s.b));
  auto put = [&](const UlrichPresentation& p, int row0, int col0) {
    for (int i = 0; i < p.b(); ++i) {
      for (int j = 0; j < p.a(); ++j) {
        entries[static_cast<std::size_t>(row0 + i) * static_cast<std::size_t>(s.a) + static_cast<std::size_t>(col0 + j)] =
            p.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  };
  put(p1, 0, 0);
  put(p2, p1.b(), p1.a());
  return UlrichPresentation(p1.field(), d, r, std::move(entries));
}

MatrixFp evaluate_at(const UlrichPresentation& p, const std::array<std::uint32_t, 3>& point) {
  if (point[0] == 0 && point[1] == 0 && point[2] == 0) throw DimensionError("(0, 0, 0) is not a point of P^2");
  const PrimeField& f = p.field();
  MatrixFp m(f, static_cast<std::size_t>(p.b()), static_cast<std::size_t>(p.a()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(p.b()); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(p.a()); ++j) {
      const auto& form = p.entry(i, j);
      std::uint64_t v = 0;
      for (int k = 0; k < 3; ++k) v += static_cast<std::uint64_t>(form.coeffs[k]) * point[k];
      m.set(i, j, v);
    }
  }
  return m;
}

ProjectivePoint sample_point(const ExtensionField& ext, int chart, Rng& rng) {
  ProjectivePoint pt;
  const int fixed = 2 - (chart % 3);  // z, y, x in rotation
  for (int i = 0; i < 3; ++i) pt[i] = i == fixed ? ext.one() : ext.random_element(rng);
  return pt;
}

GenericRankVerdict generic_rank_check(const UlrichPresentation& p, int trials, Rng& rng) {
  GenericRankVerdict verdict;
  const ExtensionField base(p.field(), 1);
  for (int t = 0; t < trials; ++t) {
    const ProjectivePoint pt = sample_point(base, t, rng);
    const std::array<std::uint32_t, 3> q{pt[0].c[0], pt[1].c[0], pt[2].c[0]};
    verdict.trials_used = t + 1;
    if (rank(evaluate_at(p, q)) == static_cast<std::size_t>(p.a())) {
      verdict.injective = true;
      verdict.witness = q;
      return verdict;
    }
  }
  return verdict;
}

std::string FreenessVerdict::describe() const {
  if (!falsified) return "no degeneracy found in " + std::to_string(samples) + " samples (incomplete)";
  std::ostringstream os;
  os << "falsified at a point over F_p^" << extension_degree << " (";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t k = 0; k < point[i].size(); ++k) os << (k ? "," : "") << point[i][k];
    os << "]";
  }
  os << ")";
  return os.str();
}

FreenessVerdict local_freeness_sample(const UlrichPresentation& p, int k_max, int trials_per_k, Rng& rng) {
  FreenessVerdict verdict;
  const auto rows = static_cast<std::size_t>(p.b());
  const auto cols = static_cast<std::size_t>(p.a());
  for (int k = 1; k <= std::min(k_max, kMaxExtensionDegree); ++k) {
    const ExtensionField ext(p.field(), k);
    for (int t = 0; t < trials_per_k; ++t) {
      const ProjectivePoint pt = sample_point(ext, t, rng);
      std::vector<ExtElement> m(rows * cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = evaluate(ext, p.entry(i, j), pt);
      }
      ++verdict.samples;
      if (rank(ext, std::move(m), rows, cols) < cols) {
        verdict.falsified = true;
        verdict.extension_degree = k;
        for (int i = 0; i < 3; ++i) verdict.point[i].assign(pt[i].c.begin(), pt[i].c.begin() + k);
        return verdict;
      }
    }
  }
  return verdict;
}

std::string to_json(const UlrichPresentation& p) {
  std::ostringstream os;
  os << "{\n"
     << "  \"format\": \"ulrich-presentation/1\",\n"
     << "  \"p\": " << p.field().modulus() << ",\n"
     << "  \"d\": " << p.d() << ",\n"
     << "  \"r\": " << p.r() << ",\n"
     << "  \"a\": " << p.a() << ",\n"
     << "  \"b\": " << p.b() << ",\n"
     << "  \"entries\": [\n";
  for (int i = 0; i < p.b(); ++i) {
    os << "    [";
    for (int j = 0; j < p.a(); ++j) {
      const auto& c = p.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).coeffs;
      os << (j ? ", " : "") << "[" << c[0] << ", " << c[1] << ", " << c[2] << "]";
    }
    os << "]" << (i + 1 < p.b() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

namespace {

long long require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

}  // namespace

UlrichPresentation presentation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("presentation file must hold a JSON object");
  if (!j.contains("format") || j.at("format") != "ulrich-presentation/1") {
    throw ParseError("format must be \"ulrich-presentation/1\"");
  }
  const long long p = require_int(j, "p");
  const long long d = require_int(j, "d");
  const long long r = require_int(j, "r");
  const long long a = require_int(j, "a");
  const long long b = require_int(j, "b");
  if (p < 3 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ParseError("modulus p = " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  if (d < 1 || d > 100000 || r < 1 || r > 100000) throw ParseError("d and r must be positive");
  if (b - a != r) {
    throw ParseError("shape invariant b - a = r violated (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                     ", r=" + std::to_string(r) + ")");
  }
  Shape s;
  try {
    s = shape(static_cast<int>(d), static_cast<int>(r));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  if (s.a != a || s.b != b) {
    throw ParseError("shape invariant a = r(d-1)/2, b = r(d+1)/2 violated (expected a=" + std::to_string(s.a) +
                     ", b=" + std::to_string(s.b) + ")");
  }
  if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError("missing \"entries\" array");
  const auto& rows = j.at("entries");
  if (static_cast<long long>(rows.size()) != b) {
    throw ParseError("\"entries\" must have b = " + std::to_string(b) + " rows, found " + std::to_string(rows.size()));
  }
  std::vector<LinearForm> entries;
  entries.reserve(static_cast<std::size_t>(a * b));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<long long>(row.size()) != a) {
      throw ParseError("row " + std::to_string(i) + " must have a = " + std::to_string(a) + " entries");
    }
    for (const auto& form : row) {
      if (!form.is_array() || form.size() != 3) throw ParseError("each entry must be [c0, c1, c2]");
      LinearForm lf;
      for (int k = 0; k < 3; ++k) {
        const auto& c = form[static_cast<std::size_t>(k)];
        if (!c.is_number_integer()) throw ParseError("coefficients must be integers");
        const long long v = c.get<long long>();
        if (v < 0 || v >= p) throw ParseError("coefficient " + std::to_string(v) + " outside [0, p)");
        lf.coeffs[k] = static_cast<std::uint32_t>(v);
      }
      entries.push_back(lf);
    }
  }
  return UlrichPresentation(PrimeField(static_cast<std::uint32_t>(p)), static_cast<int>(d), static_cast<int>(r),
                            std::move(entries));
}

void save(const UlrichPresentation& p, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << to_json(p);
  if (!out) throw ParseError("write failed for " + path.string());
}

UlrichPresentation load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return presentation_from_json(ss.str());
}

}  // namespace ulrich
