#include "ulrich/cohomology.hpp"

#include <mutex>

#include "ulrich/error.hpp"

namespace ulrich {

std::int64_t line_chi(int n) {
  return (static_cast<std::int64_t>(n) + 1) * (static_cast<std::int64_t>(n) + 2) / 2;
}

std::int64_t line_h(int i, int n) {
  switch (i) {
    case 0:
      return n >= 0 ? line_chi(n) : 0;
    case 1:
      return 0;
    case 2:
      // Serre duality: h^2(O(n)) = h^0(O(-n-3)).
      return n <= -3 ? line_chi(-n - 3) : 0;
    default:
      throw ParameterError("cohomological degree on P^2 must be 0, 1 or 2");
  }
}

namespace {

// Block matrix of multiplication by the entries of M between sums of graded
// pieces. With transpose == false the source has a blocks and the target b
// blocks (entry (i, j) maps source block j to target block i); with
// transpose == true the roles of a and b swap and entry (i, j) maps source
// block i to target block j. Source blocks live in degree n.
MatrixFp block_map(const UlrichPresentation& p, int n, bool transpose) {
  const auto src_blocks = static_cast<std::size_t>(transpose ? p.b() : p.a());
  const auto dst_blocks = static_cast<std::size_t>(transpose ? p.a() : p.b());
  const GradedBasis src(n);
  const std::size_t ns = src.size();
  const std::size_t nt = monomial_count(n + 1);
  MatrixFp out(p.field(), dst_blocks * nt, src_blocks * ns, Storage::Sparse);
  if (ns == 0) return out;
  // Column-major fill in increasing column order keeps every sparse row sorted
  // with appends only.
  for (std::size_t s = 0; s < src_blocks; ++s) {
    for (std::size_t k = 0; k < ns; ++k) {
      const std::size_t col = s * ns + k;
      for (std::size_t t = 0; t < dst_blocks; ++t) {
        const LinearForm& f = transpose ? p.entry(s, t) : p.entry(t, s);
        for (int v = 0; v < 3; ++v) {
          if (f.coeffs[v] == 0) continue;
          Exponent e = src[k];
          ++e[v];
          out.set(t * nt + GradedBasis::index_of(n + 1, e), col, f.coeffs[v]);
        }
      }
    }
  }
  return out;
}

std::int64_t rank_of(const MatrixFp& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<std::int64_t>(rank(m));
}

}  // namespace

MatrixFp section_map(const UlrichPresentation& p, int m) { return block_map(p, p.d() - 2 + m, false); }

MatrixFp serre_dual_map(const UlrichPresentation& p, int m) { return block_map(p, -m - p.d() - 2, true); }

MatrixFp dual_section_map(const UlrichPresentation& p, int m) { return block_map(p, 1 - p.d() + m, true); }

CohomologyDims bundle_cohomology(const UlrichPresentation& p, int m) {
  const int d = p.d();
  const std::int64_t a = p.a();
  const std::int64_t b = p.b();
  const std::int64_t rk_sections = rank_of(section_map(p, m));
  const std::int64_t rk_dual = rank_of(serre_dual_map(p, m));
  CohomologyDims out;
  out.h0 = b * line_h(0, d - 1 + m) - rk_sections;
  out.h1 = a * line_h(2, d - 2 + m) - rk_dual;
  out.h2 = b * line_h(2, d - 1 + m) - rk_dual;
  // H^0(A(m)) -> H^0(B(m)) must be injective for the sequence to be exact.
  out.determined = rk_sections == a * line_h(0, d - 2 + m);
  return out;
}

CohomologyDims dual_cohomology(const UlrichPresentation& p, int m) {
  const int d = p.d();
  const std::int64_t a = p.a();
  const std::int64_t b = p.b();
  const std::int64_t rk = rank_of(dual_section_map(p, m));
  CohomologyDims out;
  out.h0 = b * line_h(0, 1 - d + m) - rk;
  out.h1 = a * line_h(0, 2 - d + m) - rk;
  const std::int64_t chi = b * line_chi(1 - d + m) - a * line_chi(2 - d + m);
  out.h2 = chi - out.h0 + out.h1;
  out.determined = out.h2 >= 0;
  return out;
}

// ---------------------------------------------------------------------------
// SectionSpace

SectionSpace::SectionSpace(const UlrichPresentation& p, int m)
    : m_(m),
      degree_(p.d() - 1 + m),
      image_(p.field(), static_cast<std::size_t>(p.b()) * monomial_count(p.d() - 1 + m)) {
  const MatrixFp sigma = section_map(p, m).transpose();  // rows = image generators
  for (std::size_t r = 0; r < sigma.rows(); ++r) {
    VectorFp v(image_.ambient_dim(), 0);
    for (const auto& e : sigma.sparse_row(r)) v[e.col] = e.value;
    image_.insert(std::move(v));
  }
  free_ = image_.free_coordinates();
  position_.assign(image_.ambient_dim(), -1);
  for (std::size_t i = 0; i < free_.size(); ++i) position_[free_[i]] = static_cast<std::int64_t>(i);
}

VectorFp SectionSpace::project(VectorFp ambient) const {
  image_.reduce(ambient);
  VectorFp out(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) out[i] = ambient[free_[i]];
  return out;
}

MatrixFp induced_multiplication(const SectionSpace& from, const SectionSpace& to, const PrimeField& field,
                                const LinearForm& f) {
  if (to.twist() != from.twist() + 1) throw DimensionError("induced_multiplication: twists must differ by one");
  const std::size_t n_from = monomial_count(from.block_degree());
  const std::size_t n_to = monomial_count(to.block_degree());
  const GradedBasis src(from.block_degree());
  MatrixFp out(field, to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const std::size_t coord = from.basis_coordinates()[j];
    const std::size_t block = coord / n_from;
    const Exponent mono = src[coord % n_from];
    VectorFp v(to.ambient_dim(), 0);
    for (int k = 0; k < 3; ++k) {
      if (f.coeffs[k] == 0) continue;
      Exponent e = mono;
      ++e[k];
      v[block * n_to + GradedBasis::index_of(to.block_degree(), e)] = f.coeffs[k];
    }
    const VectorFp col = to.project(std::move(v));
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] != 0) out.set(i, j, col[i]);
    }
  }
  return out;
}

SectionSpace section_space(const UlrichPresentation& p, int m) { return SectionSpace(p, m); }

// ---------------------------------------------------------------------------
// Engine

CohomologyEngine::CohomologyEngine(UlrichPresentation p) : p_(std::move(p)) {}

CohomologyDims CohomologyEngine::bundle(int m) const {
  {
    std::shared_lock lock(mutex_);
    auto it = bundle_cache_.find(m);
    if (it != bundle_cache_.end()) return it->second;
  }
  const CohomologyDims dims = bundle_cohomology(p_, m);
  std::unique_lock lock(mutex_);
  bundle_cache_.emplace(m, dims);
  return dims;
}

CohomologyDims CohomologyEngine::dual(int m) const {
  {
    std::shared_lock lock(mutex_);
    auto it = dual_cache_.find(m);
    if (it != dual_cache_.end()) return it->second;
  }
  const CohomologyDims dims = dual_cohomology(p_, m);
  std::unique_lock lock(mutex_);
  dual_cache_.emplace(m, dims);
  return dims;
}

std::shared_ptr<const SectionSpace> CohomologyEngine::sections(int m) const {
  {
    std::shared_lock lock(mutex_);
    auto it = section_cache_.find(m);
    if (it != section_cache_.end()) return it->second;
  }
  auto space = std::make_shared<const SectionSpace>(p_, m);
  std::unique_lock lock(mutex_);
  return section_cache_.emplace(m, std::move(space)).first->second;
}

CohomologyDims CohomologyEngine::end_cohomology() const {
  const int d = p_.d();
  const auto a = static_cast<std::size_t>(p_.a());
  const auto b = static_cast<std::size_t>(p_.b());
  const auto lower = sections(1 - d);
  const auto upper = sections(2 - d);
  const std::size_t n1 = lower->dim();
  const std::size_t n2 = upper->dim();

  // (s_1..s_b) -> (sum_i M[i][j] s_i)_j : H^0(E(1-d))^b -> H^0(E(2-d))^a.
  MatrixFp map(p_.field(), a * n2, b * n1);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      const MatrixFp block = induced_multiplication(*lower, *upper, p_.field(), p_.entry(i, j));
      for (std::size_t r = 0; r < n2; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
          const std::uint32_t v = block.at(r, c);
          if (v != 0) map.set(j * n2 + r, i * n1 + c, v);
        }
      }
    }
  }
  const auto rk = static_cast<std::int64_t>(map.rows() && map.cols() ? rank(map) : 0);
  CohomologyDims out;
  out.h0 = static_cast<std::int64_t>(b * n1) - rk;
  out.h1 = static_cast<std::int64_t>(a * n2) - rk;
  out.h2 = 0;
  const CohomologyDims e_lower = bundle(1 - d);
  const CohomologyDims e_upper = bundle(2 - d);
  out.determined = e_lower.h1 == 0 && e_lower.h2 == 0 && e_upper.h1 == 0 && e_lower.determined &&
                   e_upper.determined;
  return out;
}

OmegaTable CohomologyEngine::omega_table() const {
  const int d = p_.d();
  OmegaTable table;
  const CohomologyDims left = bundle(-d);     // Omega^2(2) = O(-1)
  const CohomologyDims right = bundle(1 - d);  // Omega^0 = O
  const CohomologyDims upper_dims = bundle(2 - d);

  // Euler sequence twisted by E(2-d):
  // 0 -> E(2-d) (x) Omega -> E(1-d)^3 -> E(2-d) -> 0.
  const auto lower = sections(1 - d);
  const auto upper = sections(2 - d);
  const std::size_t n1 = lower->dim();
  const std::size_t n2 = upper->dim();
  MatrixFp euler(p_.field(), n2, 3 * n1);
  const std::array<LinearForm, 3> vars{LinearForm::x(), LinearForm::y(), LinearForm::z()};
  for (std::size_t k = 0; k < 3; ++k) {
    const MatrixFp block = induced_multiplication(*lower, *upper, p_.field(), vars[k]);
    for (std::size_t r = 0; r < n2; ++r) {
      for (std::size_t c = 0; c < n1; ++c) {
        const std::uint32_t v = block.at(r, c);
        if (v != 0) euler.set(r, k * n1 + c, v);
      }
    }
  }
  const auto rk = static_cast<std::int64_t>(euler.rows() && euler.cols() ? rank(euler) : 0);
  const std::array<std::int64_t, 3> middle{static_cast<std::int64_t>(3 * n1) - rk,
                                           static_cast<std::int64_t>(n2) - rk, 0};
  const std::array<std::int64_t, 3> l{left.h0, left.h1, left.h2};
  const std::array<std::int64_t, 3> rt{right.h0, right.h1, right.h2};
  for (int q = 0; q < 3; ++q) {
    table.h[q][0] = l[q];
    table.h[q][1] = middle[q];
    table.h[q][2] = rt[q];
  }
  table.determined = right.h1 == 0 && right.h2 == 0 && upper_dims.h1 == 0 && left.determined &&
                     right.determined && upper_dims.determined;
  return table;
}

CohomologyProfile CohomologyEngine::profile(int m_from, int m_to) const {
  CohomologyProfile prof;
  prof.presentation_hash = p_.hash();
  for (int m = m_from; m <= m_to; ++m) prof.rows.push_back({m, bundle(m)});
  return prof;
}

CohomologyDims end_cohomology(const UlrichPresentation& p) { return CohomologyEngine(p).end_cohomology(); }

OmegaTable omega_table(const UlrichPresentation& p) { return CohomologyEngine(p).omega_table(); }

std::int64_t hom_presentations(const UlrichPresentation& p1, const UlrichPresentation& p2) {
  require_same_field(p1.field(), p2.field(), "hom_presentations");
  if (p1.d() != p2.d()) throw ParameterError("hom_presentations: degrees differ");
  const auto a1 = static_cast<std::size_t>(p1.a()), b1 = static_cast<std::size_t>(p1.b());
  const auto a2 = static_cast<std::size_t>(p2.a()), b2 = static_cast<std::size_t>(p2.b());
  const PrimeField& f = p1.field();
  // Unknowns: Q[i][k] (b2 x b1) then R[l][j] (a2 x a1).
  const std::size_t nq = b2 * b1;
  const std::size_t unknowns = nq + a2 * a1;
  MatrixFp system(f, 3 * b2 * a1, unknowns);
  for (std::size_t i = 0; i < b2; ++i) {
    for (std::size_t j = 0; j < a1; ++j) {
      for (int v = 0; v < 3; ++v) {
        const std::size_t row = (i * a1 + j) * 3 + static_cast<std::size_t>(v);
        // (Q M1)[i][j] = sum_k Q[i][k] M1[k][j]
        for (std::size_t k = 0; k < b1; ++k) {
          const std::uint32_t c = p1.entry(k, j).coeffs[v];
          if (c != 0) system.set(row, i * b1 + k, c);
        }
        // - (M2 R)[i][j] = - sum_l M2[i][l] R[l][j]
        for (std::size_t l = 0; l < a2; ++l) {
          const std::uint32_t c = p2.entry(i, l).coeffs[v];
          if (c != 0) system.set(row, nq + l * a1 + j, f.negr(c));
        }
      }
    }
  }
  const VectorFp zero(system.rows(), 0);
  const auto sol = solve_affine(system, zero);
  if (!sol) throw ConsistencyError("homogeneous system reported inconsistent");
  return static_cast<std::int64_t>(sol->null_dim);
}

}  // namespace ulrich
