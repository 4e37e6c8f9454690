#include "ulrich/linalg.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ulrich/error.hpp"

namespace ulrich {

// ---------------------------------------------------------------------------
// MatrixFp

MatrixFp::MatrixFp(PrimeField field, std::size_t rows, std::size_t cols, Storage storage)
    : field_(field), rows_(rows), cols_(cols), storage_(storage) {
  if (storage_ == Storage::Dense) {
    dense_.assign(rows * cols, 0);
  } else {
    sparse_.resize(rows);
  }
}

MatrixFp MatrixFp::identity(PrimeField field, std::size_t n) {
  MatrixFp m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.dense_[i * n + i] = 1;
  return m;
}

MatrixFp MatrixFp::random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng) {
  MatrixFp m(field, rows, cols);
  for (auto& x : m.dense_) x = field.random_element(rng).value;
  return m;
}

std::uint32_t MatrixFp::at(std::size_t r, std::size_t c) const {
  if (storage_ == Storage::Dense) return dense_[r * cols_ + c];
  const auto& row = sparse_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : 0;
}

void MatrixFp::set(std::size_t r, std::size_t c, std::uint64_t value) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  const std::uint32_t v = field_.reduce(value);
  if (storage_ == Storage::Dense) {
    dense_[r * cols_ + c] = v;
    return;
  }
  auto& row = sparse_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (v != 0) {
    row.insert(it, SparseEntry{static_cast<std::uint32_t>(c), v});
  }
}

void MatrixFp::add_to(std::size_t r, std::size_t c, std::uint32_t value) {
  set(r, c, static_cast<std::uint64_t>(at(r, c)) + value);
}

std::span<const std::uint32_t> MatrixFp::dense_row(std::size_t r) const {
  return {dense_.data() + r * cols_, cols_};
}

std::span<std::uint32_t> MatrixFp::dense_row(std::size_t r) {
  return {dense_.data() + r * cols_, cols_};
}

const SparseRow& MatrixFp::sparse_row(std::size_t r) const { return sparse_[r]; }

MatrixFp MatrixFp::to_dense() const {
  if (storage_ == Storage::Dense) return *this;
  MatrixFp out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : sparse_[r]) out.dense_[r * cols_ + e.col] = e.value;
  }
  return out;
}

MatrixFp MatrixFp::to_sparse() const {
  if (storage_ == Storage::Sparse) return *this;
  MatrixFp out(field_, rows_, cols_, Storage::Sparse);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::uint32_t v = dense_[r * cols_ + c];
      if (v != 0) out.sparse_[r].push_back({static_cast<std::uint32_t>(c), v});
    }
  }
  return out;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp out(field_, cols_, rows_, storage_);
  if (storage_ == Storage::Dense) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.dense_[c * rows_ + r] = dense_[r * cols_ + c];
    }
  } else {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (const auto& e : sparse_[r]) {
        out.sparse_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
      }
    }
  }
  return out;
}

std::size_t MatrixFp::nonzeros() const {
  if (storage_ == Storage::Dense) {
    return static_cast<std::size_t>(
        std::count_if(dense_.begin(), dense_.end(), [](std::uint32_t x) { return x != 0; }));
  }
  std::size_t n = 0;
  for (const auto& row : sparse_) n += row.size();
  return n;
}

VectorFp MatrixFp::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length does not match columns");
  VectorFp out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    if (storage_ == Storage::Dense) {
      for (std::size_t c = 0; c < cols_; ++c) {
        acc = (acc + static_cast<std::uint64_t>(dense_[r * cols_ + c]) * v[c]) % field_.modulus();
      }
    } else {
      for (const auto& e : sparse_[r]) {
        acc = (acc + static_cast<std::uint64_t>(e.value) * v[e.col]) % field_.modulus();
      }
    }
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
  require_same_field(a.field_, b.field_, "matrix product");
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  const MatrixFp ad = a.to_dense();
  const MatrixFp bd = b.to_dense();
  MatrixFp out(a.field_, a.rows_, b.cols_);
  const std::uint64_t p = a.field_.modulus();
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = ad.dense_[i * a.cols_ + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        acc[j] = (acc[j] + x * bd.dense_[k * b.cols_ + j]) % p;
      }
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out.dense_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
  }
  return out;
}

MatrixFp operator+(const MatrixFp& a, const MatrixFp& b) {
  require_same_field(a.field_, b.field_, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
  MatrixFp out = a.to_dense();
  const MatrixFp bd = b.to_dense();
  for (std::size_t i = 0; i < out.dense_.size(); ++i) {
    out.dense_[i] = a.field_.add({out.dense_[i]}, {bd.dense_[i]}).value;
  }
  return out;
}

bool operator==(const MatrixFp& a, const MatrixFp& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.to_dense().dense_ == b.to_dense().dense_;
}

// ---------------------------------------------------------------------------
// Dense rank

namespace {

// Row echelon elimination on a row-major buffer of reduced residues, pivot =
// first nonzero entry. Returns pivot (row, col) pairs in elimination order;
// rows of `a` are permuted so that pivot i sits in row i.
std::size_t eliminate_plain(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                            const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols + c),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols + c));
    }
    std::uint32_t* prow = a.data() + rank * cols;
    const std::uint64_t inv = f.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = a.data() + r * cols;
      if (row[c] == 0) continue;
      const std::uint64_t factor = p - row[c];
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

constexpr std::size_t kPanelWidth = 64;
constexpr double kExactDoubleBound = 9007199254740992.0;  // 2^53

bool fits_double_kernel(std::uint32_t p, std::size_t width) {
  const double q = static_cast<double>(p - 1);
  return q * q * static_cast<double>(width + 1) + q < kExactDoubleBound;
}

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using StridedBlock = Eigen::Map<RowMajor, 0, Eigen::OuterStride<>>;

inline double reduce_double(double x, double p, double inv_p) {
  double r = x - std::floor(x * inv_p) * p;
  r = r < 0 ? r + p : r;
  return r >= p ? r - p : r;
}

inline void reduce_span(double* x, std::size_t n, double p, double inv_p) {
  for (std::size_t i = 0; i < n; ++i) x[i] = reduce_double(x[i], p, inv_p);
}

// Blocked elimination. Columns are processed in panels; each panel is
// factored on a reduced copy to locate pivots, then the remaining rows get a
// Schur-complement update  A_O,T -= (A_O,piv · G^-1) · A_P,T  done as a
// double-precision GEMM. Entries and partial sums stay below 2^53, so the
// arithmetic is exact. Trailing entries are reduced lazily: only the panel
// and the pivot rows are brought back to [0, p) before they are read.
// Pivot rows are dropped once used.
std::size_t rank_blocked(const MatrixFp& m) {
  const PrimeField& f = m.field();
  const std::uint32_t pu = f.modulus();
  const double p = pu;
  const double inv_p = 1.0 / p;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<double> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto src = m.dense_row(r);
    std::copy(src.begin(), src.end(), a.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }

  // Unreduced entries grow by at most kPanelWidth*(p-1)^2 per update.
  const double q = p - 1;
  const auto max_pending = static_cast<std::size_t>(
      std::max(1.0, std::floor((kExactDoubleBound - p) / (static_cast<double>(kPanelWidth) * q * q)) - 1));
  std::size_t pending = 0;

  std::size_t r0 = 0;
  std::vector<double> panel;
  std::vector<std::size_t> order;
  for (std::size_t c0 = 0; c0 < cols && r0 < rows; c0 += kPanelWidth) {
    const std::size_t c1 = std::min(cols, c0 + kPanelWidth);
    const std::size_t w = c1 - c0;
    const std::size_t live = rows - r0;

    // 1. Locate pivots of the panel on a scratch copy.
    panel.resize(live * w);
    for (std::size_t i = 0; i < live; ++i) {
      double* src = a.data() + (r0 + i) * cols + c0;
      reduce_span(src, w, p, inv_p);
      std::copy(src, src + w, panel.begin() + static_cast<std::ptrdiff_t>(i * w));
    }
    order.resize(live);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> pivot_rows;  // live-row index of each pivot
    std::vector<std::size_t> pivot_cols;  // panel column of each pivot
    {
      std::size_t rk = 0;
      for (std::size_t j = 0; j < w && rk < live; ++j) {
        std::size_t piv = rk;
        while (piv < live && panel[order[piv] * w + j] == 0) ++piv;
        if (piv == live) continue;
        std::swap(order[piv], order[rk]);
        double* prow = panel.data() + order[rk] * w;
        const double inv = f.inv(static_cast<std::uint32_t>(prow[j]));
        for (std::size_t k = j; k < w; ++k) prow[k] = reduce_double(prow[k] * inv, p, inv_p);
        for (std::size_t i = rk + 1; i < live; ++i) {
          double* row = panel.data() + order[i] * w;
          if (row[j] == 0) continue;
          const double factor = p - row[j];
          for (std::size_t k = j; k < w; ++k) row[k] = reduce_double(row[k] + factor * prow[k], p, inv_p);
        }
        pivot_rows.push_back(order[rk]);
        pivot_cols.push_back(j);
        ++rk;
      }
    }
    const std::size_t s = pivot_rows.size();
    if (s == 0) continue;

    // 2. Swap pivot rows to the top of the live block; the order of the
    // other rows does not matter for the rank.
    {
      std::vector<std::size_t> slot(live);      // live row -> current slot
      std::vector<std::size_t> occupant(live);  // slot -> live row
      std::iota(slot.begin(), slot.end(), 0);
      std::iota(occupant.begin(), occupant.end(), 0);
      for (std::size_t k = 0; k < s; ++k) {
        const std::size_t from = slot[pivot_rows[k]];
        if (from == k) continue;
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>((r0 + from) * cols + c0),
                         a.begin() + static_cast<std::ptrdiff_t>((r0 + from + 1) * cols),
                         a.begin() + static_cast<std::ptrdiff_t>((r0 + k) * cols + c0));
        const std::size_t displaced = occupant[k];
        occupant[from] = displaced;
        slot[displaced] = from;
        occupant[k] = pivot_rows[k];
        slot[pivot_rows[k]] = k;
      }
    }

    const std::size_t rest = live - s;
    if (rest > 0 && c1 < cols) {
      // 3. G^-1 for the s x s pivot block.
      std::vector<std::uint32_t> g(s * 2 * s, 0);
      for (std::size_t i = 0; i < s; ++i) {
        const double* src = a.data() + (r0 + i) * cols + c0;
        for (std::size_t j = 0; j < s; ++j) g[i * 2 * s + j] = static_cast<std::uint32_t>(src[pivot_cols[j]]);
        g[i * 2 * s + s + i] = 1;
      }
      if (eliminate_plain(g, s, 2 * s, f) != s) throw ConsistencyError("panel pivot block is singular");
      // eliminate_plain leaves an upper echelon form; finish Gauss-Jordan.
      for (std::size_t i = s; i-- > 0;) {
        const std::uint32_t* prow = g.data() + i * 2 * s;
        for (std::size_t k = 0; k < i; ++k) {
          std::uint32_t* row = g.data() + k * 2 * s;
          if (row[i] == 0) continue;
          const std::uint64_t factor = pu - row[i];
          for (std::size_t j = i; j < 2 * s; ++j) {
            row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % pu);
          }
        }
      }
      RowMajor ginv(s, s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) ginv(i, j) = g[i * 2 * s + s + j];
      }

      // 4. K = -(A_O,piv · G^-1) mod p, stored non-negative.
      RowMajor gathered(rest, s);
      for (std::size_t i = 0; i < rest; ++i) {
        const double* src = a.data() + (r0 + s + i) * cols + c0;
        for (std::size_t j = 0; j < s; ++j) gathered(i, j) = src[pivot_cols[j]];
      }
      RowMajor k = gathered * ginv;
      for (Eigen::Index i = 0; i < k.size(); ++i) {
        const double v = reduce_double(k.data()[i], p, inv_p);
        k.data()[i] = v == 0 ? 0 : p - v;
      }

      // 5. Trailing update and reduction.
      const std::size_t tail = cols - c1;
      StridedBlock pivots(a.data() + r0 * cols + c1, static_cast<Eigen::Index>(s),
                          static_cast<Eigen::Index>(tail), Eigen::OuterStride<>(static_cast<Eigen::Index>(cols)));
      StridedBlock trailing(a.data() + (r0 + s) * cols + c1, static_cast<Eigen::Index>(rest),
                            static_cast<Eigen::Index>(tail), Eigen::OuterStride<>(static_cast<Eigen::Index>(cols)));
      for (std::size_t i = 0; i < s; ++i) reduce_span(a.data() + (r0 + i) * cols + c1, tail, p, inv_p);
      trailing.noalias() += k * pivots;
      if (++pending == max_pending) {
        for (std::size_t i = 0; i < rest; ++i) reduce_span(a.data() + (r0 + s + i) * cols + c1, tail, p, inv_p);
        pending = 0;
      }
    }
    r0 += s;
    if (c1 == cols) break;
  }
  return r0;
}

}  // namespace

std::size_t rank_dense(const MatrixFp& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.storage() == Storage::Sparse) return rank_dense(m.to_dense());
  // Eliminate along the longer side so panels are as tall as possible.
  if (m.rows() < m.cols() && m.rows() * m.cols() > 4096) return rank_dense(m.transpose());
  if (fits_double_kernel(m.field().modulus(), kPanelWidth) && m.cols() > 64) {
    return rank_blocked(m);
  }
  std::vector<std::uint32_t> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.dense_row(r);
    std::copy(src.begin(), src.end(), a.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  return eliminate_plain(a, m.rows(), m.cols(), m.field());
}

// ---------------------------------------------------------------------------
// Sparse rank

std::size_t rank_sparse(const MatrixFp& m, double densify_at) {
  if (m.storage() == Storage::Dense) return rank_sparse(m.to_sparse(), densify_at);
  const PrimeField& f = m.field();
  const std::uint64_t p = f.modulus();
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();

  std::vector<SparseRow> rows(nrows);
  std::vector<std::uint32_t> col_count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);  // may hold stale ids
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r] = m.sparse_row(r);
    nnz += rows[r].size();
    for (const auto& e : rows[r]) {
      ++col_count[e.col];
      col_rows[e.col].push_back(static_cast<std::uint32_t>(r));
    }
  }
  std::vector<char> row_alive(nrows, 1);
  std::vector<char> col_alive(ncols, 1);
  std::size_t live_rows = nrows;
  std::size_t live_cols = ncols;
  std::size_t rank = 0;

  auto contains = [](const SparseRow& row, std::uint32_t c) -> std::uint32_t {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::uint32_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? it->value : 0;
  };

  SparseRow merged;
  while (live_rows > 0 && live_cols > 0) {
    // Drop empty rows.
    for (std::size_t r = 0; r < nrows; ++r) {
      if (row_alive[r] && rows[r].empty()) {
        row_alive[r] = 0;
        --live_rows;
      }
    }
    if (live_rows == 0) break;

    if (static_cast<double>(nnz) > densify_at * static_cast<double>(live_rows) * static_cast<double>(live_cols)) {
      std::vector<std::uint32_t> col_index(ncols, 0);
      std::size_t nc = 0;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (col_alive[c]) col_index[c] = static_cast<std::uint32_t>(nc++);
      }
      MatrixFp rest(f, live_rows, nc);
      std::size_t i = 0;
      for (std::size_t r = 0; r < nrows; ++r) {
        if (!row_alive[r]) continue;
        auto out = rest.dense_row(i++);
        for (const auto& e : rows[r]) out[col_index[e.col]] = e.value;
      }
      return rank + rank_dense(rest);
    }

    // Markowitz-style choice: shortest live row, then within it the column
    // with the fewest live entries.
    std::size_t best_row = nrows;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (row_alive[r] && (best_row == nrows || rows[r].size() < rows[best_row].size())) best_row = r;
    }
    const SparseRow& prow_ref = rows[best_row];
    std::uint32_t best_col = prow_ref.front().col;
    for (const auto& e : prow_ref) {
      if (col_count[e.col] < col_count[best_col]) best_col = e.col;
    }

    SparseRow pivot = std::move(rows[best_row]);
    rows[best_row].clear();
    row_alive[best_row] = 0;
    --live_rows;
    col_alive[best_col] = 0;
    --live_cols;
    nnz -= pivot.size();
    for (const auto& e : pivot) --col_count[e.col];
    ++rank;

    const std::uint64_t pinv = f.inv(contains(pivot, best_col));
    auto& candidates = col_rows[best_col];
    for (std::uint32_t r : candidates) {
      if (!row_alive[r]) continue;
      SparseRow& row = rows[r];
      const std::uint32_t v = contains(row, best_col);
      if (v == 0) continue;
      const std::uint64_t factor = (p - v) * pinv % p;
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
          merged.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].col < row[i].col) {
          const auto val = static_cast<std::uint32_t>(factor * pivot[j].value % p);
          if (val != 0) {
            merged.push_back({pivot[j].col, val});
            ++col_count[pivot[j].col];
            col_rows[pivot[j].col].push_back(r);
          }
          ++j;
        } else {
          const auto val = static_cast<std::uint32_t>((row[i].value + factor * pivot[j].value) % p);
          if (val != 0) {
            merged.push_back({row[i].col, val});
          } else {
            --col_count[row[i].col];
          }
          ++i;
          ++j;
        }
      }
      nnz = nnz - row.size() + merged.size();
      row.swap(merged);
    }
    candidates.clear();
    candidates.shrink_to_fit();
  }
  return rank;
}

std::size_t rank(const MatrixFp& m) {
  return m.storage() == Storage::Sparse ? rank_sparse(m) : rank_dense(m);
}

// ---------------------------------------------------------------------------
// Kernel and affine solve

namespace {

struct Rref {
  std::vector<std::uint32_t> a;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const MatrixFp& m, std::span<const std::uint32_t> extra_col = {}) {
  Rref out;
  out.rows = m.rows();
  out.cols = m.cols() + (extra_col.empty() ? 0 : 1);
  out.a.assign(out.rows * out.cols, 0);
  const MatrixFp d = m.to_dense();
  for (std::size_t r = 0; r < out.rows; ++r) {
    auto src = d.dense_row(r);
    std::copy(src.begin(), src.end(), out.a.begin() + static_cast<std::ptrdiff_t>(r * out.cols));
    if (!extra_col.empty()) out.a[r * out.cols + m.cols()] = extra_col[r];
  }
  const std::size_t rk = eliminate_plain(out.a, out.rows, out.cols, m.field());
  const std::uint64_t p = m.field().modulus();
  for (std::size_t i = 0; i < rk; ++i) {
    const std::uint32_t* row = out.a.data() + i * out.cols;
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    out.pivot_cols.push_back(c);
  }
  // Back substitution to reduced form.
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t c = out.pivot_cols[i];
    const std::uint32_t* prow = out.a.data() + i * out.cols;
    for (std::size_t k = 0; k < i; ++k) {
      std::uint32_t* row = out.a.data() + k * out.cols;
      if (row[c] == 0) continue;
      const std::uint64_t factor = p - row[c];
      for (std::size_t j = c; j < out.cols; ++j) row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % p);
    }
  }
  return out;
}

}  // namespace

std::vector<VectorFp> kernel_basis(const MatrixFp& m) {
  const Rref red = rref(m);
  const PrimeField& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = 1;
  std::vector<VectorFp> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorFp v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
      v[red.pivot_cols[i]] = f.negr(red.a[i * red.cols + free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const MatrixFp& a, std::span<const std::uint32_t> b) {
  if (b.size() != a.rows()) {
    throw DimensionError("solve_affine: right-hand side has " + std::to_string(b.size()) +
                         " entries, matrix has " + std::to_string(a.rows()) + " rows");
  }
  VectorFp rhs(b.begin(), b.end());
  for (auto& x : rhs) x = a.field().reduce(x);
  if (a.rows() == 0) return AffineSolution{VectorFp(a.cols(), 0), a.cols()};
  const Rref red = rref(a, rhs);
  AffineSolution sol;
  sol.particular.assign(a.cols(), 0);
  std::size_t rank_a = 0;
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
    const std::size_t c = red.pivot_cols[i];
    if (c == a.cols()) return std::nullopt;
    sol.particular[c] = red.a[i * red.cols + a.cols()];
    ++rank_a;
  }
  sol.null_dim = a.cols() - rank_a;
  return sol;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(PrimeField field, std::size_t dim) : field_(field), dim_(dim), row_at_(dim, -1) {}

void EchelonBasis::reduce(VectorFp& v) const {
  if (v.size() != dim_) throw DimensionError("EchelonBasis: vector has wrong length");
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivot_of_[i];
    if (v[c] == 0) continue;
    const std::uint64_t factor = p - v[c];
    const VectorFp& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] = static_cast<std::uint32_t>((v[j] + factor * row[j]) % p);
    }
  }
}

bool EchelonBasis::insert(VectorFp v) {
  reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  const std::uint64_t p = field_.modulus();
  const std::uint64_t inv = field_.inv(v[lead]);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p);
  for (auto& row : rows_) {
    if (row[lead] == 0) continue;
    const std::uint64_t factor = p - row[lead];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + factor * v[j]) % p);
    }
  }
  row_at_[lead] = static_cast<std::int64_t>(rows_.size());
  pivot_of_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out = pivot_of_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> EchelonBasis::free_coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (row_at_[c] < 0) out.push_back(c);
  }
  return out;
}

}  // namespace ulrich
