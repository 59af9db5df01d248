#include "gkm2/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gkm2 {

namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

struct Echelon {
  std::vector<std::size_t> pivots;  // pivot column of row r, for r < rank
};

// In-place elimination on the packed rows. With `reduce` set the result is
// the reduced row-echelon form; otherwise rows below each pivot are cleared
// only. Eliminated rows have no bits left of their pivot, so XORs start at
// the pivot word.
Echelon eliminate(F2Matrix& m, bool reduce) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t stride = m.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = r;
    while (pivot < rows && (m.row_words(pivot)[w] & bit) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const auto src = m.row_words(r);
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      auto dst = m.row_words(i);
      if ((dst[w] & bit) == 0) continue;
      for (std::size_t k = w; k < stride; ++k) dst[k] ^= src[k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::vector<F2Vector> kernel_from_rref(const F2Matrix& reduced, const Echelon& e) {
  const std::size_t cols = reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<F2Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(cols);
    v.set(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (reduced.get(r, f)) v.set(e.pivots[r]);
    basis.push_back(std::move(v));
  }
  return span_basis(basis, cols);
}

}  // namespace

F2Vector::F2Vector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("F2Vector: expected '0' or '1'");
  }
  return v;
}

void F2Vector::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

bool F2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::popcount() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::size_t F2Vector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return size_;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  if (size_ != other.size_) throw std::invalid_argument("F2Vector: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string F2Vector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) out[i] = '1';
  return out;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_rows(std::span<const F2Vector> rows, std::size_t cols) {
  F2Matrix m(0, cols);
  for (const auto& row : rows) m.append_row(row);
  return m;
}

F2Matrix F2Matrix::from_strings(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  F2Matrix m(0, cols);
  for (auto row : rows) {
    if (row.size() != cols) throw std::invalid_argument("F2Matrix: ragged rows");
    m.append_row(F2Vector::from_string(row));
  }
  return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  auto& word = data_[r * stride_ + c / 64];
  word = value ? (word | bit) : (word & ~bit);
}

F2Vector F2Matrix::row(std::size_t r) const {
  F2Vector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_,
              v.words().begin());
  return v;
}

void F2Matrix::append_row(const F2Vector& row) {
  if (row.size() != cols_) throw std::invalid_argument("F2Matrix: row length mismatch");
  data_.insert(data_.end(), row.words().begin(), row.words().end());
  ++rows_;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

F2Vector F2Matrix::multiply(const F2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("F2Matrix: vector length mismatch");
  F2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto words = row_words(r);
    for (std::size_t k = 0; k < stride_; ++k) acc ^= words[k] & v.words()[k];
    out.set(r, (std::popcount(acc) & 1) != 0);
  }
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

std::size_t rank(const F2Matrix& m) {
  F2Matrix work = m;
  return eliminate(work, false).pivots.size();
}

F2Matrix rref(const F2Matrix& m) {
  F2Matrix work = m;
  eliminate(work, true);
  return work;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
  F2Matrix work = m;
  const Echelon e = eliminate(work, true);
  return kernel_from_rref(work, e);
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const std::size_t n = m.cols();
  F2Matrix augmented(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto dst = augmented.row_words(r);
    const auto src = m.row_words(r);
    std::copy(src.begin(), src.end(), dst.begin());
    if (b.get(r)) augmented.set(r, n);
  }
  const Echelon e = eliminate(augmented, true);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  F2Vector x(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (augmented.get(r, n)) x.set(e.pivots[r]);
  return x;
}

std::vector<F2Vector> span_basis(std::span<const F2Vector> vectors, std::size_t size) {
  F2Matrix m(0, size);
  for (const auto& v : vectors) m.append_row(v);
  const Echelon e = eliminate(m, true);
  std::vector<F2Vector> out;
  out.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

namespace naive {

namespace {

using Dense = std::vector<std::vector<std::uint8_t>>;

Dense unpack(const F2Matrix& m, std::size_t extra_cols = 0) {
  Dense a(m.rows(), std::vector<std::uint8_t>(m.cols() + extra_cols, 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;
  return a;
}

// Gauss-Jordan over the first `limit` columns; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Dense& a, std::size_t cols, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = static_cast<std::uint8_t>(a[i][k] ^ a[r][k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

F2Matrix pack(const Dense& a, std::size_t cols) {
  F2Matrix m(a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0) m.set(r, c);
  return m;
}

Dense reduce_rows(Dense a, std::size_t cols) {
  const auto pivots = gauss_jordan(a, cols, cols);
  a.resize(pivots.size());
  return a;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
  Dense a = unpack(m);
  return gauss_jordan(a, m.cols(), m.cols()).size();
}

F2Matrix rref(const F2Matrix& m) {
  Dense a = unpack(m);
  gauss_jordan(a, m.cols(), m.cols());
  return pack(a, m.cols());
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
  const std::size_t cols = m.cols();
  Dense a = unpack(m);
  const auto pivots = gauss_jordan(a, cols, cols);
  Dense kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (a[r][f] != 0) v[pivots[r]] = 1;
    kernel.push_back(std::move(v));
  }
  kernel = reduce_rows(std::move(kernel), cols);
  std::vector<F2Vector> out;
  for (const auto& row : kernel) {
    F2Vector v(cols);
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c] != 0) v.set(c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const std::size_t n = m.cols();
  Dense a = unpack(m, 1);
  for (std::size_t r = 0; r < m.rows(); ++r) a[r][n] = b.get(r) ? 1 : 0;
  const auto pivots = gauss_jordan(a, n + 1, n);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][n] != 0) return std::nullopt;
  F2Vector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (a[r][n] != 0) x.set(pivots[r]);
  return x;
}

}  // namespace naive

}  // namespace gkm2
