#pragma once

// Dense linear algebra over F2.
//
// The production kernel packs 64 entries per machine word and eliminates by
// row XOR. `gkm2::naive` holds an independent one-byte-per-entry kernel that
// the tests and the `oracle` command use as a cross-check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkm2 {

class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size);
  /// From a string of '0'/'1' characters, index 0 first.
  static F2Vector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const;

  F2Vector& operator^=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string to_string() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major packed F2 matrix. Tail bits past `cols` in each row stay zero.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(std::span<const F2Vector> rows, std::size_t cols);
  /// Rows as '0'/'1' strings of equal length.
  static F2Matrix from_strings(std::span<const std::string_view> rows);
  static F2Matrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return ((data_[r * stride_ + c / 64] >> (c % 64)) & 1U) != 0;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  F2Vector row(std::size_t r) const;

  /// Appends a row of length cols().
  void append_row(const F2Vector& row);
  void swap_rows(std::size_t a, std::size_t b);

  F2Vector multiply(const F2Vector& v) const;
  F2Matrix transpose() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

std::size_t rank(const F2Matrix& m);
F2Matrix rref(const F2Matrix& m);
/// Basis of {v : m v = 0}, itself in reduced row-echelon form.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);
/// A solution of m v = b with every free variable zero, or nullopt.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

/// Reduced row-echelon form of the span of `vectors` (zero rows dropped).
std::vector<F2Vector> span_basis(std::span<const F2Vector> vectors, std::size_t size);

namespace naive {

// Reference kernel: one byte per entry, textbook Gauss-Jordan. Shares no
// code with the packed kernel.
std::size_t rank(const F2Matrix& m);
F2Matrix rref(const F2Matrix& m);
std::vector<F2Vector> kernel_basis(const F2Matrix& m);
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

}  // namespace naive

}  // namespace gkm2
