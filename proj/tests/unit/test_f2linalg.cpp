#include <doctest.h>

#include <random>

#include "gkm2/f2linalg.hpp"

using namespace gkm2;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

F2Vector random_vector(std::mt19937_64& rng, std::size_t size) {
  std::bernoulli_distribution bit(0.5);
  F2Vector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i, bit(rng));
  return v;
}

bool is_rref(const F2Matrix& m) {
  std::size_t last_pivot = 0;
  bool first = true;
  bool seen_zero = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const F2Vector row = m.row(r);
    if (row.is_zero()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    const std::size_t p = row.first_set();
    if (!first && p <= last_pivot) return false;
    for (std::size_t other = 0; other < m.rows(); ++other)
      if (other != r && m.get(other, p)) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(F2Matrix::identity(4)) == 4);
  CHECK(rank(F2Matrix(3, 5)) == 0);
  CHECK(rank(F2Matrix::from_strings({"110", "011", "101"})) == 2);
  CHECK(naive::rank(F2Matrix::from_strings({"110", "011", "101"})) == 2);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(F2Matrix::identity(5)).empty());

  const auto zero_kernel = kernel_basis(F2Matrix(3, 4));
  REQUIRE(zero_kernel.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    F2Vector e(4);
    e.set(i);
    CHECK(zero_kernel[i] == e);
  }

  const auto k = kernel_basis(F2Matrix::from_strings({"11"}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].to_string() == "11");
}

TEST_CASE("solve") {
  std::mt19937_64 rng(5);
  const F2Vector b = random_vector(rng, 6);
  CHECK(solve(F2Matrix::identity(6), b) == b);

  const auto x = solve(F2Matrix::from_strings({"11"}), F2Vector::from_string("1"));
  REQUIRE(x);
  CHECK(x->to_string() == "10");

  CHECK_FALSE(solve(F2Matrix(1, 2), F2Vector::from_string("1")));
  CHECK_THROWS(solve(F2Matrix(2, 2), F2Vector(3)));
}

TEST_CASE("rref") {
  CHECK(rref(F2Matrix::identity(3)) == F2Matrix::identity(3));
  CHECK(rref(F2Matrix::from_strings({"11", "01"})) == F2Matrix::from_strings({"10", "01"}));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const F2Matrix m = random_matrix(rng, 1 + trial % 13, 1 + (trial * 7) % 90, 0.3);
    const F2Matrix r = rref(m);
    CHECK(is_rref(r));
    CHECK(rref(r) == r);
  }
}

TEST_CASE("tail bits stay clear") {
  F2Matrix m(2, 70);
  m.set(0, 69);
  m.set(1, 3);
  const F2Vector row = m.row(0);
  CHECK(row.popcount() == 1);
  CHECK(row.words().size() == 2);
  CHECK((row.words()[1] >> 6) == 0);
}

TEST_CASE("packed and naive kernels agree on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const double density = trial % 3 == 0 ? 0.1 : 0.5;
    const F2Matrix m = random_matrix(rng, rows, cols, density);
    const F2Vector b = trial % 2 == 0 ? m.multiply(random_vector(rng, cols)) : random_vector(rng, rows);

    CHECK(rank(m) == naive::rank(m));
    CHECK(rref(m) == naive::rref(m));
    const auto packed_kernel = kernel_basis(m);
    CHECK(packed_kernel == naive::kernel_basis(m));
    CHECK(rank(m) + packed_kernel.size() == cols);
    for (const auto& v : packed_kernel) {
      // Entry-wise check of m v = 0.
      for (std::size_t r = 0; r < rows; ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < cols; ++c) acc ^= m.get(r, c) && v.get(c);
        CHECK_FALSE(acc);
      }
    }
    const auto x = solve(m, b);
    const auto y = naive::solve(m, b);
    CHECK(x.has_value() == y.has_value());
    if (x && y) {
      CHECK(*x == *y);
      CHECK(m.multiply(*x) == b);
    }
  }
}

TEST_CASE("span_basis") {
  const std::vector<F2Vector> vs = {F2Vector::from_string("110"), F2Vector::from_string("011"),
                                    F2Vector::from_string("101")};
  const auto span = span_basis(vs, 3);
  REQUIRE(span.size() == 2);
  CHECK(span[0].to_string() == "101");
  CHECK(span[1].to_string() == "011");
}
