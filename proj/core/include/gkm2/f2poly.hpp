#pragma once

// Polynomials over F2 = Z/2 in variables x1..xn.
//
// Coefficients are implicit: a polynomial is the set of monomials whose
// coefficient is 1. Addition is symmetric difference of term sets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm2 {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear form over F2 in n variables, stored as a bit mask of its support.
/// Ranks up to 64 are supported.
class LinearForm {
 public:
  static constexpr std::size_t kMaxRank = 64;

  LinearForm() = default;

  /// Support given as 1-based variable indices. Throws on an empty support.
  LinearForm(std::size_t rank, std::span<const int> support);
  LinearForm(std::size_t rank, std::initializer_list<int> support)
      : LinearForm(rank, std::span<const int>(support.begin(), support.size())) {}

  /// Admits the zero form. Only meant for ingesting degenerate weight data
  /// that validation is expected to reject.
  static LinearForm possibly_zero(std::size_t rank, std::span<const int> support);

  static LinearForm variable(std::size_t rank, int index);
  static LinearForm from_mask(std::size_t rank, std::uint64_t mask);

  std::size_t rank() const { return rank_; }
  std::uint64_t mask() const { return mask_; }
  bool is_zero() const { return mask_ == 0; }
  bool contains(int index) const;

  /// 1-based variable indices with coefficient 1, ascending.
  std::vector<int> support() const;

  /// Smallest variable index in the support (1-based). Throws on zero.
  int pivot() const;

  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  std::size_t rank_ = 0;
  std::uint64_t mask_ = 0;
};

/// Exponent vector of a monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);
  static Monomial one(std::size_t rank);
  static Monomial variable(std::size_t rank, int index, unsigned power = 1);

  std::size_t rank() const { return exponents_.size(); }
  unsigned degree() const { return degree_; }
  unsigned exponent(std::size_t var) const { return exponents_[var]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;

  /// `x1^2*x3`, or `1` for the unit. `y_slot` renames that variable to `y`.
  std::string to_string(std::ptrdiff_t y_slot = -1) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  /// Graded order: lower degree first; within a degree, larger exponent of
  /// x1 first, then of x2, and so on (x1^3, x1^2*x2, x1*x2^2, x2^3).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// All degree-d monomials in n variables, in graded order.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// Number of degree-d monomials in n variables: C(n-1+d, d).
std::size_t monomial_count(std::size_t n, unsigned d);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t rank) : rank_(rank) {}
  /// Terms may repeat; pairs cancel.
  Polynomial(std::size_t rank, std::vector<Monomial> terms);

  static Polynomial constant(std::size_t rank, bool value = true);
  static Polynomial variable(std::size_t rank, int index);
  static Polynomial from_monomial(const Monomial& m);
  static Polynomial from_linear(const LinearForm& form);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sorted ascending in graded order, no duplicates.
  const std::vector<Monomial>& terms() const { return terms_; }
  bool contains(const Monomial& m) const;

  bool is_homogeneous() const;
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Terms highest degree first, `+`-separated; `0` for zero.
  std::string to_string(std::ptrdiff_t y_slot = -1) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Monomial> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, unsigned exponent);

/// Ring map sending x_k to images[k]. Every image must have rank
/// `target_rank`; images.size() must equal p.rank().
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images,
                      std::size_t target_rank);

/// Image of p in F2[x]/(alpha), written without the pivot variable
/// x_i (i = alpha.pivot()) via x_i := sum of the other support variables.
Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& alpha);

/// True iff alpha divides p.
bool divides_linear(const LinearForm& alpha, const Polynomial& p);

/// p rewritten in coordinates (y, x_j for j != i), where y = alpha and
/// i = alpha.pivot(), keeping only terms of y-degree 0 or 1. The variable
/// slot i holds the exponent of y. Zero iff alpha^2 divides p.
struct SquareResidue {
  Polynomial terms;
  std::size_t y_slot = 0;

  bool is_zero() const { return terms.is_zero(); }
  std::string to_string() const { return terms.to_string(static_cast<std::ptrdiff_t>(y_slot)); }
};

SquareResidue residue_mod_linear_square(const Polynomial& p, const LinearForm& alpha);

}  // namespace gkm2
