#include "gkm2/f2poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gkm2 {

namespace {

void check_rank(std::size_t rank) {
  if (rank == 0 || rank > LinearForm::kMaxRank)
    throw AlgebraError("rank must be in 1.." + std::to_string(LinearForm::kMaxRank));
}

std::uint64_t mask_of(std::size_t rank, std::span<const int> support) {
  std::uint64_t mask = 0;
  for (int index : support) {
    if (index < 1 || static_cast<std::size_t>(index) > rank)
      throw AlgebraError("variable index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(rank));
    mask |= std::uint64_t{1} << (index - 1);
  }
  return mask;
}

void require_same_rank(const Polynomial& p, const Polynomial& q) {
  if (p.rank() != q.rank())
    throw AlgebraError("rank mismatch: " + std::to_string(p.rank()) + " vs " +
                       std::to_string(q.rank()));
}

void require_form(const Polynomial& p, const LinearForm& alpha) {
  if (alpha.is_zero()) throw AlgebraError("linear form is zero");
  if (alpha.rank() != p.rank())
    throw AlgebraError("rank mismatch between polynomial and linear form");
}

// Sorts and removes pairs of equal monomials.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

void append_monomials(std::size_t n, unsigned d, std::size_t var,
                      std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    current[var] = d;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    current[var] = e;
    append_monomials(n, d - e, var + 1, current, out);
  }
  current[var] = 0;
}

// Images of each variable under x_pivot := shift + (other support variables).
std::vector<Polynomial> pivot_substitution(const LinearForm& alpha, bool add_y) {
  const std::size_t n = alpha.rank();
  const int pivot = alpha.pivot();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int var = static_cast<int>(k) + 1;
    if (var != pivot) {
      images.push_back(Polynomial::variable(n, var));
      continue;
    }
    std::vector<Monomial> terms;
    for (int j : alpha.support())
      if (j != pivot) terms.push_back(Monomial::variable(n, j));
    if (add_y) terms.push_back(Monomial::variable(n, pivot));
    images.emplace_back(n, std::move(terms));
  }
  return images;
}

}  // namespace

LinearForm::LinearForm(std::size_t rank, std::span<const int> support) : rank_(rank) {
  check_rank(rank);
  mask_ = mask_of(rank, support);
  if (mask_ == 0) throw AlgebraError("linear form has empty support");
}

LinearForm LinearForm::possibly_zero(std::size_t rank, std::span<const int> support) {
  check_rank(rank);
  return from_mask(rank, mask_of(rank, support));
}

LinearForm LinearForm::variable(std::size_t rank, int index) {
  const int support[] = {index};
  return LinearForm(rank, support);
}

LinearForm LinearForm::from_mask(std::size_t rank, std::uint64_t mask) {
  check_rank(rank);
  if (rank < 64 && (mask >> rank) != 0) throw AlgebraError("mask exceeds rank");
  LinearForm form;
  form.rank_ = rank;
  form.mask_ = mask;
  return form;
}

bool LinearForm::contains(int index) const {
  return index >= 1 && static_cast<std::size_t>(index) <= rank_ &&
         ((mask_ >> (index - 1)) & 1U) != 0;
}

std::vector<int> LinearForm::support() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int LinearForm::pivot() const {
  if (mask_ == 0) throw AlgebraError("zero linear form has no pivot");
  return std::countr_zero(mask_) + 1;
}

std::string LinearForm::to_string() const {
  if (mask_ == 0) return "0";
  std::string out;
  for (int index : support()) {
    if (!out.empty()) out += '+';
    out += 'x' + std::to_string(index);
  }
  return out;
}

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
  for (unsigned e : exponents_) degree_ += e;
}

Monomial Monomial::one(std::size_t rank) { return Monomial(std::vector<unsigned>(rank, 0)); }

Monomial Monomial::variable(std::size_t rank, int index, unsigned power) {
  if (index < 1 || static_cast<std::size_t>(index) > rank)
    throw AlgebraError("variable index out of range");
  std::vector<unsigned> e(rank, 0);
  e[index - 1] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (rank() != other.rank()) throw AlgebraError("rank mismatch in monomial product");
  std::vector<unsigned> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string(std::ptrdiff_t y_slot) const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += static_cast<std::ptrdiff_t>(i) == y_slot ? std::string("y")
                                                    : 'x' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Reversed lexicographic comparison on exponents.
  return b.exponents_ <=> a.exponents_;
}

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  if (n == 0) throw AlgebraError("monomial_basis needs n >= 1");
  std::vector<Monomial> out;
  out.reserve(monomial_count(n, d));
  std::vector<unsigned> current(n, 0);
  append_monomials(n, d, 0, current, out);
  return out;
}

std::size_t monomial_count(std::size_t n, unsigned d) {
  // C(n-1+d, n-1), computed incrementally to stay exact.
  std::size_t result = 1;
  for (std::size_t k = 1; k < n; ++k) result = result * (d + k) / k;
  return result;
}

Polynomial::Polynomial(std::size_t rank, std::vector<Monomial> terms) : rank_(rank) {
  for (const auto& m : terms)
    if (m.rank() != rank) throw AlgebraError("monomial rank differs from polynomial rank");
  terms_ = cancel_pairs(std::move(terms));
}

Polynomial Polynomial::constant(std::size_t rank, bool value) {
  Polynomial p(rank);
  if (value) p.terms_.push_back(Monomial::one(rank));
  return p;
}

Polynomial Polynomial::variable(std::size_t rank, int index) {
  return from_monomial(Monomial::variable(rank, index));
}

Polynomial Polynomial::from_monomial(const Monomial& m) {
  Polynomial p(m.rank());
  p.terms_.push_back(m);
  return p;
}

Polynomial Polynomial::from_linear(const LinearForm& form) {
  Polynomial p(form.rank());
  for (int index : form.support()) p.terms_.push_back(Monomial::variable(form.rank(), index));
  std::sort(p.terms_.begin(), p.terms_.end());
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().degree());
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_rank(*this, other);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_rank(a, b);
  std::vector<Monomial> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back(s * t);
  Polynomial out(a.rank_);
  out.terms_ = cancel_pairs(std::move(products));
  return out;
}

std::string Polynomial::to_string(std::ptrdiff_t y_slot) const {
  if (terms_.empty()) return "0";
  // Highest degree first; within one degree keep the graded order.
  std::vector<const Monomial*> order;
  for (const auto& m : terms_) order.push_back(&m);
  std::stable_sort(order.begin(), order.end(), [](const Monomial* a, const Monomial* b) {
    return a->degree() > b->degree();
  });
  std::string out;
  for (const Monomial* m : order) {
    if (!out.empty()) out += '+';
    out += m->to_string(y_slot);
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.rank());
  Polynomial square = p;
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1;
    if (exponent != 0) {
      // Frobenius: squaring is additive in characteristic 2.
      std::vector<Monomial> doubled;
      doubled.reserve(square.terms().size());
      for (const auto& m : square.terms()) doubled.push_back(m * m);
      square = Polynomial(p.rank(), std::move(doubled));
    }
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images,
                      std::size_t target_rank) {
  if (images.size() != p.rank())
    throw AlgebraError("substitution needs one image per variable");
  for (const auto& image : images)
    if (image.rank() != target_rank) throw AlgebraError("substitution image has wrong rank");

  std::vector<Monomial> collected;
  for (const auto& m : p.terms()) {
    Polynomial product = Polynomial::constant(target_rank);
    for (std::size_t k = 0; k < m.rank() && !product.is_zero(); ++k)
      if (m.exponent(k) != 0) product = product * power(images[k], m.exponent(k));
    collected.insert(collected.end(), product.terms().begin(), product.terms().end());
  }
  return Polynomial(target_rank, std::move(collected));
}

Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& alpha) {
  require_form(p, alpha);
  const auto images = pivot_substitution(alpha, false);
  return substitute(p, images, p.rank());
}

bool divides_linear(const LinearForm& alpha, const Polynomial& p) {
  return reduce_mod_linear(p, alpha).is_zero();
}

SquareResidue residue_mod_linear_square(const Polynomial& p, const LinearForm& alpha) {
  require_form(p, alpha);
  // x_i = y + sum_{j != i} x_j, with y stored in slot i.
  const auto images = pivot_substitution(alpha, true);
  const Polynomial rewritten = substitute(p, images, p.rank());
  const std::size_t slot = static_cast<std::size_t>(alpha.pivot() - 1);
  std::vector<Monomial> low;
  for (const auto& m : rewritten.terms())
    if (m.exponent(slot) <= 1) low.push_back(m);
  return SquareResidue{Polynomial(p.rank(), std::move(low)), slot};
}

}  // namespace gkm2
