#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markov12/integer.hpp"
#include "markov12/rational.hpp"

namespace markov12 {

// Exponent vector over variables x1..xn (stored 0-based); entries may be negative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::int64_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::int64_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  std::int64_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::int64_t> exponents() const { return exps_; }
  std::int64_t total_degree() const;
  bool is_one() const;

  // Sparse view: variable index -> nonzero exponent.
  std::map<std::size_t, std::int64_t> support() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int64_t> exps_;
};

// Graded lexicographic order with x1 > x2 > ... ; returns <0, 0, >0.
int grlex_compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Terms are kept sorted by descending grlex with nonzero coefficients, so equal
// polynomials have identical storage.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t nvars = 0) : n_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, const Integer& c);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t index);
  static LaurentPolynomial from_monomial(const Monomial& m, const Integer& c = 1);
  // Sorts, merges equal monomials and drops zero coefficients.
  static LaurentPolynomial from_terms(std::size_t nvars,
                                      std::vector<std::pair<Monomial, Integer>> terms);

  std::size_t nvars() const { return n_; }
  std::size_t term_count() const { return coefs_.size(); }
  bool is_zero() const { return coefs_.empty(); }

  std::span<const std::int64_t> exponents(std::size_t term) const {
    return {exps_.data() + term * n_, n_};
  }
  Monomial monomial(std::size_t term) const;
  const Integer& coefficient(std::size_t term) const { return coefs_[term]; }
  Integer coefficient_of(const Monomial& m) const;

  // Per-variable minimum / maximum exponent over all terms; empty for the zero polynomial.
  std::vector<std::int64_t> min_exponents() const;
  std::vector<std::int64_t> max_exponents() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  friend class TermBuilder;

  std::size_t n_;
  std::vector<std::int64_t> exps_;
  std::vector<Integer> coefs_;
};

// Appends terms that are already in descending grlex order with nonzero coefficients.
class TermBuilder {
 public:
  explicit TermBuilder(std::size_t nvars) : poly_(nvars) {}
  void reserve(std::size_t terms);
  void append(std::span<const std::int64_t> exps, Integer coef);
  LaurentPolynomial finish() { return std::move(poly_); }

 private:
  LaurentPolynomial poly_;
};

LaurentPolynomial lp_add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial lp_sub(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial lp_neg(const LaurentPolynomial& p);
LaurentPolynomial lp_mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial lp_mul_monomial(const LaurentPolynomial& p, const Monomial& m,
                                  const Integer& c = 1);
LaurentPolynomial lp_pow(const LaurentPolynomial& p, unsigned exponent);
// Exact quotient r with r * q == p; throws NotDivisible when none exists.
LaurentPolynomial lp_div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q);
Rational lp_eval(const LaurentPolynomial& p, std::span<const Rational> point);
bool lp_is_laurent_positive(const LaurentPolynomial& p);
// True when every exponent of every term is nonnegative.
bool lp_is_polynomial(const LaurentPolynomial& p);

inline LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return lp_add(p, q);
}
inline LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return lp_sub(p, q);
}
inline LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return lp_mul(p, q);
}

// Canonical text, e.g. "x1^2 - 2*x1*x2^-1 + 3"; the zero polynomial is "0".
std::string to_text(const LaurentPolynomial& p);
std::string to_text(const Monomial& m);
LaurentPolynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace markov12
