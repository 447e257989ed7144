#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "turan_forge/gf.hpp"

namespace turan_forge::poly {

// Exponent vector of one Laurent monomial; negative entries allowed.
using Monomial = std::vector<std::int32_t>;

std::int64_t monomial_degree(const Monomial& m);

// Ascending graded lexicographic order: total degree first, then lex on
// the exponent vector.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate Laurent polynomial. Coefficients are exact integers;
// when a modulus is attached they are kept reduced to [0, p). Zero
// coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexLess>;

  explicit Polynomial(unsigned nvars,
                      std::optional<std::uint64_t> modulus = std::nullopt);

  static Polynomial constant(unsigned nvars, const mpz_class& c,
                             std::optional<std::uint64_t> modulus = std::nullopt);
  static Polynomial variable(unsigned nvars, unsigned index,
                             std::optional<std::uint64_t> modulus = std::nullopt);

  unsigned nvars() const { return nvars_; }
  std::optional<std::uint64_t> modulus() const { return modulus_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c·x^m, merging with an existing term and dropping zeros.
  void add_term(const Monomial& m, const mpz_class& c);
  mpz_class coeff(const Monomial& m) const;

  bool is_laurent() const;       // any negative exponent present
  std::int64_t total_degree() const;  // max monomial degree, 0 for the zero polynomial

  // Monomials with nonzero coefficient, ascending graded-lex.
  std::vector<Monomial> support() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  bool operator==(const Polynomial& other) const;

  // Value at `point` mod p; entries of point must lie in [0, p). Negative
  // exponents use modular inversion and require the coordinate to be a
  // unit ("non-unit at Laurent monomial" otherwise). A polynomial with an
  // attached modulus can only be evaluated at that modulus.
  std::uint64_t evaluate(const std::vector<std::uint64_t>& point,
                         std::uint64_t p) const;

  // One term per line: "coeff e1 e2 ... ek", ascending graded-lex. The
  // zero polynomial serializes to the empty string.
  std::string to_text() const;
  static Polynomial from_text(const std::string& text, unsigned nvars,
                              std::optional<std::uint64_t> modulus = std::nullopt);

 private:
  void reduce_term(TermMap::iterator it);

  unsigned nvars_;
  std::optional<std::uint64_t> modulus_;
  TermMap terms_;
};

// Exact product; throws on mismatched variable counts or moduli.
Polynomial multiply(const Polynomial& f, const Polynomial& g);

// Flattened copy of a polynomial for tight evaluation loops: coefficient
// array plus per-variable power tables rebuilt at each point. Copies are
// independent; one instance must not be shared across threads (eval reuses
// internal scratch).
class PackedEvaluator {
 public:
  PackedEvaluator(const Polynomial& f, std::uint64_t p);

  std::uint64_t eval(const std::uint64_t* point) const;
  unsigned nvars() const { return nvars_; }

 private:
  unsigned nvars_;
  gf::PrimeField fp_;
  std::vector<std::uint64_t> coeffs_;
  std::vector<std::int32_t> exps_;     // term-major, nvars entries per term
  std::vector<std::int32_t> max_pos_;  // per variable
  std::vector<std::int32_t> max_neg_;  // per variable, magnitude
  std::vector<std::size_t> pos_off_, neg_off_;
  mutable std::vector<std::uint64_t> pow_pos_, pow_neg_;
};

}  // namespace turan_forge::poly
