#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace turan_forge::gf {

bool is_prime(std::uint64_t n);

// Arithmetic mod a prime p. All inputs to add/sub/mul/pow/inv must already
// lie in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p_;  // p < 2^31 keeps the product in range
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce_signed(std::int64_t v) const;

 private:
  std::uint64_t p_;
};

// Inverse of a mod field.p() via extended gcd. Throws std::domain_error
// ("non-invertible element") when a == 0 mod p.
std::uint64_t fp_inv(std::uint64_t a, const PrimeField& field);

// Lexicographically smallest monic irreducible of degree m over F_p,
// ordering candidates by the tuple (c_{m-1}, ..., c_1, c_0) of non-leading
// coefficients. Returned constant-term first with the leading 1 included,
// so the vector has length m + 1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned m);

class ExtField;

// Element of an ExtField: coefficient vector of length m, constant term
// first, entries in [0, p). The field must outlive its elements.
struct ExtElement {
  std::vector<std::uint64_t> coeffs;
  const ExtField* field = nullptr;

  bool is_zero() const;
  bool operator==(const ExtElement& other) const = default;
};

// F_{p^m} as F_p[x] modulo find_irreducible(p, m) (or a caller-supplied
// irreducible). Sizes are capped at p^m <= 10^7.
class ExtField {
 public:
  ExtField(std::uint64_t p, unsigned m);
  ExtField(std::uint64_t p, unsigned m, std::vector<std::uint64_t> irreducible);

  std::uint64_t p() const { return fp_.p(); }
  unsigned m() const { return m_; }
  const PrimeField& prime_field() const { return fp_; }
  const std::vector<std::uint64_t>& irreducible() const { return irr_; }
  std::uint64_t size() const { return size_; }

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement gen() const;  // the class of x
  ExtElement element(std::vector<std::uint64_t> coeffs) const;

  // Bijection [0, p^m) <-> elements; index digits are base-p with the
  // constant coefficient least significant.
  ExtElement from_index(std::uint64_t index) const;
  std::uint64_t index_of(const ExtElement& a) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement pow(const ExtElement& a, std::uint64_t e) const;

  // Coordinates of x^k mod the irreducible, k arbitrary.
  std::vector<std::uint64_t> x_power_coords(unsigned k) const;

  // Matrix of the Frobenius a -> a^p in the basis 1, x, ..., x^{m-1};
  // column j holds the coordinates of (x^j)^p.
  std::vector<std::vector<std::uint64_t>> frobenius_matrix() const;

 private:
  void check_element(const ExtElement& a, const char* what) const;

  PrimeField fp_;
  unsigned m_;
  std::uint64_t size_;
  std::vector<std::uint64_t> irr_;
};

// N(a) = a^((p^m - 1)/(p - 1)), the multiplicative norm down to F_p.
// Returns a value in [0, p); norm(0) = 0.
std::uint64_t norm(const ExtElement& a);

}  // namespace turan_forge::gf
