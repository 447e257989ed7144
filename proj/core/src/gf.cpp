#include "turan_forge/gf.hpp"

#include <stdexcept>

namespace turan_forge::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("p too large");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1 % p_;
  std::uint64_t base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const { return fp_inv(a, *this); }

std::uint64_t PrimeField::reduce_signed(std::int64_t v) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t fp_inv(std::uint64_t a, const PrimeField& field) {
  const std::int64_t p = static_cast<std::int64_t>(field.p());
  std::int64_t r0 = p, r1 = static_cast<std::int64_t>(a % field.p());
  if (r1 == 0) throw std::domain_error("non-invertible element");
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  // r0 == gcd(a, p) == 1 since p is prime and a != 0 mod p
  if (t0 < 0) t0 += p;
  return static_cast<std::uint64_t>(t0);
}

namespace {

// Dense univariate polynomials over F_p, constant term first.

int poly_degree(const std::vector<std::uint64_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of f modulo monic g with deg g >= 1.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> f,
                                    const std::vector<std::uint64_t>& g,
                                    const PrimeField& fp) {
  const int dg = poly_degree(g);
  for (int k = poly_degree(f); k >= dg; --k) {
    const std::uint64_t c = f[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = f[static_cast<std::size_t>(k - dg + j)];
      slot = fp.sub(slot, fp.mul(c, g[static_cast<std::size_t>(j)]));
    }
  }
  f.resize(static_cast<std::size_t>(dg));
  return f;
}

bool is_zero_poly(const std::vector<std::uint64_t>& f) {
  return poly_degree(f) < 0;
}

// Irreducibility over F_p by trial division: a monic polynomial of degree m
// is reducible iff some monic divisor of degree in [1, m/2] divides it.
bool is_irreducible_monic(const std::vector<std::uint64_t>& f, unsigned m,
                          const PrimeField& fp) {
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  const std::uint64_t p = fp.p();
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t combos = 1;
    for (unsigned i = 0; i < d; ++i) combos *= p;
    std::vector<std::uint64_t> g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t v = 0; v < combos; ++v) {
      std::uint64_t rest = v;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      if (is_zero_poly(poly_rem(f, g, fp))) return false;
    }
  }
  return true;
}

constexpr std::uint64_t kFieldSizeCap = 10'000'000;

std::uint64_t checked_pow_size(std::uint64_t p, unsigned m) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (size > kFieldSizeCap / p)
      throw std::invalid_argument("field size p^m exceeds 10^7");
    size *= p;
  }
  return size;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned m) {
  if (m == 0) throw std::invalid_argument("degree m must be positive");
  const PrimeField fp(p);
  const std::uint64_t combos = checked_pow_size(p, m);
  std::vector<std::uint64_t> f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t v = 0; v < combos; ++v) {
    std::uint64_t rest = v;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    if (is_irreducible_monic(f, m, fp)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

bool ExtElement::is_zero() const {
  for (std::uint64_t c : coeffs)
    if (c != 0) return false;
  return true;
}

ExtField::ExtField(std::uint64_t p, unsigned m)
    : ExtField(p, m, find_irreducible(p, m)) {}

ExtField::ExtField(std::uint64_t p, unsigned m,
                   std::vector<std::uint64_t> irreducible)
    : fp_(p), m_(m), size_(checked_pow_size(p, m)), irr_(std::move(irreducible)) {
  if (m == 0) throw std::invalid_argument("degree m must be positive");
  if (irr_.size() != m + 1 || irr_[m] != 1)
    throw std::invalid_argument("modulus must be monic of degree m");
  for (std::uint64_t c : irr_)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!is_irreducible_monic(irr_, m, fp_))
    throw std::invalid_argument("modulus is reducible");
}

ExtElement ExtField::zero() const {
  return ExtElement{std::vector<std::uint64_t>(m_, 0), this};
}

ExtElement ExtField::one() const {
  ExtElement a = zero();
  a.coeffs[0] = 1 % p();
  return a;
}

ExtElement ExtField::gen() const {
  if (m_ == 1) {
    // x reduces to the constant -irr_[0]
    ExtElement a = zero();
    a.coeffs[0] = fp_.neg(irr_[0]);
    return a;
  }
  ExtElement a = zero();
  a.coeffs[1] = 1;
  return a;
}

ExtElement ExtField::element(std::vector<std::uint64_t> coeffs) const {
  if (coeffs.size() != m_)
    throw std::invalid_argument("coefficient vector must have length m");
  for (std::uint64_t c : coeffs)
    if (c >= p()) throw std::invalid_argument("coefficient out of range");
  return ExtElement{std::move(coeffs), this};
}

ExtElement ExtField::from_index(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("element index out of range");
  ExtElement a = zero();
  for (unsigned i = 0; i < m_; ++i) {
    a.coeffs[i] = index % p();
    index /= p();
  }
  return a;
}

std::uint64_t ExtField::index_of(const ExtElement& a) const {
  check_element(a, "index_of");
  std::uint64_t index = 0;
  for (unsigned i = m_; i-- > 0;) index = index * p() + a.coeffs[i];
  return index;
}

void ExtField::check_element(const ExtElement& a, const char* what) const {
  if (a.field != this || a.coeffs.size() != m_)
    throw std::invalid_argument(std::string(what) +
                                ": element from a different field");
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  check_element(a, "add");
  check_element(b, "add");
  ExtElement r = zero();
  for (unsigned i = 0; i < m_; ++i) r.coeffs[i] = fp_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  check_element(a, "sub");
  check_element(b, "sub");
  ExtElement r = zero();
  for (unsigned i = 0; i < m_; ++i) r.coeffs[i] = fp_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  check_element(a, "mul");
  check_element(b, "mul");
  std::vector<std::uint64_t> work(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      work[i + j] = fp_.add(work[i + j], fp_.mul(a.coeffs[i], b.coeffs[j]));
  }
  // x^m == -sum_j irr_[j] x^j
  for (unsigned k = 2 * m_ - 2; k >= m_ && k < work.size(); --k) {
    const std::uint64_t c = work[k];
    if (c == 0) continue;
    work[k] = 0;
    for (unsigned j = 0; j < m_; ++j)
      work[k - m_ + j] = fp_.sub(work[k - m_ + j], fp_.mul(c, irr_[j]));
  }
  ExtElement r = zero();
  for (unsigned i = 0; i < m_; ++i) r.coeffs[i] = work[i];
  return r;
}

ExtElement ExtField::pow(const ExtElement& a, std::uint64_t e) const {
  check_element(a, "pow");
  ExtElement acc = one();
  ExtElement base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::uint64_t> ExtField::x_power_coords(unsigned k) const {
  ExtElement x = gen();
  if (m_ == 1) return pow(x, k).coeffs;
  ExtElement r = pow(x, k);
  return r.coeffs;
}

std::vector<std::vector<std::uint64_t>> ExtField::frobenius_matrix() const {
  std::vector<std::vector<std::uint64_t>> cols(m_);
  const ExtElement x = gen();
  for (unsigned j = 0; j < m_; ++j)
    cols[j] = pow(x, static_cast<std::uint64_t>(j) * p()).coeffs;
  return cols;
}

std::uint64_t norm(const ExtElement& a) {
  if (a.field == nullptr) throw std::invalid_argument("norm: detached element");
  const ExtField& k = *a.field;
  const std::uint64_t e = (k.size() - 1) / (k.p() - 1);
  const ExtElement n = k.pow(a, e);
  for (unsigned i = 1; i < k.m(); ++i)
    if (n.coeffs[i] != 0) throw std::logic_error("norm landed outside F_p");
  return n.coeffs[0];
}

}  // namespace turan_forge::gf
