#include "turan_forge/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "turan_forge/gf.hpp"

namespace turan_forge::poly {

std::int64_t monomial_degree(const Monomial& m) {
  std::int64_t d = 0;
  for (std::int32_t e : m) d += e;
  return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const std::int64_t da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(unsigned nvars, std::optional<std::uint64_t> modulus)
    : nvars_(nvars), modulus_(modulus) {
  if (modulus_ && !gf::is_prime(*modulus_))
    throw std::invalid_argument("modulus must be prime");
}

Polynomial Polynomial::constant(unsigned nvars, const mpz_class& c,
                                std::optional<std::uint64_t> modulus) {
  Polynomial f(nvars, modulus);
  f.add_term(Monomial(nvars, 0), c);
  return f;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index,
                                std::optional<std::uint64_t> modulus) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial f(nvars, modulus);
  Monomial m(nvars, 0);
  m[index] = 1;
  f.add_term(m, 1);
  return f;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (m.size() != nvars_)
    throw std::invalid_argument("mismatched variable counts");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  reduce_term(it);
}

void Polynomial::reduce_term(TermMap::iterator it) {
  if (modulus_) {
    mpz_class r = it->second % static_cast<unsigned long>(*modulus_);
    if (r < 0) r += static_cast<unsigned long>(*modulus_);
    it->second = r;
  }
  if (it->second == 0) terms_.erase(it);
}

mpz_class Polynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool Polynomial::is_laurent() const {
  for (const auto& [m, c] : terms_)
    for (std::int32_t e : m)
      if (e < 0) return true;
  return false;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::int64_t dm = monomial_degree(m);
    if (first || dm > d) d = dm;
    first = false;
  }
  return d;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("mismatched variable counts");
  if (other.modulus_ != modulus_)
    throw std::invalid_argument("mismatched moduli");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("mismatched variable counts");
  if (other.modulus_ != modulus_)
    throw std::invalid_argument("mismatched moduli");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    auto next = std::next(it);
    it->second *= scalar;
    reduce_term(it);
    it = next;
  }
  return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && modulus_ == other.modulus_ &&
         terms_ == other.terms_;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("mismatched variable counts");
  if (f.modulus() != g.modulus())
    throw std::invalid_argument("mismatched moduli");
  Polynomial prod(f.nvars(), f.modulus());
  Monomial m(f.nvars());
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      for (unsigned i = 0; i < f.nvars(); ++i) m[i] = ma[i] + mb[i];
      prod.add_term(m, ca * cb);
    }
  }
  return prod;
}

namespace {

std::uint64_t coeff_mod(const mpz_class& c, std::uint64_t p) {
  mpz_class r = c % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

std::uint64_t Polynomial::evaluate(const std::vector<std::uint64_t>& point,
                                   std::uint64_t p) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("point length must equal variable count");
  if (modulus_ && *modulus_ != p)
    throw std::invalid_argument("mismatched moduli");
  const gf::PrimeField fp(p);
  for (std::uint64_t x : point)
    if (x >= p) throw std::invalid_argument("point entry out of range");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t v = coeff_mod(c, p);
    for (unsigned i = 0; i < nvars_; ++i) {
      const std::int32_t e = m[i];
      if (e == 0) continue;
      if (e < 0 && point[i] == 0)
        throw std::domain_error("non-unit at Laurent monomial");
      if (v == 0) continue;
      if (e > 0) {
        v = fp.mul(v, fp.pow(point[i], static_cast<std::uint64_t>(e)));
      } else {
        const std::uint64_t inv = fp.inv(point[i]);
        v = fp.mul(v, fp.pow(inv, static_cast<std::uint64_t>(-static_cast<std::int64_t>(e))));
      }
    }
    acc = fp.add(acc, v);
  }
  return acc;
}

std::string Polynomial::to_text() const {
  std::ostringstream out;
  for (const auto& [m, c] : terms_) {
    out << c.get_str();
    for (std::int32_t e : m) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

Polynomial Polynomial::from_text(const std::string& text, unsigned nvars,
                                 std::optional<std::uint64_t> modulus) {
  Polynomial f(nvars, modulus);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_tok;
    if (!(ls >> coeff_tok)) continue;
    mpz_class c;
    if (c.set_str(coeff_tok, 10) != 0)
      throw std::invalid_argument("malformed coefficient: " + coeff_tok);
    Monomial m(nvars);
    for (unsigned i = 0; i < nvars; ++i)
      if (!(ls >> m[i]))
        throw std::invalid_argument("term with wrong exponent count: " + line);
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("term with wrong exponent count: " + line);
    f.add_term(m, c);
  }
  return f;
}

PackedEvaluator::PackedEvaluator(const Polynomial& f, std::uint64_t p)
    : nvars_(f.nvars()), fp_(p) {
  if (f.modulus() && *f.modulus() != p)
    throw std::invalid_argument("mismatched moduli");
  max_pos_.assign(nvars_, 0);
  max_neg_.assign(nvars_, 0);
  for (const auto& [m, c] : f.terms()) {
    coeffs_.push_back(coeff_mod(c, p));
    for (unsigned i = 0; i < nvars_; ++i) {
      exps_.push_back(m[i]);
      max_pos_[i] = std::max(max_pos_[i], m[i]);
      max_neg_[i] = std::max(max_neg_[i], -m[i]);
    }
  }
  pos_off_.assign(nvars_ + 1, 0);
  neg_off_.assign(nvars_ + 1, 0);
  for (unsigned i = 0; i < nvars_; ++i) {
    pos_off_[i + 1] = pos_off_[i] + static_cast<std::size_t>(max_pos_[i]) + 1;
    neg_off_[i + 1] = neg_off_[i] + static_cast<std::size_t>(max_neg_[i]) + 1;
  }
  pow_pos_.assign(pos_off_[nvars_], 0);
  pow_neg_.assign(neg_off_[nvars_], 0);
}

std::uint64_t PackedEvaluator::eval(const std::uint64_t* point) const {
  for (unsigned i = 0; i < nvars_; ++i) {
    const std::uint64_t x = point[i];
    std::uint64_t* pos = pow_pos_.data() + pos_off_[i];
    pos[0] = 1;
    for (std::int32_t e = 1; e <= max_pos_[i]; ++e) pos[e] = fp_.mul(pos[e - 1], x);
    if (max_neg_[i] > 0) {
      if (x == 0) throw std::domain_error("non-unit at Laurent monomial");
      const std::uint64_t xi = fp_.pow(x, fp_.p() - 2);
      std::uint64_t* neg = pow_neg_.data() + neg_off_[i];
      neg[0] = 1;
      for (std::int32_t e = 1; e <= max_neg_[i]; ++e) neg[e] = fp_.mul(neg[e - 1], xi);
    }
  }
  std::uint64_t acc = 0;
  const std::int32_t* e = exps_.data();
  for (std::size_t t = 0; t < coeffs_.size(); ++t, e += nvars_) {
    std::uint64_t v = coeffs_[t];
    for (unsigned i = 0; i < nvars_; ++i) {
      const std::int32_t ei = e[i];
      if (ei > 0)
        v = fp_.mul(v, pow_pos_[pos_off_[i] + static_cast<std::size_t>(ei)]);
      else if (ei < 0)
        v = fp_.mul(v, pow_neg_[neg_off_[i] + static_cast<std::size_t>(-ei)]);
    }
    acc = fp_.add(acc, v);
  }
  return acc;
}

}  // namespace turan_forge::poly
