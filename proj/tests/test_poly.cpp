#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "turan_forge/poly.hpp"
#include "turan_forge/rng.hpp"

using namespace turan_forge;
using poly::Monomial;
using poly::Polynomial;

namespace {

Polynomial from_terms(unsigned nvars,
                      std::optional<std::uint64_t> modulus,
                      const std::vector<std::pair<Monomial, long>>& terms) {
  Polynomial f(nvars, modulus);
  for (const auto& [m, c] : terms) f.add_term(m, mpz_class(c));
  return f;
}

Polynomial random_poly(Rng& rng, unsigned nvars, std::uint64_t p,
                       bool laurent) {
  Polynomial f(nvars, p);
  const std::uint64_t nterms = 1 + rng.below(8);
  for (std::uint64_t i = 0; i < nterms; ++i) {
    Monomial m(nvars);
    for (auto& e : m) {
      e = static_cast<std::int32_t>(rng.below(laurent ? 7 : 4)) -
          (laurent ? 3 : 0);
    }
    f.add_term(m, mpz_class(static_cast<unsigned long>(rng.below(p))));
  }
  return f;
}

}  // namespace

TEST_CASE("graded lex order sorts by degree then lex") {
  poly::GradedLexLess less;
  CHECK(less({0, 0}, {0, 1}));
  CHECK(less({0, 1}, {1, 0}));
  CHECK(less({1, 0}, {0, 2}));
  CHECK_FALSE(less({1, 0}, {1, 0}));
  CHECK(less({-1, 0}, {0, 0}));  // degree -1 before degree 0
}

TEST_CASE("evaluate the standard hypersurface equation") {
  // x1*y1 + x2*y2 - 1 in variables (x1, x2, y1, y2).
  const auto f = from_terms(4, 5,
                            {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}, {{0, 0, 0, 0}, -1}});
  CHECK(f.evaluate({1, 0, 1, 2}, 5) == 0);
  CHECK(f.evaluate({1, 1, 1, 1}, 5) == 1);
}

TEST_CASE("laurent evaluation inverts units and rejects zero") {
  const auto f = from_terms(1, 5, {{{1}, 1}, {{-1}, 1}});  // x + 1/x
  CHECK(f.evaluate({2}, 5) == 0);  // 2 + 3
  CHECK(f.evaluate({1}, 5) == 2);
  CHECK_THROWS_WITH_AS(f.evaluate({0}, 5), "non-unit at Laurent monomial",
                       std::domain_error);
}

TEST_CASE("evaluate validates the point and the modulus") {
  const auto f = from_terms(2, 5, {{{1, 0}, 1}});
  CHECK_THROWS_AS(f.evaluate({1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(f.evaluate({5, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(f.evaluate({1, 0}, 7), std::invalid_argument);
}

TEST_CASE("difference of squares") {
  const auto f = from_terms(2, 5, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto g = from_terms(2, 5, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto prod = poly::multiply(f, g);
  CHECK(prod == from_terms(2, 5, {{{2, 0}, 1}, {{0, 2}, 4}}));
}

TEST_CASE("laurent square") {
  const auto f = from_terms(1, 5, {{{1}, 1}, {{-1}, 1}});
  const auto sq = poly::multiply(f, f);
  CHECK(sq == from_terms(1, 5, {{{2}, 1}, {{0}, 2}, {{-2}, 1}}));
}

TEST_CASE("multiplying by zero annihilates") {
  const auto f = from_terms(2, 7, {{{1, 1}, 3}, {{0, 2}, 5}});
  const Polynomial zero(2, 7);
  CHECK(poly::multiply(f, zero).is_zero());
}

TEST_CASE("mismatched shapes are rejected") {
  const auto f = from_terms(2, 5, {{{1, 0}, 1}});
  const auto g = from_terms(3, 5, {{{1, 0, 0}, 1}});
  CHECK_THROWS_WITH_AS(poly::multiply(f, g), "mismatched variable counts",
                       std::invalid_argument);
  auto h = f;
  CHECK_THROWS_WITH_AS(h += g, "mismatched variable counts",
                       std::invalid_argument);
  const auto k = from_terms(2, 7, {{{1, 0}, 1}});
  CHECK_THROWS_AS(poly::multiply(f, k), std::invalid_argument);
}

TEST_CASE("add_term merges and drops zeros") {
  Polynomial f(2, 5);
  f.add_term({1, 1}, 3);
  f.add_term({1, 1}, 2);  // 3 + 2 = 0 mod 5
  CHECK(f.is_zero());
  f.add_term({0, 1}, -1);
  CHECK(f.coeff({0, 1}) == 4);
  CHECK_THROWS_WITH_AS(f.add_term({0, 0, 0}, 1), "mismatched variable counts",
                       std::invalid_argument);
}

TEST_CASE("support is ascending graded-lex") {
  const auto f = from_terms(
      2, std::nullopt,
      {{{2, 0}, 1}, {{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  const std::vector<Monomial> expected{{0, 0}, {0, 1}, {1, 0}, {2, 0}};
  CHECK(f.support() == expected);
}

TEST_CASE("product evaluates like the factors at a thousand random triples") {
  Rng rng(2024);
  const std::vector<std::uint64_t> primes{5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = primes[rng.below(primes.size())];
    const unsigned nvars = 1 + static_cast<unsigned>(rng.below(3));
    const bool laurent = rng.below(2) == 1;
    const auto f = random_poly(rng, nvars, p, laurent);
    const auto g = random_poly(rng, nvars, p, laurent);
    const auto prod = poly::multiply(f, g);

    std::vector<std::uint64_t> point(nvars);
    for (auto& c : point) {
      c = laurent ? 1 + rng.below(p - 1) : rng.below(p);
    }
    const gf::PrimeField fp(p);
    CHECK(prod.evaluate(point, p) ==
          fp.mul(f.evaluate(point, p), g.evaluate(point, p)));
  }
}

TEST_CASE("product support is inside the Minkowski sum") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned nvars = 1 + static_cast<unsigned>(rng.below(3));
    const auto f = random_poly(rng, nvars, 11, true);
    const auto g = random_poly(rng, nvars, 11, true);
    if (f.is_zero() || g.is_zero()) continue;
    std::set<Monomial> sums;
    for (const auto& a : f.support()) {
      for (const auto& b : g.support()) {
        Monomial s(nvars);
        for (unsigned i = 0; i < nvars; ++i) s[i] = a[i] + b[i];
        sums.insert(s);
      }
    }
    for (const auto& m : poly::multiply(f, g).support()) {
      CHECK(sums.count(m) == 1);
    }
  }
}

TEST_CASE("integer product degrees add when coefficients stay positive") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned nvars = 1 + static_cast<unsigned>(rng.below(2));
    Polynomial f(nvars), g(nvars);
    for (int i = 0; i < 4; ++i) {
      Monomial mf(nvars), mg(nvars);
      for (auto& e : mf) e = static_cast<std::int32_t>(rng.below(5));
      for (auto& e : mg) e = static_cast<std::int32_t>(rng.below(5));
      f.add_term(mf, 1 + static_cast<long>(rng.below(9)));
      g.add_term(mg, 1 + static_cast<long>(rng.below(9)));
    }
    const auto prod = poly::multiply(f, g);
    CHECK(prod.total_degree() == f.total_degree() + g.total_degree());
  }
}

TEST_CASE("text round trip") {
  const auto f = from_terms(2, 7, {{{1, 2}, 3}, {{0, 0}, 5}, {{-1, 0}, 2}});
  const auto text = f.to_text();
  CHECK(text == "2 -1 0\n5 0 0\n3 1 2\n");  // degree -1 sorts first
  CHECK(Polynomial::from_text(text, 2, 7) == f);
  CHECK(Polynomial(2, 7).to_text() == "");
  CHECK(Polynomial::from_text("", 2, 7).is_zero());
}

TEST_CASE("from_text rejects malformed input") {
  CHECK_THROWS_AS(Polynomial::from_text("x 1 2\n", 2, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::from_text("3 1\n", 2, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::from_text("3 1 2 0\n", 2, 7),
                  std::invalid_argument);
}

TEST_CASE("packed evaluator agrees with the reference route") {
  Rng rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = trial % 2 == 0 ? 7 : 13;
    const unsigned nvars = 1 + static_cast<unsigned>(rng.below(4));
    const bool laurent = rng.below(2) == 1;
    const auto f = random_poly(rng, nvars, p, laurent);
    const poly::PackedEvaluator packed(f, p);
    for (int pt = 0; pt < 20; ++pt) {
      std::vector<std::uint64_t> point(nvars);
      for (auto& c : point) c = rng.below(p);
      bool ref_threw = false;
      std::uint64_t ref = 0;
      try {
        ref = f.evaluate(point, p);
      } catch (const std::domain_error&) {
        ref_threw = true;
      }
      if (ref_threw) {
        CHECK_THROWS_WITH_AS(packed.eval(point.data()),
                             "non-unit at Laurent monomial", std::domain_error);
      } else {
        CHECK(packed.eval(point.data()) == ref);
      }
    }
  }
}
