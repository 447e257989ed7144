#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "turan_forge/embeddings.hpp"
#include "turan_forge/gf.hpp"

using namespace turan_forge;
using embeddings::PolyMap;

namespace {

// First n primes by trial division, independent of the library path.
std::vector<std::uint64_t> first_primes(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 2; out.size() < n; ++v) {
    bool prime = v >= 2;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("full veronese map in one variable") {
  const auto map = embeddings::veronese_full(1, 3);
  REQUIRE(map.n == 4);
  CHECK(map.s == 1);
  CHECK(map.degree_bound == 3);
  // Components are 1, x, x^2, x^3 in ascending graded-lex order.
  for (int d = 0; d < 4; ++d) {
    CHECK(map.components[d].term_count() == 1);
    CHECK(map.components[d].coeff({d}) == 1);
  }
  CHECK(embeddings::veronese_dimension(1, 3) == 4);
  CHECK(embeddings::veronese_dimension(2, 2) == 6);
}

TEST_CASE("projected veronese map hits the requested shape") {
  unsigned resamples = 99;
  const auto map = embeddings::veronese_regular(1, 3, 3, 7, 7, &resamples);
  CHECK(map.s == 1);
  CHECK(map.n == 6);  // (s + 1) * t
  CHECK(map.degree_bound <= 3);
  CHECK(resamples < 64);
  for (const auto& c : map.components) {
    CHECK(c.nvars() == 1);
    CHECK(c.total_degree() <= 3);
  }
}

TEST_CASE("projected veronese map rejects a too small degree") {
  CHECK_THROWS_WITH_AS(embeddings::veronese_regular(1, 3, 1, 0, 7),
                       "degree must be at least t-1", std::invalid_argument);
}

TEST_CASE("projected veronese maps are regular whenever t <= d+1") {
  for (const std::uint64_t p : {7, 11, 13}) {
    for (unsigned t = 2; t <= 4; ++t) {
      const auto map =
          embeddings::veronese_regular(1, t, static_cast<std::int64_t>(t) - 1,
                                       p, p);
      const auto rep = embeddings::test_regularity(map, t, p, 0, 0);
      CHECK(rep.pass);
      for (const auto& w : rep.witnesses) {
        CHECK(w.rank == t);
      }
    }
  }
}

TEST_CASE("regularity catches a rank deficient map") {
  // x -> (x, 2x): any two rows are proportional.
  PolyMap map;
  map.s = 1;
  map.n = 2;
  map.degree_bound = 1;
  poly::Polynomial c0(1, 5), c1(1, 5);
  c0.add_term({1}, 1);
  c1.add_term({1}, 2);
  map.components = {c0, c1};
  const auto rep = embeddings::test_regularity(map, 2, 5, 0, 0);
  CHECK_FALSE(rep.pass);
  bool saw_deficient = false;
  for (const auto& w : rep.witnesses) {
    if (!w.pass) {
      saw_deficient = true;
      CHECK(w.rank == 1);
    }
  }
  CHECK(saw_deficient);
}

TEST_CASE("regularity needs a domain of at least t points") {
  // 32 components keep the rank request meaningful; F_5 has only 5 points.
  const auto map = embeddings::veronese_full(1, 31, 5);
  CHECK_THROWS_WITH_AS(embeddings::test_regularity(map, 30, 5, 10, 0),
                       "domain too small", std::domain_error);
}

TEST_CASE("prime power map in one variable") {
  const auto emb = embeddings::prime_power_embedding(1, 2);
  REQUIRE(emb.map.n == 2);
  CHECK(emb.map.is_laurent());
  // Components x^2 + x^-2 and x^3 + x^-3.
  CHECK(emb.map.components[0].coeff({2}) == 1);
  CHECK(emb.map.components[0].coeff({-2}) == 1);
  CHECK(emb.map.components[0].term_count() == 2);
  CHECK(emb.map.components[1].coeff({3}) == 1);
  CHECK(emb.map.components[1].coeff({-3}) == 1);
  CHECK(emb.primes.max_prime() == 3);
  CHECK(emb.order == 12);
}

TEST_CASE("prime assignment is row major with increasing columns") {
  const auto emb = embeddings::prime_power_embedding(2, 2);
  CHECK(emb.primes.at(0, 0) == 2);
  CHECK(emb.primes.at(0, 1) == 3);
  CHECK(emb.primes.at(1, 0) == 5);
  CHECK(emb.primes.at(1, 1) == 7);
}

TEST_CASE("order bound pinned values") {
  CHECK(embeddings::order_bound(1, 3) == 12);
  CHECK(embeddings::order_bound(2, 13) == 5408);
  CHECK(embeddings::order_bound(1, 2) == 8);
}

TEST_CASE("order bound stays under the exponential envelope") {
  for (unsigned s = 1; s <= 6; ++s) {
    for (std::uint64_t q : {2, 3, 5, 17, 97, 389, 997}) {
      const auto bound = embeddings::order_bound(s, q);
      const double envelope =
          std::pow(4.0 * std::exp(1.0) * static_cast<double>(q),
                   static_cast<double>(s));
      CHECK(bound.get_d() <= envelope * (1.0 + 1e-9) + 1.0);
    }
  }
}

TEST_CASE("assigned primes grow slower than 2 m log m") {
  const auto emb = embeddings::prime_power_embedding(1, 10000);
  const auto reference = first_primes(10000);
  REQUIRE(emb.primes.primes.size() == 10000);
  for (std::size_t m = 1; m <= 10000; ++m) {
    CHECK(emb.primes.primes[m - 1] == reference[m - 1]);
    if (m >= 3) {
      const double cap = 2.0 * static_cast<double>(m) *
                         std::log(static_cast<double>(m));
      CHECK(static_cast<double>(reference[m - 1]) < cap);
    }
  }
}

TEST_CASE("nondegeneracy of the prime power map over F_101") {
  const auto emb = embeddings::prime_power_embedding(1, 2);

  SUBCASE("sampled trials") {
    const auto rep = embeddings::test_nondegeneracy(emb.map, 1, 101, 200, 5);
    CHECK(mpz_class(rep.max_fiber) <= emb.order);
    CHECK(rep.witnesses.size() == 200);
  }
  SUBCASE("exhaustive over all nonzero forms") {
    const auto rep = embeddings::test_nondegeneracy(emb.map, 1, 101, 0, 0);
    CHECK(rep.max_fiber <= 12);
    CHECK(rep.max_fiber > 0);
  }
}

TEST_CASE("nondegeneracy fibers of a quadratic stay at two") {
  PolyMap map;
  map.s = 1;
  map.n = 1;
  map.degree_bound = 1;
  poly::Polynomial c(1, 101);
  c.add_term({1}, 1);
  c.add_term({-1}, 1);  // x + 1/x
  map.components = {c};
  const auto rep = embeddings::test_nondegeneracy(map, 1, 101, 0, 0);
  CHECK(rep.max_fiber <= 2);
}

TEST_CASE("a constant map has a full fiber for some form") {
  PolyMap map;
  map.s = 1;
  map.n = 2;
  map.degree_bound = 0;
  poly::Polynomial c0(1, 13), c1(1, 13);
  c0.add_term({0}, 3);
  c1.add_term({0}, 5);
  map.components = {c0, c1};
  const auto rep = embeddings::test_nondegeneracy(map, 1, 13, 0, 0);
  CHECK(rep.max_fiber == 12);  // p - 1: the whole punctured line
}

TEST_CASE("exhaustive nondegeneracy is restricted to one variable") {
  const auto map = embeddings::veronese_full(2, 1, 5);
  CHECK_THROWS_AS(embeddings::test_nondegeneracy(map, 2, 5, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("polymap text round trip") {
  const auto emb = embeddings::prime_power_embedding(2, 3);
  const auto text = embeddings::to_text(emb.map);
  const auto back = embeddings::polymap_from_text(text);
  CHECK(back.s == emb.map.s);
  CHECK(back.n == emb.map.n);
  CHECK(back.degree_bound == emb.map.degree_bound);
  REQUIRE(back.components.size() == emb.map.components.size());
  for (std::size_t i = 0; i < back.components.size(); ++i) {
    CHECK(back.components[i] == emb.map.components[i]);
  }
  CHECK_THROWS_AS(embeddings::polymap_from_text("nonsense\n"),
                  std::invalid_argument);
}
