#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "turan_forge/poly.hpp"

namespace turan_forge::embeddings {

// Polynomial map F^s -> F^n, one component per target coordinate. Laurent
// components restrict the usable domain to points with unit coordinates.
struct PolyMap {
  std::vector<poly::Polynomial> components;
  unsigned s = 0;            // domain dimension
  unsigned n = 0;            // target dimension
  std::int64_t degree_bound = 0;

  bool is_laurent() const;
};

// n x s matrix of pairwise distinct primes, strictly increasing down every
// column; row-major storage.
struct PrimeAssignment {
  unsigned n = 0, s = 0;
  std::vector<std::uint64_t> primes;

  std::uint64_t at(unsigned i, unsigned j) const { return primes[i * s + j]; }
  std::uint64_t max_prime() const;
};

struct RegularityWitness {
  std::vector<std::vector<std::uint64_t>> points;
  unsigned rank = 0;
  bool pass = false;
  std::uint64_t seed = 0;
};

struct RegularityReport {
  std::vector<RegularityWitness> witnesses;
  bool pass = false;  // all witnesses reached full rank
};

struct FiberWitness {
  std::vector<std::vector<std::uint64_t>> forms;  // s rows of n coefficients
  std::uint64_t fiber_size = 0;
  std::uint64_t seed = 0;
};

struct NondegeneracyReport {
  std::uint64_t max_fiber = 0;
  std::vector<FiberWitness> witnesses;
};

// All monomials of degree <= d in s variables (constant included),
// ascending graded-lex; C(s+d, d) components.
PolyMap veronese_full(unsigned s, std::int64_t d,
                      std::optional<std::uint64_t> modulus = std::nullopt);

std::uint64_t veronese_dimension(unsigned s, std::int64_t d);

// Veronese map of degree d composed with a seeded random linear projection
// onto (s+1)*t coordinates. Requires d >= t-1. With a modulus p the
// projection is smoke-tested for t-regularity and resampled from derived
// seeds until the test passes; the attempt count lands in *resample_count.
PolyMap veronese_regular(unsigned s, unsigned t, std::int64_t d,
                         std::uint64_t seed,
                         std::optional<std::uint64_t> p = std::nullopt,
                         unsigned* resample_count = nullptr);

struct PrimePowerEmbedding {
  PolyMap map;
  PrimeAssignment primes;
  mpz_class order;
};

// Components f_i = sum_j x_j^{p_ij} + x_j^{-p_ij} with the first s*n primes
// assigned row-major (so each column strictly increases). The order bound
// comes from order_bound(s, max prime).
PrimePowerEmbedding prime_power_embedding(unsigned s, unsigned n);

// ceil((4^s / s!) * (s * max_prime)^s), exact rational arithmetic.
mpz_class order_bound(unsigned s, std::uint64_t max_prime);

// Rank over F_p of a dense matrix given as rows; destroys its copy.
unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

// Samples `trials` sets of t distinct domain points (the unit torus when
// the map is Laurent, all of F_p^s otherwise), evaluates the map and ranks
// the t x n image matrix. trials = 0 enumerates every t-subset of the
// domain instead. Throws "domain too small" when the domain has fewer than
// t points.
RegularityReport test_regularity(const PolyMap& map, unsigned t,
                                 std::uint64_t p, unsigned trials,
                                 std::uint64_t seed);

// Draws rank-s systems of s linear forms on F_p^n and counts domain points
// (always the unit torus (F_p^*)^s) whose image satisfies all of them;
// returns the maximum fiber size over all trials. trials = 0 enumerates
// every nonzero form exhaustively (s = 1 only).
NondegeneracyReport test_nondegeneracy(const PolyMap& map, unsigned s,
                                       std::uint64_t p, unsigned trials,
                                       std::uint64_t seed);

// Text round trip; components serialized with the polynomial term format,
// one "component <i>" section per coordinate.
std::string to_text(const PolyMap& map);
PolyMap polymap_from_text(const std::string& text,
                          std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace turan_forge::embeddings
