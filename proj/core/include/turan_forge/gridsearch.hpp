#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "turan_forge/graph.hpp"

namespace turan_forge::gridsearch {

// Complete bipartite subgraph: every (l, r) pair is an edge. When the
// search ran with sides swapped, left_set holds t and right_set holds s
// vertices; the index sets always refer to the graph's own sides.
struct GridWitness {
  std::vector<std::uint32_t> left_set;
  std::vector<std::uint32_t> right_set;
};

struct SearchOutcome {
  std::optional<GridWitness> found;
  // Number of subset prefixes whose common neighborhood was computed.
  // Deterministic for completed searches; scheduling-dependent when the
  // search stops early (budget or witness).
  std::uint64_t subsets_examined = 0;
  bool exhaustive = false;  // every s-subset covered on both orientations
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Searches for K_{s,t}: s-subsets of one side with >= t common neighbors,
// smaller side first (tie toward left), then the swapped orientation.
// Subsets are enumerated in lexicographic order with intersection pruning;
// the returned witness is the lexicographically least of the orientation
// that produced it.
SearchOutcome find_kst(const BipartiteGraph& g, unsigned s, unsigned t,
                       std::uint64_t budget = kDefaultBudget);

bool verify_witness(const BipartiteGraph& g, const GridWitness& w);

// Maximum common-neighborhood size over s-subsets of the left side;
// sample = 0 enumerates all of them, otherwise `sample` seeded draws.
std::uint64_t max_codegree(const BipartiteGraph& g, unsigned s,
                           std::uint64_t sample, std::uint64_t seed);

struct KstBoundResult {
  mpz_class lhs, rhs;
  bool holds = false;
};

// Exact double-count test: sum over right vertices of C(deg, s) against
// (t-1) * C(left_size, s). Failing it proves a K_{s,t} exists.
KstBoundResult check_kst_bound(const BipartiteGraph& g, unsigned s,
                               std::uint64_t t);

// Shortest cycle length via BFS from every vertex; nullopt when acyclic.
std::optional<unsigned> girth(const BipartiteGraph& g);

std::string witness_to_json(const GridWitness& w);

}  // namespace turan_forge::gridsearch
