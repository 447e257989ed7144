#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "turan_forge/constructions.hpp"
#include "turan_forge/gridsearch.hpp"
#include "turan_forge/rng.hpp"

using namespace turan_forge;
using gridsearch::find_kst;

namespace {

BipartiteGraph make_graph(std::uint32_t left, std::uint32_t right,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  BipartiteGraph g;
  g.left_size = left;
  g.right_size = right;
  g.adj = BitRows(left, right);
  for (const auto& [u, v] : edges) g.adj.set(u, v);
  return g;
}

BipartiteGraph complete(std::uint32_t left, std::uint32_t right) {
  BipartiteGraph g;
  g.left_size = left;
  g.right_size = right;
  g.adj = BitRows(left, right);
  for (std::uint32_t u = 0; u < left; ++u)
    for (std::uint32_t v = 0; v < right; ++v) g.adj.set(u, v);
  return g;
}

// Existence oracle by direct enumeration over both orientations.
bool brute_force_kst(const BipartiteGraph& g, unsigned s, unsigned t) {
  const auto scan = [&](const BitRows& rows, std::uint32_t n, unsigned a,
                        unsigned b) {
    std::vector<std::uint32_t> idx(a);
    const auto count_common = [&]() {
      std::uint64_t common = 0;
      for (std::uint32_t c = 0; c < rows.cols(); ++c) {
        bool all = true;
        for (unsigned i = 0; i < a; ++i) {
          if (!rows.get(idx[i], c)) {
            all = false;
            break;
          }
        }
        if (all) ++common;
      }
      return common;
    };
    if (n < a) return false;
    // Odometer over ascending a-subsets.
    for (unsigned i = 0; i < a; ++i) idx[i] = i;
    while (true) {
      if (count_common() >= b) return true;
      int pos = static_cast<int>(a) - 1;
      while (pos >= 0 && idx[pos] == n - a + pos) --pos;
      if (pos < 0) return false;
      ++idx[pos];
      for (unsigned i = pos + 1; i < a; ++i) idx[i] = idx[i - 1] + 1;
    }
  };
  if (scan(g.adj, g.left_size, s, t)) return true;
  return scan(g.transposed(), g.right_size, s, t);
}

// Reference girth: BFS from every vertex on the union graph.
std::optional<unsigned> brute_girth(const BipartiteGraph& g) {
  const std::uint32_t n = g.left_size + g.right_size;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t u = 0; u < g.left_size; ++u) {
    for (std::uint32_t v = 0; v < g.right_size; ++v) {
      if (g.adj.get(u, v)) {
        adj[u].push_back(g.left_size + v);
        adj[g.left_size + v].push_back(u);
      }
    }
  }
  unsigned best = 0;
  for (std::uint32_t root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1);
    std::vector<std::uint32_t> parent(n, n);
    std::deque<std::uint32_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (const auto w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && parent[w] != u) {
          const unsigned len = static_cast<unsigned>(dist[u] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("complete bipartite graph yields the least witness") {
  const auto g = complete(3, 3);
  const auto outcome = find_kst(g, 2, 2);
  REQUIRE(outcome.found.has_value());
  CHECK(outcome.found->left_set == std::vector<std::uint32_t>{0, 1});
  CHECK(outcome.found->right_set == std::vector<std::uint32_t>{0, 1});
  CHECK_FALSE(outcome.exhaustive);
  CHECK(gridsearch::verify_witness(g, *outcome.found));
  CHECK(gridsearch::witness_to_json(*outcome.found) ==
        "{\"left\":[0,1],\"right\":[0,1]}");
}

TEST_CASE("bilinear hypersurface graph has no two by two grid") {
  const auto built = constructions::build_graph([] {
    constructions::ConstructionSpec spec;
    spec.family = constructions::Family::ErdosRenyi;
    spec.p = 5;
    return spec;
  }());
  const auto outcome = find_kst(built.graph, 2, 2);
  CHECK_FALSE(outcome.found.has_value());
  CHECK(outcome.exhaustive);
  CHECK(outcome.subsets_examined > 0);
}

TEST_CASE("empty graph searches are exhaustive and empty handed") {
  const auto g = make_graph(4, 4, {});
  const auto outcome = find_kst(g, 1, 1);
  CHECK_FALSE(outcome.found.has_value());
  CHECK(outcome.exhaustive);
}

TEST_CASE("parameter validation") {
  const auto g = complete(2, 2);
  CHECK_THROWS_AS(find_kst(g, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_kst(g, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gridsearch::max_codegree(g, 3, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("a tiny budget stops the search inconclusively") {
  const auto built = constructions::build_graph([] {
    constructions::ConstructionSpec spec;
    spec.family = constructions::Family::ErdosRenyi;
    spec.p = 11;
    return spec;
  }());
  const auto outcome = find_kst(built.graph, 2, 2, 10);
  CHECK_FALSE(outcome.found.has_value());
  CHECK_FALSE(outcome.exhaustive);
}

TEST_CASE("pair degrees on pinned graphs") {
  {
    const auto built = constructions::build_graph([] {
      constructions::ConstructionSpec spec;
      spec.family = constructions::Family::ErdosRenyi;
      spec.p = 7;
      return spec;
    }());
    CHECK(gridsearch::max_codegree(built.graph, 2, 0, 0) == 1);
  }
  CHECK(gridsearch::max_codegree(complete(4, 4), 2, 0, 0) == 4);
  CHECK(gridsearch::max_codegree(make_graph(1, 1, {{0, 0}}), 1, 0, 0) == 1);
}

TEST_CASE("sampled pair degrees never exceed the exhaustive value") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    BipartiteGraph g;
    g.left_size = 8;
    g.right_size = 8;
    g.adj = BitRows(8, 8);
    for (std::uint32_t u = 0; u < 8; ++u)
      for (std::uint32_t v = 0; v < 8; ++v)
        if (rng.below(2)) g.adj.set(u, v);
    const auto full = gridsearch::max_codegree(g, 2, 0, 0);
    const auto sampled = gridsearch::max_codegree(g, 2, 40, trial);
    CHECK(sampled <= full);
  }
}

TEST_CASE("double counting bound fails on the complete graph with a witness") {
  const auto g = complete(3, 3);
  const auto bound = gridsearch::check_kst_bound(g, 2, 2);
  CHECK(bound.lhs == 9);
  CHECK(bound.rhs == 3);
  CHECK_FALSE(bound.holds);
  const auto outcome = find_kst(g, 2, 2);
  REQUIRE(outcome.found.has_value());
  CHECK(gridsearch::verify_witness(g, *outcome.found));
}

TEST_CASE("girth of pinned graphs") {
  CHECK(gridsearch::girth(complete(2, 2)) == 4);
  CHECK_FALSE(gridsearch::girth(make_graph(1, 2, {{0, 0}, {0, 1}})).has_value());
  CHECK_FALSE(gridsearch::girth(make_graph(2, 2, {})).has_value());
  CHECK(gridsearch::girth(complete(2, 3)) == 4);
}

TEST_CASE("wenger graph girth matches the reference and beats the claim") {
  constructions::ConstructionSpec spec;
  spec.family = constructions::Family::Wenger;
  spec.p = 3;
  spec.t = 3;
  const auto built = constructions::build_graph(spec);
  const auto fast = gridsearch::girth(built.graph);
  const auto slow = brute_girth(built.graph);
  REQUIRE(fast.has_value());
  CHECK(fast == slow);
  CHECK(*fast > 6);

  spec.t = 2;
  spec.p = 5;
  const auto built2 = constructions::build_graph(spec);
  const auto fast2 = gridsearch::girth(built2.graph);
  REQUIRE(fast2.has_value());
  CHECK(fast2 == brute_girth(built2.graph));
  CHECK(*fast2 > 4);
}

TEST_CASE("girth agrees with the reference on random graphs") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g;
    g.left_size = 1 + static_cast<std::uint32_t>(rng.below(7));
    g.right_size = 1 + static_cast<std::uint32_t>(rng.below(7));
    g.adj = BitRows(g.left_size, g.right_size);
    for (std::uint32_t u = 0; u < g.left_size; ++u)
      for (std::uint32_t v = 0; v < g.right_size; ++v)
        if (rng.below(3) == 0) g.adj.set(u, v);
    CHECK(gridsearch::girth(g) == brute_girth(g));
  }
}

TEST_CASE("search agrees with brute force on a hundred thousand instances") {
  Rng rng(424242);
  const std::vector<std::pair<unsigned, unsigned>> shapes{
      {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  int found_count = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    BipartiteGraph g;
    g.left_size = 1 + static_cast<std::uint32_t>(rng.below(6));
    g.right_size = 1 + static_cast<std::uint32_t>(rng.below(6));
    g.adj = BitRows(g.left_size, g.right_size);
    const std::uint64_t density = 1 + rng.below(3);
    for (std::uint32_t u = 0; u < g.left_size; ++u)
      for (std::uint32_t v = 0; v < g.right_size; ++v)
        if (rng.below(4) < density) g.adj.set(u, v);

    for (const auto& [s, t] : shapes) {
      const auto outcome = find_kst(g, s, t);
      const bool expected = brute_force_kst(g, s, t);
      CHECK(outcome.found.has_value() == expected);
      if (outcome.found) {
        ++found_count;
        CHECK(gridsearch::verify_witness(g, *outcome.found));
        const auto a = outcome.found->left_set.size();
        const auto b = outcome.found->right_set.size();
        CHECK(((a == s && b == t) || (a == t && b == s)));
        // Monotone in both parameters.
        if (s > 1) CHECK(find_kst(g, s - 1, t).found.has_value());
        if (t > 1) CHECK(find_kst(g, s, t - 1).found.has_value());
      } else {
        CHECK(outcome.exhaustive);
      }
      // A failed double count forces a witness.
      const auto bound = gridsearch::check_kst_bound(g, s, t);
      if (!bound.holds) CHECK(outcome.found.has_value());
    }
  }
  CHECK(found_count > 1000);  // the sweep exercises both branches
}
