#include "turan_forge/gridsearch.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "turan_forge/parallel.hpp"
#include "turan_forge/rng.hpp"

namespace turan_forge::gridsearch {

namespace {

// One orientation of the grid search: subsets of the row side, common
// neighbors on the column side.
struct OrientationResult {
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
      found;  // (subset of row side, t column vertices)
  bool complete = true;
};

std::vector<std::uint32_t> first_bits(const std::uint64_t* words,
                                      std::size_t nwords, unsigned count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for_each_bit(words, nwords, [&](std::uint32_t idx) {
    if (out.size() < count) out.push_back(idx);
  });
  out.resize(count);
  return out;
}

OrientationResult search_orientation(const BitRows& rows, unsigned s,
                                     unsigned t, std::uint64_t budget,
                                     std::atomic<std::uint64_t>& examined) {
  const std::uint32_t n = rows.rows();
  const std::size_t words = rows.words_per_row();
  OrientationResult result;
  if (s == 0 || n < s) return result;

  std::atomic<std::uint32_t> best_leading{std::numeric_limits<std::uint32_t>::max()};
  std::atomic<bool> budget_hit{false};
  const unsigned nworkers = worker_count();
  std::vector<OrientationResult> partial(std::max(1u, nworkers));
  std::atomic<unsigned> next_slot{0};

  parallel_for_blocks(n, [&](std::uint64_t lo, std::uint64_t hi) {
    OrientationResult local;
    std::vector<std::vector<std::uint64_t>> stack(
        s, std::vector<std::uint64_t>(words));
    std::vector<std::uint32_t> chosen(s);

    // Counts one examined subset prefix; returns false when over budget.
    const auto charge = [&]() {
      if (examined.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
        budget_hit.store(true, std::memory_order_relaxed);
        return false;
      }
      return true;
    };

    // Depth-first lexicographic extension for depths 1..s-1.
    const auto extend = [&](const auto& self, unsigned depth,
                            std::uint32_t start) -> bool {
      for (std::uint32_t i = start; i + (s - depth) <= n; ++i) {
        if (budget_hit.load(std::memory_order_relaxed)) return false;
        if (chosen[0] > best_leading.load(std::memory_order_relaxed))
          return false;
        if (!charge()) return false;
        const std::uint64_t* prev = stack[depth - 1].data();
        std::uint64_t* cur = stack[depth].data();
        const std::uint64_t* row = rows.row(i);
        std::uint64_t pop = 0;
        for (std::size_t w = 0; w < words; ++w) {
          cur[w] = prev[w] & row[w];
          pop += static_cast<std::uint64_t>(__builtin_popcountll(cur[w]));
        }
        if (pop < t) continue;
        chosen[depth] = i;
        if (depth + 1 == s) return true;
        if (self(self, depth + 1, i + 1)) return true;
      }
      return false;
    };

    for (std::uint32_t lead = static_cast<std::uint32_t>(lo);
         lead < static_cast<std::uint32_t>(hi); ++lead) {
      if (budget_hit.load(std::memory_order_relaxed)) break;
      if (lead > best_leading.load(std::memory_order_relaxed)) break;
      if (lead + s > n) break;
      if (!charge()) break;
      std::copy(rows.row(lead), rows.row(lead) + words, stack[0].begin());
      if (popcount_words(stack[0].data(), words) < t) continue;
      chosen[0] = lead;
      const bool hit = s == 1 || extend(extend, 1, lead + 1);
      if (hit) {
        local.found = {{chosen.begin(), chosen.end()},
                       first_bits(stack[s - 1].data(), words, t)};
        // Later leading indices only give lexicographically larger
        // witnesses, so publish this one as a cutoff.
        std::uint32_t cur_best = best_leading.load(std::memory_order_relaxed);
        while (lead < cur_best &&
               !best_leading.compare_exchange_weak(cur_best, lead,
                                                   std::memory_order_relaxed)) {
        }
        break;
      }
    }
    if (budget_hit.load(std::memory_order_relaxed)) local.complete = false;
    partial[next_slot.fetch_add(1) % partial.size()] = std::move(local);
  });

  for (auto& part : partial) {
    if (!part.complete) result.complete = false;
    if (part.found) {
      if (!result.found || part.found->first < result.found->first)
        result.found = std::move(part.found);
    }
  }
  if (result.found) result.complete = false;
  return result;
}

}  // namespace

SearchOutcome find_kst(const BipartiteGraph& g, unsigned s, unsigned t,
                       std::uint64_t budget) {
  if (s == 0 || t == 0) throw std::invalid_argument("s and t must be positive");
  SearchOutcome outcome;
  std::atomic<std::uint64_t> examined{0};

  const bool left_first = g.left_size <= g.right_size;
  const BitRows transposed = g.transposed();

  for (int pass = 0; pass < 2; ++pass) {
    const bool on_left = (pass == 0) == left_first;
    const BitRows& rows = on_left ? g.adj : transposed;
    OrientationResult r = search_orientation(rows, s, t, budget, examined);
    if (r.found) {
      GridWitness w;
      if (on_left) {
        w.left_set = std::move(r.found->first);
        w.right_set = std::move(r.found->second);
      } else {
        w.left_set = std::move(r.found->second);
        w.right_set = std::move(r.found->first);
      }
      outcome.found = std::move(w);
      outcome.exhaustive = false;
      outcome.subsets_examined = examined.load();
      return outcome;
    }
    if (!r.complete) {
      outcome.exhaustive = false;
      outcome.subsets_examined = examined.load();
      return outcome;
    }
  }
  outcome.exhaustive = true;
  outcome.subsets_examined = examined.load();
  return outcome;
}

bool verify_witness(const BipartiteGraph& g, const GridWitness& w) {
  if (w.left_set.empty() || w.right_set.empty()) return false;
  for (std::size_t i = 0; i < w.left_set.size(); ++i)
    for (std::size_t j = i + 1; j < w.left_set.size(); ++j)
      if (w.left_set[i] == w.left_set[j]) return false;
  for (std::size_t i = 0; i < w.right_set.size(); ++i)
    for (std::size_t j = i + 1; j < w.right_set.size(); ++j)
      if (w.right_set[i] == w.right_set[j]) return false;
  for (std::uint32_t l : w.left_set) {
    if (l >= g.left_size) return false;
    for (std::uint32_t r : w.right_set) {
      if (r >= g.right_size) return false;
      if (!g.adj.get(l, r)) return false;
    }
  }
  return true;
}

std::uint64_t max_codegree(const BipartiteGraph& g, unsigned s,
                           std::uint64_t sample, std::uint64_t seed) {
  if (s == 0) throw std::invalid_argument("s must be positive");
  if (g.left_size < s)
    throw std::invalid_argument("left side smaller than s");
  const std::size_t words = g.adj.words_per_row();
  std::vector<std::uint64_t> acc(words);

  const auto codegree = [&](const std::vector<std::uint32_t>& subset) {
    std::copy(g.adj.row(subset[0]), g.adj.row(subset[0]) + words, acc.begin());
    for (unsigned i = 1; i < s; ++i)
      and_into(acc.data(), g.adj.row(subset[i]), words);
    return popcount_words(acc.data(), words);
  };

  std::uint64_t best = 0;
  if (sample == 0) {
    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), g.left_size, s);
    if (!total.fits_ulong_p() || total.get_ui() > 100'000'000)
      throw std::invalid_argument("exhaustive codegree too large");
    std::vector<std::uint32_t> idx(s);
    for (unsigned i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      best = std::max(best, codegree(idx));
      unsigned k = s;
      while (k > 0 && idx[k - 1] == g.left_size - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (unsigned i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    return best;
  }

  Rng rng(seed);
  std::vector<std::uint32_t> subset;
  for (std::uint64_t trial = 0; trial < sample; ++trial) {
    subset.clear();
    while (subset.size() < s) {
      const auto v = static_cast<std::uint32_t>(rng.below(g.left_size));
      if (std::find(subset.begin(), subset.end(), v) == subset.end())
        subset.push_back(v);
    }
    best = std::max(best, codegree(subset));
  }
  return best;
}

KstBoundResult check_kst_bound(const BipartiteGraph& g, unsigned s,
                               std::uint64_t t) {
  if (s == 0 || t == 0) throw std::invalid_argument("s and t must be positive");
  std::vector<std::uint64_t> right_degree(g.right_size, 0);
  for (std::uint32_t u = 0; u < g.left_size; ++u)
    for_each_bit(g.adj.row(u), g.adj.words_per_row(),
                 [&](std::uint32_t v) { ++right_degree[v]; });
  KstBoundResult result;
  result.lhs = 0;
  mpz_class binom;
  for (std::uint64_t d : right_degree) {
    mpz_bin_uiui(binom.get_mpz_t(), d, s);
    result.lhs += binom;
  }
  mpz_bin_uiui(binom.get_mpz_t(), g.left_size, s);
  result.rhs = mpz_class(t - 1) * binom;
  result.holds = result.lhs <= result.rhs;
  return result;
}

std::optional<unsigned> girth(const BipartiteGraph& g) {
  const std::uint64_t n =
      static_cast<std::uint64_t>(g.left_size) + g.right_size;
  if (n == 0) return std::nullopt;
  const BitRows transposed = g.transposed();
  // Unified vertex ids: left vertices then right vertices.
  const auto neighbors_words = [&](std::uint32_t v) {
    return v < g.left_size ? g.adj.row(v) : transposed.row(v - g.left_size);
  };
  const auto neighbors_count = [&](std::uint32_t v) {
    return v < g.left_size ? g.adj.words_per_row() : transposed.words_per_row();
  };
  const auto to_global = [&](std::uint32_t v, bool from_left) {
    return from_left ? v + g.left_size : v;
  };

  constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  unsigned best = kInf;
  std::vector<unsigned> dist(n);
  std::vector<std::uint32_t> parent(n), queue(n);

  for (std::uint32_t root = 0; root < n && best > 4; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::uint32_t head = 0, tail = 0;
    dist[root] = 0;
    parent[root] = root;
    queue[tail++] = root;
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      // Any candidate discovered from u has length at least 2*dist[u].
      if (best != kInf && 2 * dist[u] >= best) continue;
      const bool from_left = u < g.left_size;
      for_each_bit(neighbors_words(u), neighbors_count(u),
                   [&](std::uint32_t nb) {
                     const std::uint32_t w =
                         to_global(nb, from_left);
                     if (dist[w] == kInf) {
                       dist[w] = dist[u] + 1;
                       parent[w] = u;
                       queue[tail++] = w;
                     } else if (w != parent[u] && parent[w] != u) {
                       best = std::min(best, dist[u] + dist[w] + 1);
                     }
                   });
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::string witness_to_json(const GridWitness& w) {
  std::ostringstream out;
  out << "{\"left\":[";
  for (std::size_t i = 0; i < w.left_set.size(); ++i) {
    if (i) out << ',';
    out << w.left_set[i];
  }
  out << "],\"right\":[";
  for (std::size_t i = 0; i < w.right_set.size(); ++i) {
    if (i) out << ',';
    out << w.right_set[i];
  }
  out << "]}";
  return out.str();
}

}  // namespace turan_forge::gridsearch
