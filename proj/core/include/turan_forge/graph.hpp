#pragma once

#include <cstdint>
#include <vector>

namespace turan_forge {

// Row-major bit matrix; rows are 64-bit word blocks.
class BitRows {
 public:
  BitRows() = default;
  BitRows(std::uint32_t rows, std::uint32_t cols);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  void set(std::uint32_t r, std::uint32_t c);
  bool get(std::uint32_t r, std::uint32_t c) const;

  const std::uint64_t* row(std::uint32_t r) const { return data_.data() + r * words_; }
  std::uint64_t* row(std::uint32_t r) { return data_.data() + r * words_; }

  std::uint64_t row_popcount(std::uint32_t r) const;
  bool operator==(const BitRows& other) const = default;

 private:
  std::uint32_t rows_ = 0, cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words);
void and_into(std::uint64_t* acc, const std::uint64_t* b, std::size_t words);
std::uint64_t popcount_words(const std::uint64_t* a, std::size_t words);

// Calls fn(index) for every set bit of the word block.
template <typename Fn>
void for_each_bit(const std::uint64_t* words, std::size_t nwords, const Fn& fn) {
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t block = words[w];
    while (block) {
      const int b = __builtin_ctzll(block);
      fn(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      block &= block - 1;
    }
  }
}

// Bipartite graph with dense bit-row adjacency (left rows over right
// columns). Vertex labels are coordinate vectors stored flat; a side built
// without labels (e.g. loaded from an edge list) has dimension 0.
struct BipartiteGraph {
  std::uint32_t left_size = 0, right_size = 0;
  BitRows adj;
  unsigned left_dim = 0, right_dim = 0;
  std::vector<std::uint32_t> left_labels, right_labels;

  std::uint64_t edge_count() const;
  BitRows transposed() const;

  const std::uint32_t* left_label(std::uint32_t v) const {
    return left_labels.data() + static_cast<std::size_t>(v) * left_dim;
  }
  const std::uint32_t* right_label(std::uint32_t v) const {
    return right_labels.data() + static_cast<std::size_t>(v) * right_dim;
  }
};

// Index <-> coordinate vector under the lexicographic vertex order
// (coordinate 0 most significant).
std::vector<std::uint32_t> label_of_index(std::uint64_t index, unsigned dim,
                                          std::uint64_t p);
std::uint64_t index_of_label(const std::uint32_t* label, unsigned dim,
                             std::uint64_t p);

}  // namespace turan_forge
