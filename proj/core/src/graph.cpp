#include "turan_forge/graph.hpp"

#include <bit>
#include <stdexcept>

namespace turan_forge {

BitRows::BitRows(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64) {
  data_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

void BitRows::set(std::uint32_t r, std::uint32_t c) {
  data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
}

bool BitRows::get(std::uint32_t r, std::uint32_t c) const {
  return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
}

std::uint64_t BitRows::row_popcount(std::uint32_t r) const {
  return popcount_words(row(r), words_);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t n = 0;
  for (std::size_t w = 0; w < words; ++w)
    n += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  return n;
}

void and_into(std::uint64_t* acc, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) acc[w] &= b[w];
}

std::uint64_t popcount_words(const std::uint64_t* a, std::size_t words) {
  std::uint64_t n = 0;
  for (std::size_t w = 0; w < words; ++w)
    n += static_cast<std::uint64_t>(std::popcount(a[w]));
  return n;
}

std::uint64_t BipartiteGraph::edge_count() const {
  std::uint64_t n = 0;
  for (std::uint32_t r = 0; r < left_size; ++r) n += adj.row_popcount(r);
  return n;
}

BitRows BipartiteGraph::transposed() const {
  BitRows t(right_size, left_size);
  for (std::uint32_t r = 0; r < left_size; ++r)
    for_each_bit(adj.row(r), adj.words_per_row(),
                 [&](std::uint32_t c) { t.set(c, r); });
  return t;
}

std::vector<std::uint32_t> label_of_index(std::uint64_t index, unsigned dim,
                                          std::uint64_t p) {
  std::vector<std::uint32_t> label(dim);
  for (unsigned i = dim; i-- > 0;) {
    label[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  if (index != 0) throw std::out_of_range("vertex index out of range");
  return label;
}

std::uint64_t index_of_label(const std::uint32_t* label, unsigned dim,
                             std::uint64_t p) {
  std::uint64_t index = 0;
  for (unsigned i = 0; i < dim; ++i)
    index = index * p + label[i];
  return index;
}

}  // namespace turan_forge
