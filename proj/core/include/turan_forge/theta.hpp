#pragma once

#include <cstdint>
#include <vector>

#include "turan_forge/poly.hpp"

namespace turan_forge::theta {

// Obstruction polynomial in k variables over F_p. Only the monomial
// support carries meaning downstream; the global scalar is not normalized
// (sign_normalized stays false).
struct ThetaPoly {
  std::uint64_t p = 3;
  unsigned k = 1;
  poly::Polynomial poly{1};
  bool sign_normalized = false;
};

// Product of the linear forms c·w over one representative per pair
// {c, -c} of nonzero vectors (representative: first nonzero coordinate in
// [1, (p-1)/2]), reduced mod p. Requires p an odd prime and p^k <= 10^6.
ThetaPoly theta_poly(std::uint64_t p, unsigned k);

// Closed form for k = 2: w1^m w2^m (w1^{p-1} - w2^{p-1})^m, m = (p-1)/2,
// expanded directly mod p.
ThetaPoly theta_closed_form_k2(std::uint64_t p);

struct DimensionTuple {
  std::vector<unsigned> dims;
  bool operator==(const DimensionTuple& other) const = default;
  bool operator<(const DimensionTuple& other) const { return dims < other.dims; }
};

// Minimal dimension tuples d_l = ceil(2 i_l / (p-1)) + 1 over the support
// of theta: the antichain of minimal tuples with every entry <= max_dim,
// sorted lexicographically. A product of spheres S^{d_1-1} x ... whose
// dimensions dominate a listed tuple forces a full p x ... x p grid.
std::vector<DimensionTuple> admissible_tuples(const ThetaPoly& theta,
                                              unsigned max_dim);

// 2*ceil((p-1)/4) + 2; cross-checked against the smallest symmetric
// dimension dominating an admissible tuple of theta(p, 2).
unsigned grid_dimension(std::uint64_t p);

}  // namespace turan_forge::theta
