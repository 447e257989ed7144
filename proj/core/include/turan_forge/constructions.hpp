#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan_forge/embeddings.hpp"
#include "turan_forge/gf.hpp"
#include "turan_forge/graph.hpp"
#include "turan_forge/poly.hpp"

namespace turan_forge::constructions {

enum class Family {
  ErdosRenyi,     // x1*y1 + x2*y2 = 1
  BrownSphere,    // (x1-y1)^2 + (x2-y2)^2 + (x3-y3)^2 = alpha
  NormGraph,      // N_s(x + y) = 1
  ProjNormGraph,  // N_{s-1}(x' + y') = x1*y1
  Wenger,         // y_j = x_j + x_{j+1}*y_t, j = 1..t-1
  InnerProduct,   // <f1(x), f2(y)> = 0
  Custom,
};

enum class InnerProductMode { Generic, Explicit };

struct ConstructionSpec {
  Family family = Family::ErdosRenyi;
  std::uint64_t p = 3;
  unsigned s = 2;             // NormGraph / ProjNormGraph / InnerProduct
  unsigned t = 2;             // Wenger
  std::uint64_t alpha = 1;    // BrownSphere right-hand side
  InnerProductMode mode = InnerProductMode::Generic;
  std::uint64_t seed = 0;     // InnerProduct
  std::vector<poly::Polynomial> equations;  // Custom
  unsigned custom_side_dim = 0;

  unsigned side_dim() const;
  std::string family_name() const;
};

Family family_from_name(const std::string& name);

struct ForbiddenClaim {
  enum class Kind { Grid, Cycle, None };
  Kind kind = Kind::None;
  std::uint64_t s = 0, t = 0;  // Grid: claimed K_{s,t}-free
  unsigned cycle_length = 0;   // Cycle: claimed C_{2t}-free
};

ForbiddenClaim claimed_forbidden_for(const ConstructionSpec& spec);

struct ConstructionResult {
  BipartiteGraph graph;
  ConstructionSpec spec;
  std::vector<poly::Polynomial> defining_polys;
  ForbiddenClaim claimed_forbidden;
  std::uint64_t seed_used = 0;
  unsigned resample_count = 0;  // projection resamples (explicit inner product)
  std::optional<embeddings::PolyMap> f1, f2;  // inner-product factor maps
};

// Both vertex classes are F_p^{side_dim} in lexicographic order; (x, y) is
// an edge iff every defining polynomial vanishes (a pair where a Laurent
// equation is undefined is a non-edge).
ConstructionResult build_graph(const ConstructionSpec& spec);

ConstructionResult build_inner_product(unsigned s, std::uint64_t p,
                                       InnerProductMode mode,
                                       std::uint64_t seed);

struct EdgeExpectation {
  std::uint64_t expected = 0;
  double rel_window = 0.0;  // relative width c/sqrt(p), c = 4
  bool exact = false;       // no window (determined system)
  std::string note;
};

// p^{2*side_dim - 1} for the hypersurface families, p^{t+1} exactly for
// Wenger. Throws "no expectation available" for Custom.
EdgeExpectation expected_edge_count(const ConstructionSpec& spec);

// Norm form N(z) of the extension as a polynomial in the m coordinates.
poly::Polynomial norm_form(const gf::ExtField& field);

// N evaluated at coordinatewise sums: variable k of the norm form becomes
// x_{x_slots[k]} + y_{y_slots[k]} inside a polynomial on total_vars
// variables.
poly::Polynomial norm_form_in_slots(const gf::ExtField& field,
                                    unsigned total_vars,
                                    const std::vector<unsigned>& x_slots,
                                    const std::vector<unsigned>& y_slots);

}  // namespace turan_forge::constructions
