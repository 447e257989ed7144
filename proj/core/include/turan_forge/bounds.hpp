#pragma once

#include <cstdint>

namespace turan_forge::bounds {

// (1/2) (t - s + 1)^{1/s} n^{2 - 1/s}. Requires 2 <= s <= t; the leading
// constant collapses to 1/2 when s == t.
double furedi_bound(unsigned s, std::uint64_t t, double n);

// Kovari-Sos-Turan leading term (1/2) (t - 1)^{1/s} n^{2 - 1/s}.
// Requires 1 <= s <= t.
double kst_leading_bound(unsigned s, std::uint64_t t, double n);

// Bondy-Simonovits style even-cycle bound 100 t n^{1 + 1/t} for graphs
// with no cycle of length 2t. Requires t >= 2.
double even_cycle_bound(unsigned t, double n);

}  // namespace turan_forge::bounds
