#include "turan_forge/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace turan_forge::bounds {

double furedi_bound(unsigned s, std::uint64_t t, double n) {
  if (s < 2 || t < s) {
    throw std::invalid_argument("furedi bound requires 2 <= s <= t");
  }
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const double base = static_cast<double>(t - s + 1);
  return 0.5 * std::pow(base, 1.0 / s) * std::pow(n, 2.0 - 1.0 / s);
}

double kst_leading_bound(unsigned s, std::uint64_t t, double n) {
  if (s < 1 || t < s) {
    throw std::invalid_argument("kst bound requires 1 <= s <= t");
  }
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const double base = static_cast<double>(t - 1);
  return 0.5 * std::pow(base, 1.0 / s) * std::pow(n, 2.0 - 1.0 / s);
}

double even_cycle_bound(unsigned t, double n) {
  if (t < 2) throw std::invalid_argument("cycle bound requires t >= 2");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return 100.0 * static_cast<double>(t) * std::pow(n, 1.0 + 1.0 / t);
}

}  // namespace turan_forge::bounds
