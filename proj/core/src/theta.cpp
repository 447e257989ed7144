#include "turan_forge/theta.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan_forge/gf.hpp"

namespace turan_forge::theta {

namespace {

constexpr std::uint64_t kDomainCap = 1'000'000;

void check_params(std::uint64_t p, unsigned k) {
  if (p == 2 || !gf::is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size > kDomainCap / p) {
      throw std::invalid_argument("p^k exceeds the supported cap");
    }
    size *= p;
  }
}

}  // namespace

ThetaPoly theta_poly(std::uint64_t p, unsigned k) {
  check_params(p, k);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) size *= p;

  const std::uint64_t half = (p - 1) / 2;
  poly::Polynomial product = poly::Polynomial::constant(k, 1, p);
  std::vector<std::uint64_t> c(k);
  for (std::uint64_t v = 1; v < size; ++v) {
    // Coordinate 0 is the most significant digit.
    std::uint64_t rem = v;
    for (unsigned i = k; i-- > 0;) {
      c[i] = rem % p;
      rem /= p;
    }
    std::size_t first = 0;
    while (c[first] == 0) ++first;
    if (c[first] > half) continue;  // -c is the representative

    poly::Polynomial form(k, p);
    for (unsigned i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      poly::Monomial mono(k, 0);
      mono[i] = 1;
      form.add_term(mono, mpz_class(static_cast<unsigned long>(c[i])));
    }
    product = poly::multiply(product, form);
  }
  return ThetaPoly{p, k, std::move(product), false};
}

ThetaPoly theta_closed_form_k2(std::uint64_t p) {
  check_params(p, 2);
  const unsigned long m = static_cast<unsigned long>((p - 1) / 2);
  poly::Polynomial result(2, p);
  for (unsigned long l = 0; l <= m; ++l) {
    mpz_class coeff;
    mpz_bin_uiui(coeff.get_mpz_t(), m, l);
    if ((m - l) % 2 == 1) coeff = -coeff;
    poly::Monomial mono(2, 0);
    mono[0] = static_cast<std::int32_t>(m + (p - 1) * l);
    mono[1] = static_cast<std::int32_t>(m + (p - 1) * (m - l));
    result.add_term(mono, coeff);
  }
  return ThetaPoly{p, 2, std::move(result), false};
}

std::vector<DimensionTuple> admissible_tuples(const ThetaPoly& theta,
                                              unsigned max_dim) {
  if (max_dim == 0) {
    throw std::invalid_argument("max_dim must be positive");
  }
  const std::uint64_t p = theta.p;
  std::vector<std::vector<unsigned>> tuples;
  for (const auto& mono : theta.poly.support()) {
    std::vector<unsigned> dims(mono.size());
    bool keep = true;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] < 0) {
        throw std::invalid_argument("negative exponent in obstruction support");
      }
      const std::uint64_t e = static_cast<std::uint64_t>(mono[i]);
      const std::uint64_t d = (2 * e + (p - 2)) / (p - 1) + 1;
      if (d > max_dim) {
        keep = false;
        break;
      }
      dims[i] = static_cast<unsigned>(d);
    }
    if (keep) tuples.push_back(std::move(dims));
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  // Keep only componentwise-minimal tuples.
  std::vector<DimensionTuple> minimal;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < tuples.size() && !dominated; ++j) {
      if (i == j || tuples[j] == tuples[i]) continue;
      bool le = true;
      for (std::size_t c = 0; c < tuples[i].size(); ++c) {
        if (tuples[j][c] > tuples[i][c]) {
          le = false;
          break;
        }
      }
      dominated = le;
    }
    if (!dominated) minimal.push_back(DimensionTuple{tuples[i]});
  }
  return minimal;
}

unsigned grid_dimension(std::uint64_t p) {
  check_params(p, 2);
  const unsigned formula =
      static_cast<unsigned>(2 * ((p - 1 + 3) / 4) + 2);

  const ThetaPoly th = theta_poly(p, 2);
  const auto tuples =
      admissible_tuples(th, static_cast<unsigned>(p) + 1);
  unsigned best = 0;
  for (const auto& t : tuples) {
    const unsigned top = std::max(t.dims[0], t.dims[1]);
    if (best == 0 || top < best) best = top;
  }
  if (best != formula) {
    throw std::logic_error("grid dimension cross-check failed");
  }
  return formula;
}

}  // namespace turan_forge::theta
