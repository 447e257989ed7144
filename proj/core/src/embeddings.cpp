#include "turan_forge/embeddings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "turan_forge/gf.hpp"
#include "turan_forge/rng.hpp"

namespace turan_forge::embeddings {

bool PolyMap::is_laurent() const {
  for (const auto& c : components)
    if (c.is_laurent()) return true;
  return false;
}

std::uint64_t PrimeAssignment::max_prime() const {
  std::uint64_t m = 0;
  for (std::uint64_t q : primes) m = std::max(m, q);
  return m;
}

namespace {

constexpr std::uint64_t kDomainCap = 2'000'000;

void monomials_of_degree(unsigned s, std::int64_t degree, unsigned var,
                         poly::Monomial& work,
                         std::vector<poly::Monomial>& out) {
  if (var + 1 == s) {
    work[var] = static_cast<std::int32_t>(degree);
    out.push_back(work);
    return;
  }
  for (std::int64_t e = 0; e <= degree; ++e) {
    work[var] = static_cast<std::int32_t>(e);
    monomials_of_degree(s, degree - e, var + 1, work, out);
  }
}

// Saturating (p or p-1)^s, clamped to avoid overflow.
std::uint64_t domain_size_saturating(std::uint64_t base, unsigned s) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (size > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(base, 1))
      return std::uint64_t{1} << 62;
    size *= base;
  }
  return size;
}

std::vector<std::uint64_t> point_of_domain_index(std::uint64_t index,
                                                 unsigned s, std::uint64_t p,
                                                 bool units) {
  const std::uint64_t base = units ? p - 1 : p;
  std::vector<std::uint64_t> point(s);
  for (unsigned i = s; i-- > 0;) {
    point[i] = index % base + (units ? 1 : 0);
    index /= base;
  }
  return point;
}

std::vector<std::uint64_t> image_of(const PolyMap& map,
                                    const std::vector<std::uint64_t>& point,
                                    std::uint64_t p) {
  std::vector<std::uint64_t> img(map.n);
  for (unsigned c = 0; c < map.n; ++c)
    img[c] = map.components[c].evaluate(point, p);
  return img;
}

}  // namespace

std::uint64_t veronese_dimension(unsigned s, std::int64_t d) {
  if (s == 0 || d < 0) throw std::invalid_argument("bad Veronese parameters");
  mpz_class dim;
  mpz_bin_uiui(dim.get_mpz_t(), static_cast<unsigned long>(s + d),
               static_cast<unsigned long>(d));
  if (!dim.fits_ulong_p() || dim.get_ui() > 100'000)
    throw std::invalid_argument("Veronese dimension too large");
  return dim.get_ui();
}

PolyMap veronese_full(unsigned s, std::int64_t d,
                      std::optional<std::uint64_t> modulus) {
  const std::uint64_t dim = veronese_dimension(s, d);
  std::vector<poly::Monomial> monos;
  monos.reserve(dim);
  poly::Monomial work(s, 0);
  for (std::int64_t degree = 0; degree <= d; ++degree)
    monomials_of_degree(s, degree, 0, work, monos);
  std::sort(monos.begin(), monos.end(), poly::GradedLexLess{});
  PolyMap map;
  map.s = s;
  map.n = static_cast<unsigned>(dim);
  map.degree_bound = d;
  for (const auto& m : monos) {
    poly::Polynomial comp(s, modulus);
    comp.add_term(m, 1);
    map.components.push_back(std::move(comp));
  }
  return map;
}

PolyMap veronese_regular(unsigned s, unsigned t, std::int64_t d,
                         std::uint64_t seed, std::optional<std::uint64_t> p,
                         unsigned* resample_count) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  if (d < static_cast<std::int64_t>(t) - 1)
    throw std::invalid_argument("degree must be at least t-1");
  const PolyMap veronese = veronese_full(s, d, p);
  const unsigned target = (s + 1) * t;
  // The generic-projection argument needs st < target - (t - 1).
  if (static_cast<std::uint64_t>(s) * t >= target - (t - 1))
    throw std::logic_error("projection target dimension too small");

  const auto build = [&](std::uint64_t draw_seed) {
    Rng rng(draw_seed);
    PolyMap map;
    map.s = s;
    map.n = target;
    map.degree_bound = d;
    for (unsigned i = 0; i < target; ++i) {
      poly::Polynomial comp(s, p);
      for (const auto& vcomp : veronese.components) {
        const std::uint64_t c = p ? rng.below(*p) : rng.below(1 << 16);
        comp.add_term(vcomp.support().front(), mpz_class(c));
      }
      map.components.push_back(std::move(comp));
    }
    return map;
  };

  unsigned attempts = 0;
  PolyMap map = build(seed);
  if (p) {
    constexpr unsigned kMaxAttempts = 64;
    constexpr unsigned kSmokeTrials = 8;
    while (!test_regularity(map, t, *p, kSmokeTrials,
                            derive_seed(seed, 1'000'003 + attempts))
                .pass) {
      if (++attempts >= kMaxAttempts)
        throw std::runtime_error("no regular projection found");
      map = build(derive_seed(seed, attempts));
    }
  }
  if (resample_count) *resample_count = attempts;
  return map;
}

PrimePowerEmbedding prime_power_embedding(unsigned s, unsigned n) {
  if (s == 0 || n == 0) throw std::invalid_argument("s and n must be positive");
  PrimeAssignment assignment;
  assignment.n = n;
  assignment.s = s;
  std::uint64_t candidate = 1;
  while (assignment.primes.size() < static_cast<std::size_t>(s) * n) {
    ++candidate;
    if (gf::is_prime(candidate)) assignment.primes.push_back(candidate);
  }
  PolyMap map;
  map.s = s;
  map.n = n;
  map.degree_bound = static_cast<std::int64_t>(assignment.max_prime());
  for (unsigned i = 0; i < n; ++i) {
    poly::Polynomial comp(s);
    for (unsigned j = 0; j < s; ++j) {
      const auto e = static_cast<std::int32_t>(assignment.at(i, j));
      poly::Monomial m(s, 0);
      m[j] = e;
      comp.add_term(m, 1);
      m[j] = -e;
      comp.add_term(m, 1);
    }
    map.components.push_back(std::move(comp));
  }
  mpz_class order = order_bound(s, assignment.max_prime());
  return PrimePowerEmbedding{std::move(map), std::move(assignment),
                             std::move(order)};
}

mpz_class order_bound(unsigned s, std::uint64_t max_prime) {
  if (s == 0 || max_prime < 2) throw std::invalid_argument("bad order_bound input");
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 4, s);
  mpz_class pow_term;
  mpz_ui_pow_ui(pow_term.get_mpz_t(),
                static_cast<unsigned long>(s) * max_prime, s);
  num *= pow_term;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), s);
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return out;
}

unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows,
                    std::uint64_t p) {
  const gf::PrimeField fp(p);
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows[0].size() : 0;
  unsigned rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = nrows;
    for (std::size_t r = rank; r < nrows; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = fp.inv(rows[rank][col]);
    for (std::size_t c = col; c < ncols; ++c)
      rows[rank][c] = fp.mul(rows[rank][c], inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = fp.sub(rows[r][c], fp.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

RegularityReport test_regularity(const PolyMap& map, unsigned t,
                                 std::uint64_t p, unsigned trials,
                                 std::uint64_t seed) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  if (map.n < t)
    throw std::invalid_argument("map target dimension below t");
  const gf::PrimeField fp(p);
  const bool units = map.is_laurent();
  const std::uint64_t base = units ? p - 1 : p;
  const std::uint64_t domain = domain_size_saturating(base, map.s);
  if (domain < t) throw std::domain_error("domain too small");

  RegularityReport report;
  report.pass = true;

  const auto run_points =
      [&](std::vector<std::vector<std::uint64_t>> points, std::uint64_t wseed) {
        std::vector<std::vector<std::uint64_t>> images;
        images.reserve(points.size());
        for (const auto& pt : points) images.push_back(image_of(map, pt, p));
        RegularityWitness w;
        w.rank = rank_mod_p(std::move(images), p);
        w.pass = w.rank == t;
        w.points = std::move(points);
        w.seed = wseed;
        if (!w.pass) report.pass = false;
        report.witnesses.push_back(std::move(w));
      };

  if (trials == 0) {
    // Exhaustive sweep over every t-subset of the domain.
    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(domain), t);
    if (!total.fits_ulong_p() || total.get_ui() > 100'000)
      throw std::invalid_argument("exhaustive regularity too large");
    std::vector<std::uint64_t> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::vector<std::uint64_t>> points;
      points.reserve(t);
      for (std::uint64_t i : idx)
        points.push_back(point_of_domain_index(i, map.s, p, units));
      run_points(std::move(points), 0);
      unsigned k = t;
      while (k > 0 && idx[k - 1] == domain - t + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (unsigned i = k; i < t; ++i) idx[i] = idx[i - 1] + 1;
    }
    return report;
  }

  for (unsigned trial = 0; trial < trials; ++trial) {
    const std::uint64_t tseed = derive_seed(seed, trial);
    Rng rng(tseed);
    std::vector<std::vector<std::uint64_t>> points;
    while (points.size() < t) {
      std::vector<std::uint64_t> pt(map.s);
      for (unsigned i = 0; i < map.s; ++i)
        pt[i] = units ? 1 + rng.below(p - 1) : rng.below(p);
      if (std::find(points.begin(), points.end(), pt) == points.end())
        points.push_back(std::move(pt));
    }
    run_points(std::move(points), tseed);
  }
  return report;
}

NondegeneracyReport test_nondegeneracy(const PolyMap& map, unsigned s,
                                       std::uint64_t p, unsigned trials,
                                       std::uint64_t seed) {
  if (s != map.s) throw std::invalid_argument("domain dimension mismatch");
  const gf::PrimeField fp(p);
  const std::uint64_t domain = domain_size_saturating(p - 1, s);
  if (domain > kDomainCap)
    throw std::invalid_argument("nondegeneracy domain too large");

  // Images over the whole unit torus, computed once.
  std::vector<std::vector<std::uint64_t>> images;
  images.reserve(domain);
  for (std::uint64_t i = 0; i < domain; ++i)
    images.push_back(image_of(map, point_of_domain_index(i, s, p, true), p));

  const auto fiber_size =
      [&](const std::vector<std::vector<std::uint64_t>>& forms) {
        std::uint64_t count = 0;
        for (const auto& img : images) {
          bool in_fiber = true;
          for (const auto& form : forms) {
            std::uint64_t v = 0;
            for (unsigned c = 0; c < map.n; ++c)
              v = fp.add(v, fp.mul(form[c], img[c]));
            if (v != 0) {
              in_fiber = false;
              break;
            }
          }
          if (in_fiber) ++count;
        }
        return count;
      };

  NondegeneracyReport report;

  if (trials == 0) {
    if (s != 1)
      throw std::invalid_argument("exhaustive nondegeneracy requires s = 1");
    const std::uint64_t total = domain_size_saturating(p, map.n);
    if (total > 20'000'000)
      throw std::invalid_argument("exhaustive nondegeneracy too large");
    FiberWitness best;
    for (std::uint64_t v = 1; v < total; ++v) {
      std::vector<std::uint64_t> form(map.n);
      std::uint64_t rest = v;
      for (unsigned c = map.n; c-- > 0;) {
        form[c] = rest % p;
        rest /= p;
      }
      const std::uint64_t size = fiber_size({form});
      if (size > report.max_fiber || best.forms.empty()) {
        report.max_fiber = size;
        best = FiberWitness{{form}, size, 0};
      }
    }
    report.witnesses.push_back(std::move(best));
    return report;
  }

  for (unsigned trial = 0; trial < trials; ++trial) {
    const std::uint64_t tseed = derive_seed(seed, trial);
    Rng rng(tseed);
    std::vector<std::vector<std::uint64_t>> forms;
    do {
      forms.assign(s, std::vector<std::uint64_t>(map.n));
      for (auto& form : forms)
        for (auto& c : form) c = rng.below(p);
    } while (rank_mod_p(forms, p) != s);
    const std::uint64_t size = fiber_size(forms);
    report.max_fiber = std::max(report.max_fiber, size);
    report.witnesses.push_back(FiberWitness{std::move(forms), size, tseed});
  }
  return report;
}

std::string to_text(const PolyMap& map) {
  std::ostringstream out;
  out << "polymap s=" << map.s << " n=" << map.n
      << " degree_bound=" << map.degree_bound << '\n';
  for (unsigned c = 0; c < map.n; ++c) {
    out << "component " << c << '\n';
    out << map.components[c].to_text();
  }
  return out.str();
}

PolyMap polymap_from_text(const std::string& text,
                          std::optional<std::uint64_t> modulus) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty polymap text");
  PolyMap map;
  std::int64_t degree_bound = 0;
  {
    std::istringstream hs(line);
    std::string tag, fs, fn, fd;
    hs >> tag >> fs >> fn >> fd;
    if (tag != "polymap" || fs.rfind("s=", 0) != 0 || fn.rfind("n=", 0) != 0 ||
        fd.rfind("degree_bound=", 0) != 0)
      throw std::invalid_argument("malformed polymap header: " + line);
    map.s = static_cast<unsigned>(std::stoul(fs.substr(2)));
    map.n = static_cast<unsigned>(std::stoul(fn.substr(2)));
    degree_bound = std::stoll(fd.substr(13));
  }
  map.degree_bound = degree_bound;
  std::string section;
  const auto flush = [&]() {
    if (map.components.size() >= map.n)
      throw std::invalid_argument("too many polymap components");
    map.components.push_back(
        poly::Polynomial::from_text(section, map.s, modulus));
    section.clear();
  };
  bool in_component = false;
  while (std::getline(in, line)) {
    if (line.rfind("component ", 0) == 0) {
      if (in_component) flush();
      in_component = true;
      continue;
    }
    if (!in_component && !line.empty())
      throw std::invalid_argument("term outside polymap component");
    section += line;
    section += '\n';
  }
  if (in_component) flush();
  if (map.components.size() != map.n)
    throw std::invalid_argument("polymap component count mismatch");
  return map;
}

}  // namespace turan_forge::embeddings
