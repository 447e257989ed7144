#include "turan_forge/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "turan_forge/parallel.hpp"
#include "turan_forge/rng.hpp"

namespace turan_forge::constructions {

unsigned ConstructionSpec::side_dim() const {
  switch (family) {
    case Family::ErdosRenyi: return 2;
    case Family::BrownSphere: return 3;
    case Family::NormGraph: return s;
    case Family::ProjNormGraph: return s;
    case Family::Wenger: return t;
    case Family::InnerProduct: return s;
    case Family::Custom: return custom_side_dim;
  }
  return 0;
}

std::string ConstructionSpec::family_name() const {
  switch (family) {
    case Family::ErdosRenyi: return "er";
    case Family::BrownSphere: return "brown";
    case Family::NormGraph: return "norm";
    case Family::ProjNormGraph: return "projnorm";
    case Family::Wenger: return "wenger";
    case Family::InnerProduct: return "inner";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& name) {
  if (name == "er") return Family::ErdosRenyi;
  if (name == "brown") return Family::BrownSphere;
  if (name == "norm") return Family::NormGraph;
  if (name == "projnorm") return Family::ProjNormGraph;
  if (name == "wenger") return Family::Wenger;
  if (name == "inner") return Family::InnerProduct;
  if (name == "custom") return Family::Custom;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

std::uint64_t factorial_u64(std::uint64_t n) {
  if (n > 20) throw std::overflow_error("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && v > UINT64_MAX / base)
      throw std::overflow_error("power overflows 64 bits");
    v *= base;
  }
  return v;
}

// Side caps keep adjacency storage and pair loops at desk scale.
std::uint32_t checked_side_size(std::uint64_t p, unsigned dim) {
  const std::uint64_t side = pow_u64_checked(p, dim);
  if (side > (std::uint64_t{1} << 21))
    throw std::invalid_argument("graph too large");
  return static_cast<std::uint32_t>(side);
}

BipartiteGraph make_vertex_sets(std::uint64_t p, unsigned dim) {
  const std::uint32_t side = checked_side_size(p, dim);
  const std::uint64_t bits = static_cast<std::uint64_t>(side) * side;
  if (bits > (std::uint64_t{1} << 32))
    throw std::invalid_argument("graph too large");
  BipartiteGraph g;
  g.left_size = g.right_size = side;
  g.left_dim = g.right_dim = dim;
  g.left_labels.resize(static_cast<std::size_t>(side) * dim);
  for (std::uint32_t v = 0; v < side; ++v) {
    const auto label = label_of_index(v, dim, p);
    std::copy(label.begin(), label.end(),
              g.left_labels.begin() + static_cast<std::size_t>(v) * dim);
  }
  g.right_labels = g.left_labels;
  g.adj = BitRows(side, side);
  return g;
}

// Fills adjacency by evaluating every defining polynomial on every pair.
// Pairs where a Laurent equation is undefined become non-edges.
void fill_by_equations(BipartiteGraph& g, std::uint64_t p,
                       const std::vector<poly::Polynomial>& equations) {
  const unsigned dl = g.left_dim, dr = g.right_dim;
  std::vector<poly::PackedEvaluator> prototype;
  prototype.reserve(equations.size());
  for (const auto& eq : equations) prototype.emplace_back(eq, p);
  parallel_for_blocks(g.left_size, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<poly::PackedEvaluator> evals = prototype;
    std::vector<std::uint64_t> point(dl + dr);
    for (std::uint64_t u = lo; u < hi; ++u) {
      const std::uint32_t* xl = g.left_label(static_cast<std::uint32_t>(u));
      for (unsigned i = 0; i < dl; ++i) point[i] = xl[i];
      std::uint64_t* row = g.adj.row(static_cast<std::uint32_t>(u));
      for (std::uint32_t v = 0; v < g.right_size; ++v) {
        const std::uint32_t* yl = g.right_label(v);
        for (unsigned i = 0; i < dr; ++i) point[dl + i] = yl[i];
        bool edge = true;
        try {
          for (auto& ev : evals)
            if (ev.eval(point.data()) != 0) {
              edge = false;
              break;
            }
        } catch (const std::domain_error&) {
          edge = false;
        }
        if (edge) row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  });
}

poly::Polynomial erdos_renyi_poly(std::uint64_t p) {
  poly::Polynomial f(4, p);
  f.add_term({1, 0, 1, 0}, 1);
  f.add_term({0, 1, 0, 1}, 1);
  f.add_term({0, 0, 0, 0}, -1);
  return f;
}

poly::Polynomial brown_poly(std::uint64_t p, std::uint64_t alpha) {
  poly::Polynomial f(6, p);
  for (unsigned i = 0; i < 3; ++i) {
    poly::Monomial m(6, 0);
    m[i] = 2;
    f.add_term(m, 1);                  // x_i^2
    m[i] = 0;
    m[3 + i] = 2;
    f.add_term(m, 1);                  // y_i^2
    m[3 + i] = 1;
    m[i] = 1;
    f.add_term(m, -2);                 // -2 x_i y_i
  }
  f.add_term(poly::Monomial(6, 0), -static_cast<long>(alpha));
  return f;
}

std::vector<poly::Polynomial> wenger_polys(std::uint64_t p, unsigned t) {
  // Variables: x_1..x_t then y_1..y_t; equations y_j - x_j - x_{j+1} y_t.
  std::vector<poly::Polynomial> eqs;
  for (unsigned j = 1; j < t; ++j) {
    poly::Polynomial f(2 * t, p);
    poly::Monomial m(2 * t, 0);
    m[t + j - 1] = 1;
    f.add_term(m, 1);
    std::fill(m.begin(), m.end(), 0);
    m[j - 1] = 1;
    f.add_term(m, -1);
    std::fill(m.begin(), m.end(), 0);
    m[j] = 1;
    m[2 * t - 1] = 1;
    f.add_term(m, -1);
    eqs.push_back(std::move(f));
  }
  return eqs;
}

void fill_wenger(BipartiteGraph& g, std::uint64_t p, unsigned t) {
  const gf::PrimeField fp(p);
  parallel_for_blocks(g.left_size, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> ylabel(t);
    for (std::uint64_t u = lo; u < hi; ++u) {
      const std::uint32_t* x = g.left_label(static_cast<std::uint32_t>(u));
      for (std::uint64_t yt = 0; yt < p; ++yt) {
        for (unsigned j = 1; j < t; ++j)
          ylabel[j - 1] = static_cast<std::uint32_t>(
              fp.add(x[j - 1], fp.mul(x[j], yt)));
        ylabel[t - 1] = static_cast<std::uint32_t>(yt);
        const std::uint64_t v = index_of_label(ylabel.data(), t, p);
        g.adj.set(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      }
    }
  });
}

void fill_norm_graph(BipartiteGraph& g, const gf::ExtField& field) {
  // Edge (x, y) iff N(x + y) = 1: walk the norm-one set once per left vertex.
  std::vector<std::uint64_t> norm_one;
  for (std::uint64_t i = 0; i < field.size(); ++i)
    if (gf::norm(field.from_index(i)) == 1) norm_one.push_back(i);
  const unsigned m = field.m();
  parallel_for_blocks(g.left_size, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> coeffs(m);
    std::vector<std::uint32_t> ylabel(m);
    for (std::uint64_t u = lo; u < hi; ++u) {
      const std::uint32_t* x = g.left_label(static_cast<std::uint32_t>(u));
      for (unsigned i = 0; i < m; ++i) coeffs[i] = x[i];
      const gf::ExtElement ex = field.element(coeffs);
      for (const std::uint64_t zi : norm_one) {
        const gf::ExtElement y = field.sub(field.from_index(zi), ex);
        for (unsigned i = 0; i < m; ++i)
          ylabel[i] = static_cast<std::uint32_t>(y.coeffs[i]);
        const std::uint64_t v = index_of_label(ylabel.data(), m, field.p());
        g.adj.set(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      }
    }
  });
}

void fill_proj_norm_graph(BipartiteGraph& g, std::uint64_t p, unsigned s,
                          const gf::ExtField& sub) {
  // Edge (x, y) iff N_{s-1}(x' + y') = x_1 y_1, primed = last s-1 coords.
  const unsigned m = s - 1;
  const gf::PrimeField fp(p);
  const std::uint64_t sub_size = sub.size();
  std::vector<std::uint64_t> norm_of(sub_size);
  for (std::uint64_t i = 0; i < sub_size; ++i)
    norm_of[i] = gf::norm(sub.from_index(i));
  parallel_for_blocks(g.left_size, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> xc(m);
    for (std::uint64_t u = lo; u < hi; ++u) {
      const std::uint32_t* x = g.left_label(static_cast<std::uint32_t>(u));
      for (unsigned i = 0; i < m; ++i) xc[i] = x[i + 1];
      const gf::ExtElement xprime = sub.element(xc);
      std::uint64_t* row = g.adj.row(static_cast<std::uint32_t>(u));
      for (std::uint32_t v = 0; v < g.right_size; ++v) {
        const std::uint32_t* y = g.right_label(v);
        gf::ExtElement w = xprime;
        for (unsigned i = 0; i < m; ++i)
          w.coeffs[i] = fp.add(w.coeffs[i], y[i + 1]);
        if (norm_of[sub.index_of(w)] == fp.mul(x[0], y[0]))
          row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  });
}

poly::Polynomial dense_random_poly(unsigned s, std::int64_t d, std::uint64_t p,
                                   Rng& rng) {
  const embeddings::PolyMap monos = embeddings::veronese_full(s, d, p);
  poly::Polynomial f(s, p);
  for (const auto& comp : monos.components)
    f.add_term(comp.support().front(), mpz_class(rng.below(p)));
  return f;
}

// Lift an s-variable polynomial onto 2s variables, at offset 0 for the left
// factor or s for the right factor.
poly::Polynomial lift_to_pair_vars(const poly::Polynomial& f, unsigned s,
                                   unsigned offset,
                                   std::optional<std::uint64_t> modulus) {
  poly::Polynomial out(2 * s, modulus);
  poly::Monomial m(2 * s, 0);
  for (const auto& [mono, c] : f.terms()) {
    std::fill(m.begin(), m.end(), 0);
    for (unsigned i = 0; i < s; ++i) m[offset + i] = mono[i];
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

ForbiddenClaim claimed_forbidden_for(const ConstructionSpec& spec) {
  ForbiddenClaim claim;
  switch (spec.family) {
    case Family::ErdosRenyi:
      claim = {ForbiddenClaim::Kind::Grid, 2, 2, 0};
      break;
    case Family::BrownSphere:
      claim = {ForbiddenClaim::Kind::Grid, 3, 3, 0};
      break;
    case Family::NormGraph:
      if (spec.s < 1) throw std::invalid_argument("NormGraph needs s >= 1");
      claim = {ForbiddenClaim::Kind::Grid, spec.s, factorial_u64(spec.s) + 1, 0};
      break;
    case Family::ProjNormGraph:
      if (spec.s < 2) throw std::invalid_argument("ProjNormGraph needs s >= 2");
      claim = {ForbiddenClaim::Kind::Grid, spec.s, factorial_u64(spec.s - 1) + 1, 0};
      break;
    case Family::Wenger:
      if (spec.t < 2) throw std::invalid_argument("Wenger needs t >= 2");
      claim = {ForbiddenClaim::Kind::Cycle, 0, 0, 2 * spec.t};
      break;
    case Family::InnerProduct: {
      if (spec.s < 2)
        throw std::invalid_argument("inner product construction needs s >= 2");
      const std::uint64_t base =
          static_cast<std::uint64_t>(spec.s) * spec.s * (spec.s + 1);
      claim = {ForbiddenClaim::Kind::Grid, spec.s, pow_u64_checked(base, spec.s), 0};
      break;
    }
    case Family::Custom:
      claim = {ForbiddenClaim::Kind::None, 0, 0, 0};
      break;
  }
  return claim;
}

poly::Polynomial norm_form(const gf::ExtField& field) {
  const unsigned m = field.m();
  const std::uint64_t p = field.p();

  // acc represents an element of F_{p^m} with polynomial coordinates;
  // multiply it by every Frobenius conjugate of the generic element
  // z = sum_k z_k x^k in turn.
  std::vector<poly::Polynomial> acc;
  acc.reserve(m);
  acc.push_back(poly::Polynomial::constant(m, 1, p));
  for (unsigned j = 1; j < m; ++j) acc.emplace_back(m, p);

  // Coordinates of x^k for k up to 2m-2, for reducing products.
  std::vector<std::vector<std::uint64_t>> xpow;
  for (unsigned k = 0; k <= 2 * m - 2; ++k) xpow.push_back(field.x_power_coords(k));

  for (unsigned i = 0; i < m; ++i) {
    // conj[j] = coefficient of x^j in z^{p^i} = sum_k z_k (x^k)^{p^i}.
    std::vector<poly::Polynomial> conj(m, poly::Polynomial(m, p));
    const std::uint64_t pi = pow_u64_checked(p, i);
    for (unsigned k = 0; k < m; ++k) {
      const auto coords =
          field.pow(field.gen(), static_cast<std::uint64_t>(k) * pi).coeffs;
      poly::Monomial mono(m, 0);
      mono[k] = 1;
      for (unsigned j = 0; j < m; ++j)
        if (coords[j] != 0) conj[j].add_term(mono, mpz_class(coords[j]));
    }
    // Convolve acc * conj in the quotient ring.
    std::vector<poly::Polynomial> next(2 * m - 1, poly::Polynomial(m, p));
    for (unsigned a = 0; a < m; ++a) {
      if (acc[a].is_zero()) continue;
      for (unsigned b = 0; b < m; ++b) {
        if (conj[b].is_zero()) continue;
        next[a + b] += poly::multiply(acc[a], conj[b]);
      }
    }
    for (unsigned k = 2 * m - 2; k >= m && k < next.size(); --k) {
      if (next[k].is_zero()) continue;
      for (unsigned j = 0; j < m; ++j) {
        if (xpow[k][j] == 0) continue;
        poly::Polynomial scaled = next[k];
        scaled *= mpz_class(xpow[k][j]);
        next[j] += scaled;
      }
      next[k] = poly::Polynomial(m, p);
    }
    for (unsigned j = 0; j < m; ++j) acc[j] = std::move(next[j]);
  }
  for (unsigned j = 1; j < m; ++j)
    if (!acc[j].is_zero())
      throw std::logic_error("norm form has nonscalar component");
  return acc[0];
}

poly::Polynomial norm_form_in_slots(const gf::ExtField& field,
                                    unsigned total_vars,
                                    const std::vector<unsigned>& x_slots,
                                    const std::vector<unsigned>& y_slots) {
  const unsigned m = field.m();
  if (x_slots.size() != m || y_slots.size() != m)
    throw std::invalid_argument("slot count must equal extension degree");
  const poly::Polynomial nf = norm_form(field);
  const std::uint64_t p = field.p();
  poly::Polynomial out(total_vars, p);
  for (const auto& [mono, c] : nf.terms()) {
    poly::Polynomial term = poly::Polynomial::constant(total_vars, c, p);
    for (unsigned k = 0; k < m; ++k) {
      if (mono[k] == 0) continue;
      poly::Polynomial base(total_vars, p);
      poly::Monomial bm(total_vars, 0);
      bm[x_slots[k]] = 1;
      base.add_term(bm, 1);
      std::fill(bm.begin(), bm.end(), 0);
      bm[y_slots[k]] = 1;
      base.add_term(bm, 1);
      for (std::int32_t e = 0; e < mono[k]; ++e) term = poly::multiply(term, base);
    }
    out += term;
  }
  return out;
}

ConstructionResult build_graph(const ConstructionSpec& spec) {
  const gf::PrimeField fp(spec.p);
  ConstructionResult result;
  result.spec = spec;
  result.claimed_forbidden = claimed_forbidden_for(spec);
  result.seed_used = spec.seed;

  switch (spec.family) {
    case Family::ErdosRenyi: {
      result.graph = make_vertex_sets(spec.p, 2);
      result.defining_polys.push_back(erdos_renyi_poly(spec.p));
      fill_by_equations(result.graph, spec.p, result.defining_polys);
      break;
    }
    case Family::BrownSphere: {
      if (spec.alpha == 0 || spec.alpha >= spec.p)
        throw std::invalid_argument("alpha must be a nonzero residue");
      result.graph = make_vertex_sets(spec.p, 3);
      result.defining_polys.push_back(brown_poly(spec.p, spec.alpha));
      fill_by_equations(result.graph, spec.p, result.defining_polys);
      break;
    }
    case Family::NormGraph: {
      if (spec.s < 1) throw std::invalid_argument("NormGraph needs s >= 1");
      const gf::ExtField field(spec.p, spec.s);
      result.graph = make_vertex_sets(spec.p, spec.s);
      std::vector<unsigned> xs(spec.s), ys(spec.s);
      for (unsigned i = 0; i < spec.s; ++i) {
        xs[i] = i;
        ys[i] = spec.s + i;
      }
      poly::Polynomial f = norm_form_in_slots(field, 2 * spec.s, xs, ys);
      f.add_term(poly::Monomial(2 * spec.s, 0), -1);
      result.defining_polys.push_back(std::move(f));
      fill_norm_graph(result.graph, field);
      break;
    }
    case Family::ProjNormGraph: {
      if (spec.s < 2) throw std::invalid_argument("ProjNormGraph needs s >= 2");
      const gf::ExtField sub(spec.p, spec.s - 1);
      result.graph = make_vertex_sets(spec.p, spec.s);
      std::vector<unsigned> xs(spec.s - 1), ys(spec.s - 1);
      for (unsigned i = 0; i < spec.s - 1; ++i) {
        xs[i] = 1 + i;
        ys[i] = spec.s + 1 + i;
      }
      poly::Polynomial f = norm_form_in_slots(sub, 2 * spec.s, xs, ys);
      poly::Monomial m(2 * spec.s, 0);
      m[0] = 1;
      m[spec.s] = 1;
      f.add_term(m, -1);  // minus x1*y1
      result.defining_polys.push_back(std::move(f));
      fill_proj_norm_graph(result.graph, spec.p, spec.s, sub);
      break;
    }
    case Family::Wenger: {
      if (spec.t < 2) throw std::invalid_argument("Wenger needs t >= 2");
      result.graph = make_vertex_sets(spec.p, spec.t);
      result.defining_polys = wenger_polys(spec.p, spec.t);
      fill_wenger(result.graph, spec.p, spec.t);
      break;
    }
    case Family::InnerProduct:
      return build_inner_product(spec.s, spec.p, spec.mode, spec.seed);
    case Family::Custom: {
      if (spec.equations.empty() || spec.custom_side_dim == 0)
        throw std::invalid_argument("custom family needs equations and side_dim");
      for (const auto& eq : spec.equations)
        if (eq.nvars() != 2 * spec.custom_side_dim)
          throw std::invalid_argument(
              "custom equations must use 2*side_dim variables");
      result.graph = make_vertex_sets(spec.p, spec.custom_side_dim);
      result.defining_polys = spec.equations;
      fill_by_equations(result.graph, spec.p, result.defining_polys);
      break;
    }
  }
  return result;
}

ConstructionResult build_inner_product(unsigned s, std::uint64_t p,
                                       InnerProductMode mode,
                                       std::uint64_t seed) {
  if (s < 2) throw std::invalid_argument("inner product construction needs s >= 2");
  const gf::PrimeField fp(p);
  const unsigned target = s * (s + 1);

  ConstructionResult result;
  result.spec.family = Family::InnerProduct;
  result.spec.p = p;
  result.spec.s = s;
  result.spec.mode = mode;
  result.spec.seed = seed;
  result.claimed_forbidden = claimed_forbidden_for(result.spec);
  result.seed_used = seed;

  embeddings::PolyMap f1, f2;
  if (mode == InnerProductMode::Generic) {
    const std::int64_t d =
        static_cast<std::int64_t>(s) * s * (static_cast<std::int64_t>(s) + 1);
    Rng rng(seed);
    const auto draw_map = [&]() {
      embeddings::PolyMap map;
      map.s = s;
      map.n = target;
      map.degree_bound = d;
      for (unsigned i = 0; i < target; ++i)
        map.components.push_back(dense_random_poly(s, d, p, rng));
      return map;
    };
    f1 = draw_map();
    f2 = draw_map();
  } else {
    unsigned resamples = 0;
    f1 = embeddings::veronese_regular(s, s, static_cast<std::int64_t>(s) - 1,
                                      seed, p, &resamples);
    result.resample_count = resamples;
    embeddings::PrimePowerEmbedding ppe = embeddings::prime_power_embedding(s, target);
    if (ppe.primes.max_prime() >= p)
      throw std::invalid_argument(
          "p must exceed the largest assigned prime exponent");
    f2 = std::move(ppe.map);
  }

  result.graph = make_vertex_sets(p, s);
  const std::uint32_t side = result.graph.left_size;

  // Value tables: component values of f1 on every left vertex and f2 on
  // every right vertex (f2 may be Laurent; right vertices with a zero
  // coordinate are then isolated).
  const bool laurent_right = f2.is_laurent();
  std::vector<std::uint64_t> t1(static_cast<std::size_t>(side) * target);
  std::vector<std::uint64_t> t2(static_cast<std::size_t>(side) * target);
  std::vector<std::uint8_t> right_defined(side, 1);

  const auto fill_table = [&](const embeddings::PolyMap& map,
                              std::vector<std::uint64_t>& table, bool mark) {
    std::vector<poly::PackedEvaluator> prototype;
    for (const auto& comp : map.components) prototype.emplace_back(comp, p);
    parallel_for_blocks(side, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<poly::PackedEvaluator> evals = prototype;
      std::vector<std::uint64_t> point(s);
      for (std::uint64_t v = lo; v < hi; ++v) {
        const std::uint32_t* label =
            result.graph.left_label(static_cast<std::uint32_t>(v));
        bool defined = true;
        if (mark && laurent_right)
          for (unsigned i = 0; i < s; ++i)
            if (label[i] == 0) defined = false;
        if (!defined) {
          right_defined[v] = 0;
          continue;
        }
        for (unsigned i = 0; i < s; ++i) point[i] = label[i];
        for (unsigned c = 0; c < target; ++c)
          table[v * target + c] = evals[c].eval(point.data());
      }
    });
  };
  fill_table(f1, t1, false);
  fill_table(f2, t2, true);

  parallel_for_blocks(side, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t u = lo; u < hi; ++u) {
      const std::uint64_t* a = t1.data() + u * target;
      std::uint64_t* row = result.graph.adj.row(static_cast<std::uint32_t>(u));
      for (std::uint32_t v = 0; v < side; ++v) {
        if (!right_defined[v]) continue;
        const std::uint64_t* b = t2.data() + static_cast<std::size_t>(v) * target;
        std::uint64_t dot = 0;
        for (unsigned c = 0; c < target; ++c) dot += a[c] * b[c];
        if (dot % p == 0) row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  });

  // Composed defining polynomial sum_i f1_i(x) * f2_i(y).
  poly::Polynomial composed(2 * s, p);
  for (unsigned c = 0; c < target; ++c)
    composed += poly::multiply(lift_to_pair_vars(f1.components[c], s, 0, p),
                               lift_to_pair_vars(f2.components[c], s, s, p));
  result.defining_polys.push_back(std::move(composed));
  result.f1 = std::move(f1);
  result.f2 = std::move(f2);
  return result;
}

EdgeExpectation expected_edge_count(const ConstructionSpec& spec) {
  if (spec.family == Family::Custom)
    throw std::invalid_argument("no expectation available");
  EdgeExpectation e;
  if (spec.family == Family::Wenger) {
    e.expected = pow_u64_checked(spec.p, spec.t + 1);
    e.exact = true;
    e.note = "determined system, exact count";
    return e;
  }
  e.expected = pow_u64_checked(spec.p, 2 * spec.side_dim() - 1);
  e.rel_window = 4.0 / std::sqrt(static_cast<double>(spec.p));
  e.exact = false;
  e.note = "hypersurface point-count heuristic, window 4/sqrt(p), warning only";
  return e;
}

}  // namespace turan_forge::constructions
