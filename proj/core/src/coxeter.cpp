#include "coxalg/coxeter.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coxalg/cartan.hpp"

namespace coxalg {

IntPoly star_coxeter_poly(const WeightSequence& p) {
  const auto& parts = p.parts();
  IntPoly prod_all = IntPoly::constant(1);
  for (unsigned pi : parts) prod_all *= v_poly(pi);
  IntPoly t1{1, 1};  // 1 + T
  IntPoly f = t1 * prod_all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    IntPoly term = v_poly(parts[i] - 1);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) term *= v_poly(parts[j]);
    f -= IntPoly::variable() * term;
  }
  if (f.degree() != static_cast<int>(1 + p.sum_minus_t()))
    throw std::logic_error("star Coxeter polynomial has the wrong degree");
  return f;
}

IntPoly canonical_coxeter_poly(const WeightSequence& p) {
  IntPoly f{1, -2, 1};  // (T - 1)^2
  for (unsigned pi : p.parts()) f *= v_poly(pi);
  return f;
}

IntPoly extended_coxeter_poly(const WeightSequence& p) {
  IntPoly f = IntPoly{1, 1} * canonical_coxeter_poly(p) -
              IntPoly::variable() * star_coxeter_poly(p);
  if (f.degree() != static_cast<int>(3 + p.sum_minus_t()) || f.leading() != 1 ||
      f.coeff(0) != 1)
    throw std::logic_error("extended Coxeter polynomial malformed");
  return f;
}

Tree star_tree(const std::vector<unsigned>& arm_lengths) {
  Tree t;
  t.n = 1;
  for (unsigned len : arm_lengths) {
    unsigned prev = 0;
    for (unsigned j = 0; j < len; ++j) {
      t.edges.emplace_back(prev, t.n);
      prev = t.n;
      ++t.n;
    }
  }
  return t;
}

namespace {

using Mask = std::uint64_t;

struct TreeSolver {
  unsigned n;
  std::vector<Mask> adj;
  std::unordered_map<Mask, IntPoly> memo;

  IntPoly solve(Mask mask) {
    if (mask == 0) return IntPoly::constant(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    // peel one connected component off the mask
    Mask comp = 0;
    Mask frontier = mask & (~mask + 1);  // lowest set vertex
    while (frontier) {
      comp |= frontier;
      Mask next = 0;
      for (unsigned v = 0; v < n; ++v)
        if (frontier >> v & 1u) next |= adj[v] & mask & ~comp;
      frontier = next;
    }

    IntPoly result;
    if ((comp & (comp - 1)) == 0) {
      result = IntPoly{1, 1};  // isolated vertex contributes 1 + T
    } else {
      // remove a leaf v with unique neighbor w:
      // f = (1+T) f(G - v) - T f(G - v - w)
      unsigned leaf = 0, neighbor = 0;
      bool found = false;
      for (unsigned v = 0; v < n && !found; ++v) {
        if (!(comp >> v & 1u)) continue;
        Mask nb = adj[v] & comp;
        if (nb && (nb & (nb - 1)) == 0) {
          leaf = v;
          Mask m = nb;
          neighbor = 0;
          while (!(m & 1u)) {
            m >>= 1u;
            ++neighbor;
          }
          found = true;
        }
      }
      if (!found) throw std::logic_error("forest component without a leaf");
      Mask rest = mask & ~comp;
      Mask without_leaf = comp & ~(Mask(1) << leaf);
      Mask without_edge = without_leaf & ~(Mask(1) << neighbor);
      result = IntPoly{1, 1} * solve(without_leaf) - IntPoly::variable() * solve(without_edge);
      if (rest) {
        memo.emplace(comp, result);
        return memo.emplace(mask, result * solve(rest)).first->second;
      }
    }
    Mask rest = mask & ~comp;
    if (rest) result *= solve(rest);
    return memo.emplace(mask, std::move(result)).first->second;
  }
};

}  // namespace

IntPoly tree_coxeter_poly(const Tree& tree) {
  if (tree.n == 0 || tree.n > 62) throw std::invalid_argument("tree size out of range");
  if (tree.edges.size() + 1 != tree.n) throw std::invalid_argument("edge count is not n - 1");
  TreeSolver s;
  s.n = tree.n;
  s.adj.assign(tree.n, 0);
  for (auto [a, b] : tree.edges) {
    if (a >= tree.n || b >= tree.n || a == b) throw std::invalid_argument("bad tree edge");
    if (s.adj[a] >> b & 1u) throw std::invalid_argument("duplicate tree edge");
    s.adj[a] |= Mask(1) << b;
    s.adj[b] |= Mask(1) << a;
  }
  // connectivity: n vertices with n-1 edges is a tree iff connected
  Mask all = tree.n == 62 ? ~Mask(0) >> 2 : (Mask(1) << tree.n) - 1;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (unsigned v = 0; v < tree.n; ++v)
      if (frontier >> v & 1u) next |= s.adj[v] & ~seen;
    seen |= next;
    frontier = next;
  }
  if (seen != all) throw std::invalid_argument("edges do not connect the tree");
  return s.solve(all);
}

IntPoly path_char_poly(unsigned k) {
  IntPoly prev = IntPoly::constant(1);
  if (k == 0) return prev;
  IntPoly cur = IntPoly::variable();
  for (unsigned i = 1; i < k; ++i) {
    IntPoly next = IntPoly::variable() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly star_adjacency_char_poly(const WeightSequence& p) {
  std::vector<unsigned> arms;
  for (unsigned pi : p.parts()) arms.push_back(pi - 1);
  Tree t = star_tree(arms);
  IntMatrix a(t.n);
  for (auto [u, v] : t.edges) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return char_poly(a);
}

IntPoly q_poly(const WeightSequence& p) {
  IntPoly head{0, -4, 0, 1};  // x (x^2 - 4)
  for (unsigned pi : p.parts()) head *= path_char_poly(pi - 1);
  IntPoly q = head - star_adjacency_char_poly(p);
  if (q.degree() != static_cast<int>(3 + p.sum_minus_t()))
    throw std::logic_error("q polynomial has the wrong degree");
  return q;
}

IntPoly represent_transform(const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("representing the zero polynomial");
  std::size_t d = static_cast<std::size_t>(q.degree());
  IntPoly out;
  IntPoly t2p1{1, 0, 1};  // T^2 + 1
  for (std::size_t k = 0; k <= d; ++k) {
    Int a = q.coeff(k);
    if (a == 0) continue;
    out += a * (IntPoly::monomial(1, d - k) * t2p1.pow(static_cast<unsigned>(k)));
  }
  return out;
}

namespace {

struct CircleCount {
  unsigned total;
  unsigned on_circle;
};

CircleCount circle_count(const WeightSequence& p) {
  IntPoly q = q_poly(p);
  unsigned total = static_cast<unsigned>(q.degree());
  unsigned inside = count_roots_closed(q, Rat(-2), Rat(2));
  // cross-check against Kronecker: every root on the unit circle iff the
  // extended Coxeter polynomial is a product of cyclotomics
  bool cyclo = factor_cyclotomic(extended_coxeter_poly(p)).fully_cyclotomic();
  if ((inside == total) != cyclo)
    throw std::logic_error("circle count disagrees with the cyclotomic factorization");
  return {total, inside};
}

}  // namespace

bool roots_on_circle(const WeightSequence& p) {
  CircleCount c = circle_count(p);
  return c.on_circle == c.total;
}

unsigned off_circle_count(const WeightSequence& p) {
  CircleCount c = circle_count(p);
  return c.total - c.on_circle;
}

std::string Period::str() const {
  if (!finite) return "infinite";
  std::ostringstream os;
  os << value;
  return os.str();
}

Period coxeter_period(const WeightSequence& p) {
  CycloFactorization fac = factor_cyclotomic(extended_coxeter_poly(p));
  if (!fac.fully_cyclotomic()) return Period::infinite();
  unsigned long long l = 1;
  for (auto [n, e] : fac.factors) l = std::lcm(l, static_cast<unsigned long long>(n));
  if (l > 1000000ull) throw std::logic_error("period bound unexpectedly large");
  IntMatrix phi = coxeter_matrix(cartan_extended(p));
  IntMatrix eye = IntMatrix::identity(phi.size());
  if (phi.pow(l) != eye) return Period::infinite();
  for (unsigned d : divisors(static_cast<unsigned>(l)))
    if (phi.pow(d) == eye) return Period::of(d);
  throw std::logic_error("period divides lcm but no divisor matched");
}

bool periodic_with_top_cyclotomic(const WeightSequence& p) {
  Period per = coxeter_period(p);
  if (!per.finite) return false;
  CycloFactorization fac = factor_cyclotomic(extended_coxeter_poly(p));
  return fac.multiplicity(static_cast<unsigned>(per.value)) > 0;
}

std::string SpectralRadius::decimal(unsigned digits) const {
  Rat mid = interval.mid();
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Rat scaled = mid * Rat(scale);
  Int whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  Rat frac = scaled - Rat(whole);
  if (frac >= Rat(1, 2)) whole += 1;
  std::ostringstream os;
  Int ip = whole / scale, fp = whole % scale;
  os << ip << ".";
  std::string fs = fp.str();
  os << std::string(digits - fs.size(), '0') << fs;
  return os.str();
}

CoxeterReport coxeter_report(const WeightSequence& p) {
  CoxeterReport r{p,
                  extended_coxeter_poly(p),
                  {},
                  false,
                  0,
                  {},
                  {}};
  r.factorization = factor_cyclotomic(r.f_hat);
  CircleCount c = circle_count(p);
  r.on_circle = c.on_circle == c.total;
  r.off_circle = c.total - c.on_circle;
  r.spectral = spectral_radius(p);
  r.period = coxeter_period(p);
  return r;
}

}  // namespace coxalg
