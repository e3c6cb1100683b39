#include "coxalg/sturm.hpp"

#include <stdexcept>

namespace coxalg {

namespace {

// Sturm chain of a squarefree polynomial. Each remainder is rescaled to a
// primitive integer polynomial; the scalar is positive, so signs along the
// chain are the classical ones.
struct SturmChain {
  std::vector<IntPoly> elems;

  explicit SturmChain(const IntPoly& squarefree) {
    elems.push_back(squarefree);
    if (squarefree.degree() >= 1) {
      elems.push_back(squarefree.derivative().primitive());
      while (elems.back().degree() > 0) {
        auto [q, r] = divrem(RatPoly(elems[elems.size() - 2]), RatPoly(elems.back()));
        (void)q;
        if (r.is_zero()) throw std::logic_error("squarefree input has repeated roots");
        elems.push_back((-r.primitive_integer()).primitive());
      }
    }
  }

  unsigned variations(const Rat& x) const {
    unsigned v = 0;
    int prev = 0;
    for (const auto& p : elems) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // distinct roots in (lo, hi]
  unsigned count(const Rat& lo, const Rat& hi) const {
    if (lo >= hi) return 0;
    return variations(lo) - variations(hi);
  }
};

}  // namespace

unsigned sturm_count(const IntPoly& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (f.degree() == 0 || lo >= hi) return 0;
  SturmChain chain(squarefree_part(f));
  return chain.count(lo, hi);
}

unsigned count_roots_closed(const IntPoly& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (f.degree() == 0 || lo > hi) return 0;
  unsigned total = 0;
  auto levels = squarefree_decomposition(f);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const IntPoly& g = levels[i];
    if (g.degree() < 1) continue;
    unsigned mult = static_cast<unsigned>(i + 1);
    unsigned cnt = (lo < hi) ? SturmChain(g).count(lo, hi) : 0u;
    if (g.sign_at(lo) == 0) ++cnt;  // (lo, hi] plus the left endpoint
    total += mult * cnt;
  }
  return total;
}

RatInterval refine_root(const IntPoly& f, RatInterval bracket, const Rat& tol) {
  int slo = f.sign_at(bracket.lo);
  int shi = f.sign_at(bracket.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine_root needs a strict sign change");
  if (tol <= 0) throw std::invalid_argument("refine_root tolerance must be positive");
  while (bracket.width() > tol) {
    Rat mid = bracket.mid();
    int sm = f.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      bracket.lo = mid;
    else
      bracket.hi = mid;
  }
  return bracket;
}

namespace {

void isolate_rec(const SturmChain& chain, const Rat& lo, const Rat& hi,
                 std::vector<RatInterval>& out) {
  unsigned n = chain.count(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  isolate_rec(chain, lo, mid, out);
  isolate_rec(chain, mid, hi, out);
}

}  // namespace

std::vector<RatInterval> isolate_real_roots(const IntPoly& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero()) throw std::invalid_argument("isolating roots of the zero polynomial");
  std::vector<RatInterval> out;
  if (f.degree() == 0 || lo >= hi) return out;
  SturmChain chain(squarefree_part(f));
  isolate_rec(chain, lo, hi, out);
  return out;
}

Rat cauchy_root_bound(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  if (f.degree() == 0) return 0;
  Int an = f.leading();
  if (an < 0) an = -an;
  Int m = 0;
  for (std::size_t k = 0; k + 1 < f.coeffs().size(); ++k) {
    Int a = f.coeffs()[k];
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return Rat(1) + Rat(m) / Rat(an);
}

}  // namespace coxalg
