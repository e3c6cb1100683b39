#include "coxalg/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace coxalg {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  IntMatrix r = identity(n_);
  IntMatrix base = *this;
  while (e) {
    if (e & 1ul) r = r * base;
    e >>= 1ul;
    if (e) base = base * base;
  }
  return r;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

std::size_t CartanData::star_index() const {
  if (!extended) throw std::logic_error("no extension vertex on a canonical algebra");
  return labels.size() - 1;
}

namespace {

struct VertexLayout {
  std::size_t n0;                           // canonical vertex count
  std::vector<std::vector<std::size_t>> arm;  // arm[i][j-1] = index of a_{i+1,j}
  std::size_t omega;

  explicit VertexLayout(const WeightSequence& p) {
    std::size_t idx = 1;
    arm.resize(p.t());
    for (std::size_t i = 0; i < p.t(); ++i)
      for (unsigned j = 1; j < p.parts()[i]; ++j) arm[i].push_back(idx++);
    omega = idx;
    n0 = idx + 1;
  }
};

std::vector<std::string> make_labels(const WeightSequence& p, bool extended) {
  std::vector<std::string> labels;
  labels.emplace_back("v0");
  for (std::size_t i = 0; i < p.t(); ++i)
    for (unsigned j = 1; j < p.parts()[i]; ++j) {
      std::ostringstream os;
      os << "a_" << (i + 1) << "_" << j;
      labels.push_back(os.str());
    }
  labels.emplace_back("omega");
  if (extended) labels.emplace_back("star");
  return labels;
}

IntMatrix canonical_matrix(const WeightSequence& p, const VertexLayout& v) {
  IntMatrix c = IntMatrix::identity(v.n0);
  for (std::size_t i = 0; i < p.t(); ++i) {
    const auto& a = v.arm[i];
    for (std::size_t j = 0; j < a.size(); ++j) {
      c.at(0, a[j]) = 1;
      for (std::size_t k = j + 1; k < a.size(); ++k) c.at(a[j], a[k]) = 1;
      c.at(a[j], v.omega) = 1;
    }
  }
  c.at(0, v.omega) = 2;
  return c;
}

}  // namespace

CartanData cartan_canonical(const WeightSequence& p) {
  VertexLayout v(p);
  return {canonical_matrix(p, v), make_labels(p, false), false};
}

CartanData cartan_extended(const WeightSequence& p) {
  VertexLayout v(p);
  return cartan_extended(p, v.omega);
}

CartanData cartan_extended(const WeightSequence& p, std::size_t base_vertex) {
  VertexLayout v(p);
  if (base_vertex >= v.n0) throw std::out_of_range("extension base vertex out of range");
  IntMatrix c0 = canonical_matrix(p, v);
  std::size_t n = v.n0 + 1;
  IntMatrix c(n);
  for (std::size_t i = 0; i < v.n0; ++i)
    for (std::size_t j = 0; j < v.n0; ++j) c.at(i, j) = c0.at(i, j);
  // the projective resolution of the extension module copies the column of
  // the base vertex
  for (std::size_t i = 0; i < v.n0; ++i) c.at(i, n - 1) = c0.at(i, base_vertex);
  c.at(n - 1, n - 1) = 1;
  return {std::move(c), make_labels(p, true), true};
}

IntMatrix inverse_unitriangular(const IntMatrix& c) {
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c.at(i, i) != 1) throw std::invalid_argument("matrix is not unitriangular");
    for (std::size_t j = 0; j < i; ++j)
      if (c.at(i, j) != 0) throw std::invalid_argument("matrix is not upper triangular");
  }
  IntMatrix x(n);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      Int acc = (i == j) ? Int(1) : Int(0);
      for (std::size_t k = i + 1; k < n; ++k) acc -= c.at(i, k) * x.at(k, j);
      x.at(i, j) = std::move(acc);
    }
  }
  return x;
}

IntMatrix coxeter_matrix(const CartanData& cartan) {
  IntMatrix cinv = inverse_unitriangular(cartan.matrix);
  return -(cinv.transpose() * cartan.matrix);
}

IntPoly char_poly(const IntMatrix& m) {
  std::size_t n = m.size();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix b = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    b = m * b;
    Int t = b.trace();
    Int ck = -t / Int(k);
    if (ck * Int(k) != -t) throw std::logic_error("characteristic recurrence not integral");
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += ck;
  }
  return IntPoly(std::move(c));
}

Int euler_form(const CartanData& cartan, const std::vector<Int>& x, const std::vector<Int>& y) {
  std::size_t n = cartan.matrix.size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("dimension vector size mismatch");
  IntMatrix cinv = inverse_unitriangular(cartan.matrix);
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += x[i] * cinv.at(j, i) * y[j];
  }
  return acc;
}

std::vector<Int> apply_row(const std::vector<Int>& x, const IntMatrix& m) {
  std::size_t n = m.size();
  if (x.size() != n) throw std::invalid_argument("dimension vector size mismatch");
  std::vector<Int> out(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += x[i] * m.at(i, j);
  }
  return out;
}

Int tits_form(const WeightSequence& p, const std::vector<Int>& x) {
  VertexLayout v(p);
  std::size_t n = v.n0 + 1;
  if (x.size() != n) throw std::invalid_argument("Tits form vector size mismatch");
  Int q = 0;
  for (const auto& xi : x) q += xi * xi;
  for (std::size_t i = 0; i < p.t(); ++i) {
    const auto& a = v.arm[i];
    q -= x[0] * x[a.front()];
    for (std::size_t j = 0; j + 1 < a.size(); ++j) q -= x[a[j]] * x[a[j + 1]];
    q -= x[a.back()] * x[v.omega];
  }
  q -= x[v.omega] * x[n - 1];  // extension arrow
  q += Int(p.t() - 2) * x[0] * x[v.omega];
  return q;
}

std::vector<Int> wildness_witness(const WeightSequence& p) {
  VertexLayout v(p);
  std::vector<Int> x(v.n0 + 1, Int(2));
  x[v.n0] = 1;  // extension vertex
  if (tits_form(p, x) >= 0) throw std::logic_error("witness vector fails to be negative");
  return x;
}

}  // namespace coxalg
