#include "fuscat/amplitude.hpp"

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

RationalMatrix zeros(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, std::vector<Rational>(cols)); }

RationalMatrix identity(std::size_t n) {
  auto out = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  auto out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t ar = a.size(), ac = a.front().size(), br = b.size(), bc = b.front().size();
  auto out = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return out;
}

Rational trace(const RationalMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Gauss-Jordan; returns an empty matrix when a is singular.
RationalMatrix invert(RationalMatrix a) {
  const std::size_t n = a.size();
  auto inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational pivot = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[c][j];
        inv[r][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

// Returns s if a == s * Id, throws otherwise.
Rational scalar_of(const RationalMatrix& a, const char* what) {
  const Rational s = a[0][0];
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? s : Rational(0))) throw InternalError(std::string(what) + " is not a scalar operator");
  return s;
}

}  // namespace

Tensor3::Tensor3(std::size_t dim, std::vector<Rational> structure, std::vector<Rational> gram)
    : dim_(dim), m_(std::move(structure)), b_(std::move(gram)) {
  if (dim_ == 0 || m_.size() != dim_ * dim_ * dim_ || b_.size() != dim_ * dim_)
    throw PreconditionError("Tensor3: expected dim^3 structure constants and a dim x dim form");
  auto gram_matrix = zeros(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b(i, j) != b(j, i)) throw PreconditionError("Tensor3: the form b is not symmetric");
      gram_matrix[i][j] = b(i, j);
    }
  b_inv_ = invert(std::move(gram_matrix));
  if (b_inv_.empty()) throw PreconditionError("Tensor3: the form b is degenerate");
}

Tensor3 Tensor3::scaled(const Rational& m_factor, const Rational& b_factor) const {
  if (b_factor == 0) throw PreconditionError("Tensor3: cannot scale b by zero");
  std::vector<Rational> m = m_, b = b_;
  for (auto& x : m) x *= m_factor;
  for (auto& x : b) x *= b_factor;
  return Tensor3(dim_, std::move(m), std::move(b));
}

bool Tensor3::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (m(i, j, k) != -m(j, i, k)) return false;
  return true;
}

bool Tensor3::is_invariant() const {
  auto lowered = [&](std::size_t i, std::size_t j, std::size_t k) {
    Rational s = 0;
    for (std::size_t l = 0; l < dim_; ++l) s += m(i, j, l) * b(l, k);
    return s;
  };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational v = lowered(i, j, k);
        if (v != lowered(j, k, i) || v != lowered(k, i, j)) return false;
      }
  return true;
}

RationalMatrix Tensor3::product_map() const {
  auto out = zeros(dim_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out[k][i * dim_ + j] = m(i, j, k);
  return out;
}

RationalMatrix Tensor3::coproduct_map() const {
  // m_*(e_k) = sum_{a,c} g^{ai} g^{cj} b(m(e_i, e_j), e_k) e_a (x) e_c
  const std::size_t n = dim_;
  std::vector<Rational> lowered(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m(i, j, l) * b(l, k);
        lowered[(i * n + j) * n + k] = s;
      }
  auto out = zeros(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (b_inv_[a][i] == 0) continue;
          for (std::size_t j = 0; j < n; ++j) s += b_inv_[a][i] * b_inv_[c][j] * lowered[(i * n + j) * n + k];
        }
        out[a * n + c][k] = s;
      }
  return out;
}

Tensor3 sl2_adjoint() {
  // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  constexpr std::size_t e = 0, f = 1, h = 2, n = 3;
  std::vector<Rational> m(n * n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    m[(i * n + j) * n + k] = v;
    m[(j * n + i) * n + k] = -v;
  };
  set(e, f, h, 1);
  set(h, e, e, 2);
  set(h, f, f, -2);
  // Killing form kappa(x, y) = Tr(ad x ad y), (ad e_i)_{kj} = m_{ijk}
  std::vector<Rational> kappa(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational t = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t += m[(x * n + k) * n + j] * m[(y * n + j) * n + k];
      kappa[x * n + y] = t;
    }
  return Tensor3(n, std::move(m), std::move(kappa));
}

Rational amplitude_T2(const Tensor3& t) { return trace(multiply(t.product_map(), t.coproduct_map())); }

Rational amplitude_T4(const Tensor3& t) {
  const auto m = t.product_map();
  const auto ms = t.coproduct_map();
  const auto id = identity(t.dim());
  // X -> X(x)X -> X(x)X(x)X -> X(x)X -> X
  const auto path = multiply(m, multiply(kron(id, m), multiply(kron(ms, id), ms)));
  return trace(path);
}

Rational amplitude_T4_normalized(const Tensor3& t) {
  const Rational t2 = amplitude_T2(t);
  if (t2 == 0) throw PreconditionError("amplitude_T4_normalized: A(T_2) = 0, cannot normalize");
  const Rational dim(static_cast<long>(t.dim()));
  return amplitude_T4(t) * dim * dim / (t2 * t2);
}

CasimirIdentity casimir_identity(const Tensor3& t) {
  const std::size_t n = t.dim();
  std::vector<RationalMatrix> ad(n, zeros(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad[i][k][j] = t.m(i, j, k);
  const auto& g = t.gram_inverse();
  auto cas = zeros(n, n);
  auto quartic = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      if (g[i][a] == 0) continue;
      const auto xi_xa = multiply(ad[i], ad[a]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cas[r][c] += g[i][a] * xi_xa[r][c];
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b) {
          if (g[j][b] == 0) continue;
          const auto word = multiply(multiply(ad[i], ad[j]), multiply(ad[a], ad[b]));
          const Rational w = g[i][a] * g[j][b];
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) quartic[r][c] += w * word[r][c];
        }
    }
  CasimirIdentity out;
  out.casimir = scalar_of(cas, "Casimir element");
  if (out.casimir == 0) throw PreconditionError("casimir_identity: Casimir acts by zero");
  out.operator_coeff = scalar_of(quartic, "quartic Casimir word") / (out.casimir * out.casimir);
  out.traced_coeff = trace(quartic) / (out.casimir * out.casimir);
  return out;
}

Rational tetrahedron_from_loop(const Rational& q3) {
  if (q3 == 1) throw PreconditionError("tetrahedron_from_loop: loop value 1 makes the denominator vanish");
  return q3 * (q3 - 2) / (q3 - 1);
}

QuantumT4 quantum_T4(std::uint64_t l, std::uint64_t pmax) {
  QuantumT4 out{l, q_integer(3, l), CycNum(), CycNum(), Rational(0), BigInt(0), {}};
  const CycNum one(Rational(1), out.q3.conductor());
  const CycNum denom = out.q3 - one;
  if (denom.is_zero())
    throw PreconditionError("quantum_T4: [3]_q = 1 at l = " + std::to_string(l) + ", the amplitude is undefined");
  out.value = out.q3 * (out.q3 - CycNum(Rational(2), out.q3.conductor())) / denom;
  out.value_squared = out.value * out.value;
  out.value_norm = norm(out.value);
  out.denominator_norm = norm(CycNum(Rational(out.value.denominator()), out.value.conductor())).get_num();
  for (auto p : primes_up_to(pmax))
    out.certificates.push_back(DenominatorCertificate{p, divides(p, out.denominator_norm)});
  return out;
}

}  // namespace fuscat
