// Irreducible character degrees from central characters over a prime field.
//
// For classes C_1..C_r with structure constants a_ijk, the central characters
// omega_chi(C_k) = |C_k| chi(g_k) / chi(1) are exactly the common eigenvectors
// (normalized at the identity class) of the class matrices (M_i)_jk = a_ijk.
// Working modulo a prime q = 1 (mod exp G) all of them are defined over F_q
// and the class algebra stays semisimple, so repeated eigenspace splitting
// ends in r lines. The degree then follows from
//   chi(1)^2 = |G| / sum_k omega(C_k) omega(C_k^-1) / |C_k|.

#include <algorithm>
#include <cmath>

#include "fuscat/errors.hpp"
#include "fuscat/finitegroup.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

namespace {

constexpr std::size_t kMaxClasses = 400;
constexpr std::uint64_t kPrimeSearchBound = 1ULL << 31;

class Fq {
public:
  explicit Fq(std::uint64_t q) : q_(q) {}
  std::uint64_t q() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (a %= q_; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % q_ == 0) throw InternalError("inverse of zero in F_q");
    return pow(a, q_ - 2);
  }

private:
  std::uint64_t q_;
};

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Row-reduces in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& rows, const Fq& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint64_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the null space of a square matrix.
Mat null_space(Mat a, const Fq& f) {
  const std::size_t n = a.size();
  const auto pivots = rref(a, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficient i of x^i.
Vec char_poly(Mat h, const Fq& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const std::uint64_t inv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const std::uint64_t u = f.mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t m = 0; m < n; ++m) {
    Vec next(m + 2, 0);
    for (std::size_t d = 0; d < p[m].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[m][d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], p[m][d]));
    }
    std::uint64_t sub_prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      sub_prod = f.mul(sub_prod, h[i + 1][i]);
      const std::uint64_t c = f.mul(h[i][m], sub_prod);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = f.sub(next[d], f.mul(c, p[i][d]));
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots_by_scan(const Vec& poly, const Fq& f) {
  std::vector<std::uint64_t> roots;
  const std::size_t deg = poly.size() - 1;
  for (std::uint64_t a = 0; a < f.q() && roots.size() < deg; ++a) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, a), poly[i]);
    if (acc == 0) roots.push_back(a);
  }
  return roots;
}

struct StructureConstants {
  std::size_t r = 0;
  std::vector<std::uint32_t> a;  // a[(i * r + j) * r + k]
  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const { return a[(i * r + j) * r + k]; }
};

StructureConstants structure_constants(const PermGroup& g) {
  StructureConstants sc;
  sc.r = g.classes().size();
  sc.a.assign(sc.r * sc.r * sc.r, 0);
  std::vector<std::size_t> inverse_of(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) inverse_of[x] = g.inverse(x);
  for (std::size_t k = 0; k < sc.r; ++k) {
    const std::size_t z = g.classes()[k].representative;
    // count x in C_i with y = x^-1 z in C_j
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t y = g.product(inverse_of[x], z);
      ++sc.a[(g.class_of(x) * sc.r + g.class_of(y)) * sc.r + k];
    }
  }
  return sc;
}

}  // namespace

std::uint64_t class_field_prime(const PermGroup& g) {
  const std::uint64_t e = g.exponent();
  const double lower = 2.0 * std::sqrt(static_cast<double>(g.order()));
  for (std::uint64_t q = e + 1; q < kPrimeSearchBound; q += e)
    if (static_cast<double>(q) > lower && is_prime(q)) return q;
  throw PreconditionError("no prime q = 1 mod " + std::to_string(e) + " below the search bound");
}

DegreeVector char_degrees(const PermGroup& g) {
  const std::size_t r = g.classes().size();
  if (r > kMaxClasses) {
    if (g.is_abelian()) return DegreeVector{std::vector<std::uint64_t>(r, 1)};
    throw PreconditionError("too many conjugacy classes (" + std::to_string(r) + ") for the class-matrix method");
  }
  const Fq f(class_field_prime(g));
  const auto sc = structure_constants(g);

  // each space is an RREF basis (rows) of a common invariant subspace of F_q^r
  std::vector<Mat> spaces;
  {
    Mat full(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t cls = 1; cls < r; ++cls) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    std::vector<Mat> refined;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      Mat tmp = basis;
      const auto pivots = rref(tmp, f);
      // restricted operator: column t holds the coordinates of M_cls b_t
      Mat x(d, Vec(d, 0));
      for (std::size_t t = 0; t < d; ++t) {
        Vec image(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (basis[t][k] != 0) acc = f.add(acc, f.mul(sc.at(cls, j, k) % f.q(), basis[t][k]));
          image[j] = acc;
        }
        for (std::size_t s = 0; s < d; ++s) x[s][t] = image[pivots[s]];
      }
      const auto eigenvalues = roots_by_scan(char_poly(x, f), f);
      std::size_t total = 0;
      for (auto lambda : eigenvalues) {
        Mat shifted = x;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        Mat eig;
        for (const auto& y : null_space(shifted, f)) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            if (y[t] != 0)
              for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(y[t], basis[t][k]));
          eig.push_back(std::move(v));
        }
        rref(eig, f);
        total += eig.size();
        refined.push_back(std::move(eig));
      }
      if (total != d) throw InternalError("class matrix is not diagonalizable over F_" + std::to_string(f.q()));
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r) throw InternalError("eigenspaces of the class matrices did not split into lines");

  const std::uint64_t order = g.order();
  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  DegreeVector out;
  for (const auto& space : spaces) {
    Vec v = space.front();
    if (v[0] == 0) throw InternalError("central character vanishes at the identity class");
    const std::uint64_t scale = f.inv(v[0]);
    for (auto& c : v) c = f.mul(c, scale);
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t term = f.mul(v[k], v[g.inverse_class(k)]);
      s = f.add(s, f.mul(term, f.inv(g.classes()[k].size() % f.q())));
    }
    const std::uint64_t d2 = f.mul(order % f.q(), f.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree && d * d <= order; ++d)
      if (d * d % f.q() == d2) {
        degree = d;
        break;
      }
    if (degree == 0 || order % degree != 0)
      throw InternalError("could not lift a character degree from F_" + std::to_string(f.q()));
    out.degrees.push_back(degree);
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  std::uint64_t sum = 0;
  for (auto d : out.degrees) sum += d * d;
  if (sum != order) throw InternalError("sum of squared degrees differs from |G|");
  return out;
}

}  // namespace fuscat
