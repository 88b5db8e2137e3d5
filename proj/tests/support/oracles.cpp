#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace oracle {

namespace {

using Tuple = std::vector<std::uint32_t>;

void trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<BigInt> x_power_minus_one(std::uint64_t d) {
  std::vector<BigInt> p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  return p;
}

Tuple compose(const Tuple& a, const Tuple& b) {
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Tuple invert(const Tuple& a) {
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

std::vector<Tuple> padded(const std::vector<fuscat::Perm>& gens, std::size_t degree) {
  std::vector<Tuple> out;
  for (const auto& g : gens) {
    Tuple t(degree);
    for (std::size_t i = 0; i < degree; ++i) t[i] = i < g.degree() ? g.images()[i] : static_cast<std::uint32_t>(i);
    out.push_back(t);
  }
  return out;
}

std::size_t max_degree(const std::vector<fuscat::Perm>& gens) {
  std::size_t d = 1;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

std::vector<Tuple> closure_of(const std::vector<Tuple>& gens, std::size_t degree) {
  Tuple id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Tuple> seen{id};
  std::queue<Tuple> todo;
  todo.push(id);
  while (!todo.empty()) {
    const Tuple x = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      Tuple y = compose(x, g);
      if (seen.insert(y).second) todo.push(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

struct Classes {
  std::vector<Tuple> elements;
  std::map<Tuple, std::size_t> index;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
};

Classes classify(const std::vector<fuscat::Perm>& gens) {
  Classes c;
  const std::size_t degree = max_degree(gens);
  c.elements = closure_of(padded(gens, degree), degree);
  for (std::size_t i = 0; i < c.elements.size(); ++i) c.index[c.elements[i]] = i;
  c.class_of.assign(c.elements.size(), SIZE_MAX);
  for (std::size_t x = 0; x < c.elements.size(); ++x) {
    if (c.class_of[x] != SIZE_MAX) continue;
    const std::size_t k = c.members.size();
    c.members.emplace_back();
    for (const auto& g : c.elements) {
      const std::size_t y = c.index.at(compose(compose(invert(g), c.elements[x]), g));
      if (c.class_of[y] == SIZE_MAX) {
        c.class_of[y] = k;
        c.members[k].push_back(y);
      }
    }
  }
  return c;
}

std::uint64_t tuple_order(const Tuple& t) {
  Tuple x = t;
  std::uint64_t k = 1;
  while (true) {
    bool id = true;
    for (std::size_t i = 0; i < x.size(); ++i) id = id && x[i] == i;
    if (id) return k;
    x = compose(x, t);
    ++k;
  }
}

}  // namespace

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt resultant(const std::vector<BigInt>& f_in, const std::vector<BigInt>& g_in) {
  auto f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), m);
    return r;
  }
  const std::size_t size = m + n;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return bareiss_determinant(std::move(s));
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

std::vector<BigInt> exact_divide(std::vector<BigInt> num, const std::vector<BigInt>& den_in) {
  auto den = den_in;
  trim(den);
  trim(num);
  if (den.empty()) throw std::domain_error("division by the zero polynomial");
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::domain_error("nonzero remainder");
    return {};
  }
  std::vector<BigInt> q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw std::domain_error("non-integral quotient");
    q[k] = lead / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::domain_error("nonzero remainder");
  return q;
}

std::vector<BigInt> mobius_cyclotomic(std::uint64_t n) {
  std::vector<BigInt> top{1}, bottom{1};
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) top = poly_mul(top, x_power_minus_one(d));
    if (mu == -1) bottom = poly_mul(bottom, x_power_minus_one(d));
  }
  return exact_divide(top, bottom);
}

Rational resultant_norm(const fuscat::CycNum& a) {
  const auto phi = mobius_cyclotomic(a.conductor());
  const BigInt res = resultant(phi, a.numerator());
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), phi.size() - 1);
  Rational out(res, den);
  out.canonicalize();
  return out;
}

std::complex<double> evaluate(const fuscat::CycNum& a) {
  const double n = static_cast<double>(a.conductor());
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < a.numerator().size(); ++k)
    s += a.numerator()[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
  return s / a.denominator().get_d();
}

std::complex<double> numeric_qdim(const fuscat::RootSystem& rs, int l, const fuscat::Weight& lambda, int s) {
  const double theta = std::numbers::pi * s / l;
  auto qint = [&](int m) { return std::sin(m * theta) / std::sin(theta); };
  double d = 1;
  for (const auto& alpha : rs.positive_roots()) {
    int shifted = 0, height = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      shifted += alpha[j] * (lambda.coords[j] + 1);
      height += alpha[j];
    }
    d *= qint(shifted) / qint(height);
  }
  return d;
}

std::vector<std::vector<std::uint32_t>> closure(const std::vector<fuscat::Perm>& gens) {
  const std::size_t degree = max_degree(gens);
  return closure_of(padded(gens, degree), degree);
}

std::vector<std::size_t> class_sizes(const std::vector<fuscat::Perm>& gens) {
  const auto c = classify(gens);
  std::vector<std::size_t> sizes;
  for (const auto& m : c.members) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::uint64_t> numeric_char_degrees(const std::vector<fuscat::Perm>& gens) {
  const auto c = classify(gens);
  const std::size_t r = c.members.size();
  const std::size_t order = c.elements.size();
  // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<Eigen::MatrixXd> cls(r, Eigen::MatrixXd::Zero(r, r));
  for (std::size_t k = 0; k < r; ++k) {
    const Tuple& z = c.elements[c.members[k].front()];
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t y = c.index.at(compose(invert(c.elements[x]), z));
      cls[c.class_of[x]](c.class_of[y], k) += 1;
    }
  }
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(r, r);
  for (const auto& m : cls) mix += coef(rng) * m;
  Eigen::EigenSolver<Eigen::MatrixXd> es(mix);
  const auto vecs = es.eigenvectors();

  const std::size_t id_class = c.class_of[0];  // element 0 is the identity
  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inv_class[k] = c.class_of[c.index.at(invert(c.elements[c.members[k].front()]))];

  std::vector<std::uint64_t> degrees;
  for (std::size_t e = 0; e < r; ++e) {
    Eigen::VectorXcd v = vecs.col(static_cast<Eigen::Index>(e));
    v /= v(static_cast<Eigen::Index>(id_class));
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s += v(static_cast<Eigen::Index>(k)) * v(static_cast<Eigen::Index>(inv_class[k])) /
           static_cast<double>(c.members[k].size());
    const double d = std::sqrt(static_cast<double>(order) / s.real());
    const double rounded = std::round(d);
    if (std::abs(d - rounded) > 1e-6 || std::abs(s.imag()) > 1e-6) throw std::runtime_error("numeric degree is not integral");
    degrees.push_back(static_cast<std::uint64_t>(rounded));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

SylowFacts sylow_facts(const std::vector<fuscat::Perm>& gens, std::uint64_t p) {
  const auto elements = closure(gens);
  std::set<Tuple> s;
  for (const auto& x : elements) {
    std::uint64_t o = tuple_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) s.insert(x);
  }
  SylowFacts f;
  f.p_elements = s.size();
  f.is_subgroup = true;
  f.abelian = true;
  for (const auto& a : s)
    for (const auto& b : s) {
      if (!s.count(compose(a, b))) f.is_subgroup = false;
      if (compose(a, b) != compose(b, a)) f.abelian = false;
    }
  return f;
}

std::vector<std::size_t> double_coset_sizes(const std::vector<fuscat::Perm>& g_gens,
                                            const std::vector<fuscat::Perm>& h_gens) {
  std::size_t degree = max_degree(g_gens);
  degree = std::max(degree, max_degree(h_gens));
  const auto g = closure_of(padded(g_gens, degree), degree);
  const auto h = closure_of(padded(h_gens, degree), degree);
  std::set<Tuple> covered;
  std::vector<std::size_t> sizes;
  for (const auto& x : g) {
    if (covered.count(x)) continue;
    std::set<Tuple> coset;
    for (const auto& a : h)
      for (const auto& b : h) coset.insert(compose(compose(a, x), b));
    sizes.push_back(coset.size());
    covered.insert(coset.begin(), coset.end());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle
