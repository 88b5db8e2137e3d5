#include "fuscat/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

// Phi_n without its leading term, as sparse (exponent, coefficient) pairs.
struct SparseCyclotomic {
  std::size_t degree = 0;
  std::vector<std::pair<std::size_t, BigInt>> tail;
};

std::mutex cache_mutex;
std::map<std::uint64_t, std::shared_ptr<const CycPoly>> poly_cache;
std::map<std::uint64_t, std::shared_ptr<const SparseCyclotomic>> sparse_cache;

// Exact division by a monic polynomial; throws if the remainder is nonzero.
std::vector<BigInt> divide_exact_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("divide_exact_monic: degree too small");
  std::vector<BigInt> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw InternalError("divide_exact_monic: nonzero remainder");
  return quot;
}

std::shared_ptr<const SparseCyclotomic> sparse_cyclotomic(std::uint64_t n) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = sparse_cache.find(n); it != sparse_cache.end()) return it->second;
  }
  const CycPoly phi = cyclotomic_polynomial(n);
  auto sparse = std::make_shared<SparseCyclotomic>();
  sparse->degree = static_cast<std::size_t>(phi.degree());
  for (std::size_t j = 0; j < sparse->degree; ++j)
    if (phi.coeff(j) != 0) sparse->tail.emplace_back(j, phi.coeff(j));
  std::lock_guard lock(cache_mutex);
  return sparse_cache.emplace(n, std::move(sparse)).first->second;
}

// Reduces poly modulo Phi_n in place; afterwards poly.size() == phi(n).
void reduce_mod_cyclotomic(std::vector<BigInt>& poly, std::uint64_t n) {
  const auto phi = sparse_cyclotomic(n);
  const std::size_t deg = phi->degree;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const BigInt c = poly[i];
    for (const auto& [j, a] : phi->tail) poly[i - deg + j] -= c * a;
  }
  poly.resize(deg);
}

std::vector<BigInt> multiply_polys(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::uint64_t mod_exponent(std::int64_t k, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((k % sn) + sn) % sn);
}

std::vector<std::uint64_t> unit_residues(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= n; ++s)
    if (std::gcd(s, n) == 1) out.push_back(s);
  return out;
}

// Numerator of sigma_s(a) (denominator unchanged), assuming gcd(s, n) = 1.
std::vector<BigInt> conjugate_numerator(const CycNum& a, std::uint64_t s) {
  const std::uint64_t n = a.conductor();
  std::vector<BigInt> poly(n);
  const auto& num = a.numerator();
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] != 0) poly[(i * s) % n] += num[i];
  reduce_mod_cyclotomic(poly, n);
  return poly;
}

// Balanced product tree of elements of Z[zeta_n] given as reduced numerators.
std::vector<BigInt> product_tree(std::vector<std::vector<BigInt>> factors, std::uint64_t n) {
  if (factors.empty()) {
    std::vector<BigInt> one(euler_phi(n));
    one[0] = 1;
    return one;
  }
  while (factors.size() > 1) {
    std::vector<std::vector<BigInt>> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
      auto prod = multiply_polys(factors[i], factors[i + 1]);
      reduce_mod_cyclotomic(prod, n);
      next.push_back(std::move(prod));
    }
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

BigInt rational_part_or_throw(const std::vector<BigInt>& poly, const char* where) {
  for (std::size_t i = 1; i < poly.size(); ++i)
    if (poly[i] != 0) throw InternalError(std::string(where) + ": conjugate product is not rational");
  return poly.empty() ? BigInt(0) : poly[0];
}

__extension__ using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd P < 2^63.
struct Montgomery {
  std::uint64_t P, neg_inv, r2;
  explicit Montgomery(std::uint64_t p) : P(p), neg_inv(1) {
    for (int i = 0; i < 6; ++i) neg_inv *= 2 - P * neg_inv;
    neg_inv = ~neg_inv + 1;
    const std::uint64_t r1 = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % P);
    r2 = mulmod(r1, r1, P);
  }
  std::uint64_t reduce(u128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv;
    const std::uint64_t u = static_cast<std::uint64_t>((t + static_cast<u128>(m) * P) >> 64);
    return u >= P ? u - P : u;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<u128>(a) * b); }
  std::uint64_t to(std::uint64_t a) const { return mul(a, r2); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }
};

// Element of order exactly n in F_P^*, assuming n | P - 1.
std::uint64_t root_of_order(std::uint64_t n, std::uint64_t P, const std::vector<std::uint64_t>& n_primes) {
  for (std::uint64_t x = 2;; ++x) {
    const std::uint64_t w = powmod(x, (P - 1) / n, P);
    bool exact = true;
    for (auto q : n_primes) exact = exact && powmod(w, n / q, P) != 1;
    if (exact) return w;
  }
}

// Product of f(zeta_n^s) over s coprime to n. Each P = 1 (mod n) splits Phi_n
// into linear factors, so the product is an exact evaluation mod P; the
// residues are glued by CRT until the modulus exceeds twice a bound on |N|.
BigInt integral_norm(const std::vector<BigInt>& f, std::uint64_t n) {
  const auto n_primes = prime_divisors(n);
  const auto units = unit_residues(n);

  // |f(zeta^s)| <= |computed| + slack, where slack dominates the rounding error.
  double l1 = 0;
  for (const auto& c : f) l1 += std::fabs(c.get_d());
  const double slack = 1e-9 * (l1 + 1);
  const double two_pi = 2 * std::acos(-1.0);
  double log2_bound = 0;
  for (auto s : units) {
    std::complex<double> v = 0;
    const std::complex<double> z = std::polar(1.0, two_pi * static_cast<double>(s) / static_cast<double>(n));
    for (std::size_t i = f.size(); i-- > 0;) v = v * z + f[i].get_d();
    log2_bound += std::log2(std::abs(v) + slack);
  }
  const auto bound_bits = static_cast<std::size_t>(std::max(0.0, std::ceil(log2_bound))) + 2;

  BigInt x = 0, modulus = 1;
  std::uint64_t k = ((std::uint64_t{1} << 62) - 1) / n;
  std::vector<std::uint64_t> coeffs(f.size());
  while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bound_bits) {
    for (; !is_prime(k * n + 1); --k) {}
    const std::uint64_t P = k-- * n + 1;
    for (std::size_t i = 0; i < f.size(); ++i) coeffs[i] = mpz_fdiv_ui(f[i].get_mpz_t(), P);
    const Montgomery mont(P);
    for (auto& c : coeffs) c = mont.to(c);
    const std::uint64_t w = root_of_order(n, P, n_primes);
    std::uint64_t r = mont.to(1), z = mont.to(1), prev = 0;
    for (auto s : units) {
      z = mont.mul(z, mont.to(powmod(w, s - prev, P)));
      prev = s;
      std::uint64_t v = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        v = mont.mul(v, z) + coeffs[i];
        if (v >= P) v -= P;
      }
      r = mont.mul(r, v);
    }
    r = mont.from(r);
    // x += modulus * ((r - x) / modulus mod P)
    const std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), P);
    const std::uint64_t mm = mpz_fdiv_ui(modulus.get_mpz_t(), P);
    const std::uint64_t t = mulmod((r + P - xm) % P, powmod(mm, P - 2, P), P);
    x += modulus * BigInt(std::to_string(t));
    modulus *= BigInt(std::to_string(P));
  }
  if (2 * x > modulus) x -= modulus;
  return x;
}

}  // namespace

// ---------------------------------------------------------------- CycPoly

CycPoly::CycPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void CycPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& CycPoly::coeff(std::size_t i) const {
  static const BigInt zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigInt CycPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  return CycPoly(multiply_polys(a.coeffs_, b.coeffs_));
}

std::string CycPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CycPoly cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial: n must be >= 1");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = poly_cache.find(n); it != poly_cache.end()) return *it->second;
  }
  std::vector<BigInt> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact_monic(std::move(num), cyclotomic_polynomial(d).coeffs());
  }
  auto phi = std::make_shared<const CycPoly>(std::move(num));
  std::lock_guard lock(cache_mutex);
  return *poly_cache.emplace(n, std::move(phi)).first->second;
}

// ---------------------------------------------------------------- CycNum

CycNum::CycNum() : numerator_(1) {}

CycNum::CycNum(long value) : numerator_{BigInt(value)} {}

namespace {

std::uint64_t checked_conductor(std::uint64_t n) {
  if (n == 0) throw PreconditionError("CycNum: conductor must be >= 1");
  return n;
}

}  // namespace

CycNum::CycNum(const Rational& value, std::uint64_t conductor)
    : conductor_(checked_conductor(conductor)), numerator_(euler_phi(conductor)), denominator_(value.get_den()) {
  numerator_[0] = value.get_num();
  canonicalize();
}

CycNum::CycNum(std::uint64_t conductor, std::vector<BigInt> numerator, BigInt denominator)
    : conductor_(checked_conductor(conductor)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) throw PreconditionError("CycNum: zero denominator");
  if (numerator_.size() > conductor_) {
    // fold exponents >= n using zeta^n = 1
    for (std::size_t i = conductor_; i < numerator_.size(); ++i) numerator_[i % conductor_] += numerator_[i];
    numerator_.resize(conductor_);
  }
  reduce_mod_cyclotomic(numerator_, conductor_);
  canonicalize();
}

CycNum CycNum::root_of_unity(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw PreconditionError("root_of_unity: n must be >= 1");
  std::vector<BigInt> poly(n);
  poly[mod_exponent(k, n)] = 1;
  return CycNum(n, std::move(poly));
}

void CycNum::canonicalize() {
  if (numerator_.size() < euler_phi(conductor_)) numerator_.resize(euler_phi(conductor_));
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& c : numerator_) c = -c;
  }
  BigInt g = denominator_;
  for (const auto& c : numerator_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    denominator_ = 1;
    return;
  }
  if (g != 1) {
    denominator_ /= g;
    for (auto& c : numerator_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

bool CycNum::is_zero() const {
  for (const auto& c : numerator_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < numerator_.size(); ++i)
    if (numerator_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw PreconditionError("to_rational: element is not rational");
  Rational q(numerator_[0], denominator_);
  q.canonicalize();
  return q;
}

CycNum CycNum::embed(std::uint64_t m) const {
  if (m == 0 || m % conductor_ != 0)
    throw PreconditionError("embed: target conductor must be a multiple of " + std::to_string(conductor_));
  if (m == conductor_) return *this;
  const std::uint64_t step = m / conductor_;
  std::vector<BigInt> poly(m);
  for (std::size_t i = 0; i < numerator_.size(); ++i) poly[i * step] = numerator_[i];
  return CycNum(m, std::move(poly), denominator_);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.numerator_) c = -c;
  return out;
}

namespace {

template <typename Combine>
CycNum add_like(const CycNum& a, const CycNum& b, Combine combine) {
  const std::uint64_t m = std::lcm(a.conductor(), b.conductor());
  const CycNum ea = a.embed(m);
  const CycNum eb = b.embed(m);
  std::vector<BigInt> num(ea.numerator().size());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = combine(ea.numerator()[i] * eb.denominator(), eb.numerator()[i] * ea.denominator());
  return CycNum(m, std::move(num), ea.denominator() * eb.denominator());
}

}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
  return add_like(a, b, [](const BigInt& x, const BigInt& y) -> BigInt { return x + y; });
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  return add_like(a, b, [](const BigInt& x, const BigInt& y) -> BigInt { return x - y; });
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const std::uint64_t m = std::lcm(a.conductor(), b.conductor());
  const CycNum ea = a.embed(m);
  const CycNum eb = b.embed(m);
  return CycNum(m, multiply_polys(ea.numerator(), eb.numerator()), ea.denominator() * eb.denominator());
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(zeta_" + std::to_string(conductor_) + ")");
  std::vector<std::vector<BigInt>> others;
  for (auto s : unit_residues(conductor_))
    if (s != 1) others.push_back(conjugate_numerator(*this, s % conductor_));
  std::vector<BigInt> rest = product_tree(std::move(others), conductor_);
  std::vector<BigInt> full = multiply_polys(numerator_, rest);
  reduce_mod_cyclotomic(full, conductor_);
  const BigInt norm_num = rational_part_or_throw(full, "inverse");
  for (auto& c : rest) c *= denominator_;
  return CycNum(conductor_, std::move(rest), norm_num);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  const std::uint64_t m = std::lcm(a.conductor(), b.conductor());
  const CycNum ea = a.embed(m);
  const CycNum eb = b.embed(m);
  return ea.denominator_ == eb.denominator_ && ea.numerator_ == eb.numerator_;
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(Rational(1), conductor_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < numerator_.size(); ++i) {
    const BigInt& c = numerator_[i];
    if (c == 0) continue;
    ++terms;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  if (denominator_ == 1) return os.str();
  if (terms > 1) return "(" + os.str() + ")/" + denominator_.get_str();
  return os.str() + "/" + denominator_.get_str();
}

// ---------------------------------------------------------------- free ops

CycNum galois_conjugate(const CycNum& a, std::int64_t s) {
  const std::uint64_t n = a.conductor();
  const std::uint64_t r = mod_exponent(s, n);
  if (std::gcd(r, n) != 1 && n != 1)
    throw PreconditionError("galois_conjugate: s = " + std::to_string(s) + " is not coprime to conductor " +
                            std::to_string(n));
  return CycNum(n, conjugate_numerator(a, r), a.denominator());
}

Rational norm(const CycNum& a) {
  if (a.is_zero()) return Rational(0);
  const std::uint64_t n = a.conductor();
  const BigInt num = integral_norm(a.numerator(), n);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), euler_phi(n));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_p_unit(const CycNum& a, std::uint64_t p) {
  if (!a.is_integral()) throw PreconditionError("is_p_unit: input must be an algebraic integer (denominator 1)");
  if (!is_prime(p)) throw PreconditionError("is_p_unit: " + std::to_string(p) + " is not prime");
  return !divides(p, norm(a).get_num());
}

CycNum q_integer(std::int64_t m, std::uint64_t l, std::int64_t s) {
  if (l < 2) throw PreconditionError("q_integer: l must be >= 2");
  const std::uint64_t n = 2 * l;
  if (std::gcd(mod_exponent(s, n), n) != 1)
    throw PreconditionError("q_integer: exponent s must be coprime to 2l");
  const bool negative = m < 0;
  const std::int64_t count = negative ? -m : m;
  std::vector<BigInt> poly(n);
  for (std::int64_t k = 0; k < count; ++k) poly[mod_exponent(s * (count - 1 - 2 * k), n)] += negative ? -1 : 1;
  return CycNum(n, std::move(poly));
}

// ---------------------------------------------------------------- parser

namespace {

class CycParser {
public:
  CycParser(std::string_view text, std::uint64_t n) : text_(text), n_(n) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                            ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycNum expr() {
    CycNum v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  CycNum term() {
    CycNum v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }

  CycNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  CycNum power() {
    CycNum base = atom();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool neg = accept('-');
    skip_ws();
    const BigInt e = integer();
    if (paren && !accept(')')) fail("expected ')'");
    if (abs(e) > 1000000) fail("exponent out of range");
    const auto ev = static_cast<std::int64_t>(e.get_si());
    return base.pow(neg ? -ev : ev);
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  CycNum atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CycNum v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      return CycNum::root_of_unity(n_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CycNum(Rational(integer()), n_);
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::uint64_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_cyc(std::string_view text, std::uint64_t n) {
  if (n == 0) throw PreconditionError("parse_cyc: conductor must be >= 1");
  return CycParser(text, n).parse();
}

}  // namespace fuscat
