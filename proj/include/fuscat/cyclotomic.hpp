#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_n).
 *
 * An element is stored as an integer coefficient vector over the power basis
 * 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
 * polynomial, together with a positive common denominator. Every value is
 * kept in canonical form: gcd(coefficients, denominator) = 1 and zero has
 * denominator 1. Binary operations embed both operands into the lcm
 * conductor.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuscat/numtheory.hpp"

namespace fuscat {

/// Univariate integer polynomial, coefficient i multiplies x^i.
class CycPoly {
public:
  CycPoly() = default;
  explicit CycPoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const;

  BigInt evaluate(const BigInt& x) const;

  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  friend bool operator==(const CycPoly& a, const CycPoly& b) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d by exact division.
CycPoly cyclotomic_polynomial(std::uint64_t n);

class CycNum {
public:
  /// Zero at conductor 1.
  CycNum();
  /// The integer value at conductor 1.
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& value, std::uint64_t conductor = 1);
  /// Builds and canonicalizes from a power-basis numerator of any length
  /// (reduced modulo Phi_n first).
  CycNum(std::uint64_t conductor, std::vector<BigInt> numerator, BigInt denominator = 1);

  /// zeta_n^k for any integer k.
  static CycNum root_of_unity(std::uint64_t n, std::int64_t k = 1);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<BigInt>& numerator() const { return numerator_; }
  const BigInt& denominator() const { return denominator_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const { return denominator_ == 1; }
  /// Throws PreconditionError if not rational.
  Rational to_rational() const;

  /// The same element represented at conductor m (conductor() must divide m).
  CycNum embed(std::uint64_t m) const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  /// Throws PreconditionError on division by zero.
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  CycNum& operator/=(const CycNum& b) { return *this = *this / b; }

  /// Equality of field elements; compares at the lcm conductor.
  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum pow(std::int64_t e) const;
  CycNum inverse() const;

  /// Human-readable form, e.g. "1 + z^2 - z^6" or "(1 + z)/2".
  std::string to_string() const;

private:
  void canonicalize();

  std::uint64_t conductor_ = 1;
  std::vector<BigInt> numerator_;
  BigInt denominator_ = 1;
};

/// zeta_n -> zeta_n^s. Throws PreconditionError unless gcd(s, n) = 1.
CycNum galois_conjugate(const CycNum& a, std::int64_t s);

/// Product of all Galois conjugates of a over Q(zeta_n), n = conductor.
Rational norm(const CycNum& a);

/// True iff p does not divide norm(a). Requires a to be an algebraic integer
/// and p prime.
bool is_p_unit(const CycNum& a, std::uint64_t p);

/// [m]_q = q^(m-1) + q^(m-3) + ... + q^(1-m) with q = zeta_{2l}^s.
/// Negative m gives -[|m|]_q.
CycNum q_integer(std::int64_t m, std::uint64_t l, std::int64_t s = 1);

/// Parses an element of Q(zeta_n). Grammar: integers, `z` (zeta_n),
/// binary + - * /, unary minus, `^` with an integer exponent, parentheses.
CycNum parse_cyc(std::string_view text, std::uint64_t n);

}  // namespace fuscat
