#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/errors.hpp"
#include "support/oracles.hpp"

using namespace fuscat;

namespace {

CycPoly poly(std::vector<long> c) {
  std::vector<BigInt> out(c.begin(), c.end());
  return CycPoly(out);
}

CycNum z(std::uint64_t n, std::int64_t k = 1) { return CycNum::root_of_unity(n, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  CHECK((cyclotomic_polynomial(1) * cyclotomic_polynomial(2) * cyclotomic_polynomial(4)) == poly({-1, 0, 0, 0, 1}));
}

TEST_CASE("Phi_12 by schoolbook division of x^12 - 1") {
  std::vector<BigInt> x12(13, 0);
  x12[0] = -1;
  x12[12] = 1;
  std::vector<BigInt> den{1};
  for (std::uint64_t d : {1, 2, 3, 4, 6}) den = oracle::poly_mul(den, oracle::mobius_cyclotomic(d));
  CHECK(CycPoly(oracle::exact_divide(x12, den)) == cyclotomic_polynomial(12));
}

TEST_CASE("cyclotomic polynomials agree with the Mobius product") {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == CycPoly(oracle::mobius_cyclotomic(n)));
  }
}

TEST_CASE("field arithmetic examples") {
  CHECK((CycNum(1) + z(8)) * (CycNum(1) - z(8)) == CycNum(1) - z(8, 2));
  CHECK(CycNum(1) / z(4) == -z(4));
  const auto r = z(8) + z(8, -1);
  CHECK(r * r == CycNum(2));
  CHECK(z(4).embed(8) == z(8, 2));
  CHECK(z(3) + z(3, 2) == CycNum(-1));
  CHECK(z(6) == -z(3, 2));
}

TEST_CASE("canonical form") {
  const CycNum a(12, {BigInt(2), BigInt(4), BigInt(6), BigInt(8), BigInt(10)}, BigInt(4));
  CHECK(a.numerator().size() == euler_phi(12));
  BigInt g = a.denominator();
  for (const auto& c : a.numerator()) g = gcd(g, c);
  CHECK(g == 1);
  CHECK(CycNum(7, {}, BigInt(5)).denominator() == 1);
  CHECK(CycNum(7, {}, BigInt(5)).is_zero());
  CHECK(CycNum(Rational(3, 6), 1).to_rational() == Rational(1, 2));
  CHECK(CycNum(1).numerator().size() == 1);
  CHECK(CycNum(Rational(5), 2).numerator().size() == 1);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(CycNum(1) / CycNum(0), PreconditionError);
  CHECK_THROWS_AS((z(4) * z(4) + CycNum(1)).inverse(), PreconditionError);
}

TEST_CASE("Galois conjugation") {
  CHECK(galois_conjugate(z(5), 2) == z(5, 2));
  CHECK(galois_conjugate(CycNum(Rational(7, 3), 9), 4) == CycNum(Rational(7, 3)));
  CHECK(galois_conjugate(z(8), -1) == z(8, 7));
  CHECK_THROWS_AS(galois_conjugate(z(6), 3), PreconditionError);
}

TEST_CASE("norm examples") {
  CHECK(norm(CycNum(1) - z(6)) == 1);
  CHECK(norm(CycNum(1) - z(9)) == 3);
  CHECK(norm(CycNum(1) - z(2)) == 2);
  CHECK(norm(CycNum(Rational(2), 2)) == 2);
  CHECK(norm(CycNum(0, 1)) == 0);
  CHECK(norm(CycNum(Rational(0), 12)) == 0);
  CHECK(norm(CycNum(Rational(1, 2), 5)) == Rational(1, 16));
}

TEST_CASE("norm of 1 - zeta_n follows the prime-power rule") {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    CAPTURE(n);
    const auto p = prime_power_base(n);
    CHECK(norm(CycNum(1) - z(n)) == Rational(static_cast<long>(p ? p : 1)));
  }
}

TEST_CASE("valuation of 1 - v for v of prime power order") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t n = p;
    for (int s = 0; n <= 200; ++s, n *= p) {
      CAPTURE(n);
      const auto nrm = norm(CycNum(1) - z(n));
      CHECK(nrm == Rational(static_cast<long>(p)));
      std::uint64_t ps = 1;
      for (int i = 0; i < s; ++i) ps *= p;
      CHECK(euler_phi(n) == ps * (p - 1));
    }
  }
}

TEST_CASE("norms agree with the resultant and with complex evaluation") {
  const std::vector<CycNum> samples{CycNum(1) + z(16, 2) + z(16, -2), CycNum(3) - z(7) + z(7, 3),
                                    (CycNum(1) + z(15)) / CycNum(2), z(24, 5) - z(24, 7) + CycNum(2)};
  for (const auto& a : samples) {
    CAPTURE(a.to_string());
    CHECK(norm(a) == oracle::resultant_norm(a));
    std::complex<double> prod = 1;
    for (std::uint64_t s = 1; s <= a.conductor(); ++s)
      if (gcd_u64(s, a.conductor()) == 1) prod *= oracle::evaluate(galois_conjugate(a, static_cast<std::int64_t>(s)));
    CHECK(std::abs(prod - std::complex<double>(norm(a).get_d(), 0)) < 1e-8 * (1 + std::abs(prod)));
  }
}

TEST_CASE("is_p_unit") {
  CHECK_FALSE(is_p_unit(CycNum(1) - z(9), 3));
  CHECK(is_p_unit(CycNum(1) - z(9), 2));
  for (std::uint64_t p : {2, 3, 5, 7, 97}) CHECK(is_p_unit(CycNum(1), p));
  // 1 + sqrt 2 is a unit: the brute-force resultant gives norm 1 over Q(zeta_16)
  const auto one_plus_root2 = CycNum(1) + z(16, 2) + z(16, -2);
  CHECK(oracle::resultant_norm(one_plus_root2) == 1);
  CHECK(is_p_unit(one_plus_root2, 2));
  CHECK_THROWS_AS(is_p_unit(CycNum(Rational(1, 2), 4), 2), PreconditionError);
  CHECK_THROWS_AS(is_p_unit(CycNum(1), 4), PreconditionError);
}

TEST_CASE("q-integers") {
  for (std::uint64_t l : {2, 5, 8, 9}) {
    CHECK(q_integer(1, l) == CycNum(1));
    CHECK(q_integer(0, l).is_zero());
  }
  CHECK(q_integer(3, 8) == CycNum(1) + z(16, 2) + z(16, -2));
  CHECK(q_integer(7, 8) == CycNum(1));
  CHECK(q_integer(-3, 8) == -q_integer(3, 8));
  CHECK(q_integer(3, 8).conductor() == 16);
  for (int m = 1; m < 12; ++m) {
    const double expected = std::sin(m * std::numbers::pi / 11) / std::sin(std::numbers::pi / 11);
    CHECK(std::abs(oracle::evaluate(q_integer(m, 11)) - std::complex<double>(expected, 0)) < 1e-9);
  }
}

TEST_CASE("element grammar") {
  CHECK(parse_cyc("1 + z^2 - z^6", 16) == q_integer(3, 8));
  CHECK(parse_cyc("z^-1", 4) == -z(4));
  CHECK(parse_cyc("z^(-1)", 4) == -z(4));
  CHECK(parse_cyc("(1 + z)/2", 5) == (CycNum(1) + z(5)) / CycNum(2));
  CHECK(parse_cyc("-z^2*3", 7) == CycNum(-3) * z(7, 2));
  CHECK(parse_cyc("1/(1 - z)", 5) * (CycNum(1) - z(5)) == CycNum(1));
  CHECK(parse_cyc("12345678901234567890", 1).to_rational() == Rational("12345678901234567890"));
  CHECK_THROWS_AS(parse_cyc("1 +", 4), PreconditionError);
  CHECK_THROWS_AS(parse_cyc("z^^2", 4), PreconditionError);
  CHECK_THROWS_AS(parse_cyc("1/0", 4), PreconditionError);
  CHECK_THROWS_AS(parse_cyc("(1", 4), PreconditionError);
  CHECK_THROWS_AS(parse_cyc("y", 4), PreconditionError);
}

TEST_CASE("degenerate conductors") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(z(2) == CycNum(-1));
  CHECK(z(1) == CycNum(1));
  CHECK(norm(CycNum(Rational(-3, 4), 2)) == Rational(-3, 4));
}
