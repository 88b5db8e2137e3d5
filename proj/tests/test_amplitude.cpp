#include <doctest.h>

#include "fuscat/amplitude.hpp"
#include "fuscat/errors.hpp"
#include "support/oracles.hpp"

using namespace fuscat;

namespace {

using M3 = std::array<std::array<Rational, 3>, 3>;

M3 mul(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

M3 add_scaled(M3 a, const M3& b, const Rational& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] += s * b[i][j];
  return a;
}

M3 identity3() {
  M3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

TEST_CASE("zero product gives zero theta") {
  std::vector<Rational> m(27), b(9);
  for (int i = 0; i < 3; ++i) b[i * 3 + i] = 1;
  const Tensor3 t(3, m, b);
  CHECK(amplitude_T2(t) == 0);
  CHECK_THROWS_AS(amplitude_T4_normalized(t), PreconditionError);
}

TEST_CASE("invalid forms are rejected") {
  std::vector<Rational> m(27), b(9);
  CHECK_THROWS_AS(Tensor3(3, m, b), PreconditionError);  // degenerate
  b = {1, 2, 0, 0, 1, 0, 0, 0, 1};
  CHECK_THROWS_AS(Tensor3(3, m, b), PreconditionError);  // not symmetric
  CHECK_THROWS_AS(Tensor3(3, std::vector<Rational>(8), b), PreconditionError);
}

TEST_CASE("sl(2) data") {
  const auto t = sl2_adjoint();
  CHECK(t.is_antisymmetric());
  CHECK(t.is_invariant());
  CHECK(t.b(0, 1) == 4);
  CHECK(t.b(2, 2) == 8);
  CHECK(t.b(0, 0) == 0);
}

TEST_CASE("theta scales quadratically in m") {
  const auto t = sl2_adjoint();
  const Rational c(5, 3);
  CHECK(amplitude_T2(t.scaled(c, 1)) == c * c * amplitude_T2(t));
}

TEST_CASE("normalized tetrahedron of the sl(2) adjoint is 3/2") {
  const auto t = sl2_adjoint();
  CHECK(amplitude_T4_normalized(t) == Rational(3, 2));
  CHECK(amplitude_T4_normalized(t.scaled(2, 1)) == Rational(3, 2));
  CHECK(amplitude_T4_normalized(t.scaled(Rational(-1, 7), 3)) == Rational(3, 2));
}

TEST_CASE("Casimir identity on explicit adjoint matrices") {
  // ad e, ad f, ad h in the basis (e, f, h); column j is the image of basis vector j
  M3 ade{}, adf{}, adh{};
  ade[2][1] = 1;   // [e, f] = h
  ade[0][2] = -2;  // [e, h] = -2e
  adf[2][0] = -1;  // [f, e] = -h
  adf[1][2] = 2;   // [f, h] = 2f
  adh[0][0] = 2;   // [h, e] = 2e
  adh[1][1] = -2;  // [h, f] = -2f
  // dual basis for the Killing form: e* = f/4, f* = e/4, h* = h/8
  const std::array<M3, 3> x{ade, adf, adh};
  std::array<M3, 3> dual{};
  dual[0] = add_scaled(M3{}, adf, Rational(1, 4));
  dual[1] = add_scaled(M3{}, ade, Rational(1, 4));
  dual[2] = add_scaled(M3{}, adh, Rational(1, 8));

  M3 cas{}, quartic{};
  for (int i = 0; i < 3; ++i) {
    cas = add_scaled(cas, mul(x[i], dual[i]), 1);
    for (int j = 0; j < 3; ++j) quartic = add_scaled(quartic, mul(mul(x[i], x[j]), mul(dual[i], dual[j])), 1);
  }
  CHECK(cas == identity3());
  Rational trace = quartic[0][0] + quartic[1][1] + quartic[2][2];
  const auto route = casimir_identity(sl2_adjoint());
  CHECK(route.casimir == 1);
  CHECK(route.traced_coeff == trace);
  CHECK(trace == Rational(3, 2));
  CHECK(route.operator_coeff == Rational(1, 2));
  CHECK(quartic == add_scaled(M3{}, identity3(), Rational(1, 2)));
  CHECK(route.traced_coeff == amplitude_T4_normalized(sl2_adjoint()));
}

TEST_CASE("loop formula") {
  CHECK(tetrahedron_from_loop(3) == Rational(3, 2));
  CHECK_THROWS_AS(tetrahedron_from_loop(1), PreconditionError);
}

TEST_CASE("quantum tetrahedron at l = 8") {
  const auto q = quantum_T4(8);
  CHECK(q.value_squared == CycNum(Rational(1, 2)));
  CHECK(q.value.conductor() == 16);
  CHECK(q.value.denominator() == 2);
  CHECK(q.value_norm == Rational(1, 16));
  REQUIRE(q.certificates.size() == primes_up_to(50).size());
  for (const auto& c : q.certificates) CHECK(c.divides_denominator_norm == (c.prime == 2));
}

TEST_CASE("quantum tetrahedron at l = 9") {
  const auto q = quantum_T4(9);
  CHECK(q.value.conductor() == 18);
  const auto q3 = q_integer(3, 9);
  CHECK(q.value * (q3 - CycNum(1)) == q3 * (q3 - CycNum(2)));
  CHECK(q.value_norm == oracle::resultant_norm(q.value));
  CHECK(q.value_norm == 9);
}

TEST_CASE("[3]_q = 1 is rejected") {
  CHECK(q_integer(3, 4) == CycNum(1));
  CHECK_THROWS_AS(quantum_T4(4), PreconditionError);
}
