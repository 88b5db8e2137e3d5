#pragma once

/**
 * @file amplitude.hpp
 * @brief Trivalent graph amplitudes for a product m : X (x) X -> X paired by
 * a nondegenerate symmetric form b.
 *
 * All contractions use an arbitrary basis together with the Gram matrix of b
 * and its inverse, so everything stays in exact rational arithmetic.
 *
 * Normalization: m is rescaled so that the bubble m . m_* is the identity of
 * X. For an irreducible X this is the scale at which the theta graph T_2
 * evaluates to the loop value dim X, and the tetrahedron T_4 then equals
 * A(T_4) dim(X)^2 / A(T_2)^2 of the unscaled data. For the adjoint
 * representation of sl(2) this is 3/2.
 */

#include <cstdint>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

using RationalMatrix = std::vector<std::vector<Rational>>;

class Tensor3 {
public:
  /// structure[(i * n + j) * n + k] is the e_k coefficient of m(e_i, e_j);
  /// gram[i * n + j] = b(e_i, e_j). Throws PreconditionError for mismatched
  /// sizes, a non-symmetric b, or a degenerate b.
  Tensor3(std::size_t dim, std::vector<Rational> structure, std::vector<Rational> gram);

  std::size_t dim() const { return dim_; }
  const Rational& m(std::size_t i, std::size_t j, std::size_t k) const { return m_[(i * dim_ + j) * dim_ + k]; }
  const Rational& b(std::size_t i, std::size_t j) const { return b_[i * dim_ + j]; }
  const RationalMatrix& gram_inverse() const { return b_inv_; }

  /// m -> cm, b -> c' b.
  Tensor3 scaled(const Rational& m_factor, const Rational& b_factor) const;

  bool is_antisymmetric() const;
  /// b(m(x, y), z) is invariant under cyclic permutations of (x, y, z).
  bool is_invariant() const;

  /// m : X (x) X -> X as a dim x dim^2 matrix.
  RationalMatrix product_map() const;
  /// m_* : X -> X (x) X, the dual of m transported by b, as dim^2 x dim.
  RationalMatrix coproduct_map() const;

private:
  std::size_t dim_;
  std::vector<Rational> m_;
  std::vector<Rational> b_;
  RationalMatrix b_inv_;
};

/// sl(2) in the basis (e, f, h) with its Killing form.
Tensor3 sl2_adjoint();

/// Tr(m m_*), the theta graph.
Rational amplitude_T2(const Tensor3& t);
/// Tr(m (1 (x) m)(m_* (x) 1) m_*), the tetrahedron, unnormalized.
Rational amplitude_T4(const Tensor3& t);
/// Tetrahedron at the scale where m . m_* = id_X. Throws PreconditionError if A(T_2) = 0.
Rational amplitude_T4_normalized(const Tensor3& t);

/// Second route through the adjoint action x_i = ad(e_i): with the Casimir
/// sum x_i x^i = c Id, the operator sum x_i x_j x^i x^j is k c^2 Id.
struct CasimirIdentity {
  Rational casimir;           // c
  Rational operator_coeff;    // k, the coefficient of the operator identity
  Rational traced_coeff;      // Tr(sum x_i x_j x^i x^j) / c^2 = k dim X
};

/// Throws InternalError if the Casimir or the quartic sum is not scalar.
CasimirIdentity casimir_identity(const Tensor3& t);

/// q3 (q3 - 2) / (q3 - 1), the tetrahedron as a function of the loop value.
Rational tetrahedron_from_loop(const Rational& q3);

struct DenominatorCertificate {
  std::uint64_t prime;
  bool divides_denominator_norm;
  friend bool operator==(const DenominatorCertificate&, const DenominatorCertificate&) = default;
};

struct QuantumT4 {
  std::uint64_t l;
  CycNum q3;        // [3]_q, q = zeta_{2l}
  CycNum value;
  CycNum value_squared;
  Rational value_norm;
  /// Norm of the canonical denominator of value, as an element of Q(zeta_{2l}).
  BigInt denominator_norm;
  std::vector<DenominatorCertificate> certificates;  // every prime <= pmax
};

/// Evaluates [3]([3] - 2) / ([3] - 1) at q = zeta_{2l}. Throws PreconditionError if [3]_q = 1.
QuantumT4 quantum_T4(std::uint64_t l, std::uint64_t pmax = 50);

}  // namespace fuscat
