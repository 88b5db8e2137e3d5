#pragma once

/**
 * @file verlinde.hpp
 * @brief Quantum dimensions of Verlinde category simples and the good/bad
 * prime classifier.
 *
 * The root of unity is fixed as q = zeta_{2l}, so q^2 has order l. Norms are
 * Galois invariant, so no verdict depends on that choice.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/rootsys.hpp"

namespace fuscat {

struct VerlindeSimple {
  Weight weight;
  CycNum qdim;
  BigInt qdim_norm;
};

enum class Verdict { Good, Bad, OutsideTheorem };

enum class VerdictReason {
  TheoremClauseI,    // l prime: every prime is good
  TheoremClauseII,   // l composite, p | l, p >= h: bad
  DimensionWitness,  // a simple whose dimension is not coprime to p
  CoprimeConstruction,
  LPrimeSymmetric,
  HypothesisFailure,
};

std::string to_string(Verdict v);
std::string to_string(VerdictReason r);
Verdict verdict_from_string(const std::string& s);
VerdictReason reason_from_string(const std::string& s);

struct PrimeVerdict {
  std::uint64_t prime = 0;
  Verdict verdict = Verdict::OutsideTheorem;
  VerdictReason reason = VerdictReason::HypothesisFailure;
  /// Set for Bad verdicts: lambda = (l/p - 1) rho with its dimension norm.
  std::optional<Weight> witness;
  std::optional<BigInt> witness_norm;
  /// Violated hypothesis for OutsideTheorem, empty otherwise.
  std::string detail;

  friend bool operator==(const PrimeVerdict&, const PrimeVerdict&) = default;
};

/// prod_{alpha > 0} [(lambda + rho, alpha)]_q / [(rho, alpha)]_q with q = zeta_{2l}^s.
/// Throws PreconditionError if lambda is outside the alcove.
CycNum qdim(const RootSystem& rs, int l, const Weight& lambda, std::int64_t s = 1);

/// Every alcove simple with its dimension and dimension norm.
std::vector<VerlindeSimple> verlinde_simples(const RootSystem& rs, int l);

/// Requires l odd and l > h; p must be prime.
PrimeVerdict classify_prime(const RootSystem& rs, int l, std::uint64_t p);

/// Alcove weights whose dimension norm is divisible by p. This only detects
/// failure of the necessary condition; it never certifies badness by itself.
std::vector<Weight> scan_dimension_witnesses(const RootSystem& rs, int l, std::uint64_t p);

/// Verdicts for every prime up to pmax. For even l every prime is
/// OutsideTheorem; the dimension scan is still available separately.
std::vector<PrimeVerdict> verdicts_up_to(const RootSystem& rs, int l, std::uint64_t pmax);

}  // namespace fuscat
