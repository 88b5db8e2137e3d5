#include "fuscat/verlinde.hpp"

#include <algorithm>
#include <map>

#include "fuscat/errors.hpp"

namespace fuscat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Good: return "Good";
    case Verdict::Bad: return "Bad";
    case Verdict::OutsideTheorem: return "OutsideTheorem";
  }
  return "?";
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::TheoremClauseI: return "TheoremClause_i";
    case VerdictReason::TheoremClauseII: return "TheoremClause_ii";
    case VerdictReason::DimensionWitness: return "DimensionWitness";
    case VerdictReason::CoprimeConstruction: return "CoprimeConstruction";
    case VerdictReason::LPrimeSymmetric: return "LPrimeSymmetric";
    case VerdictReason::HypothesisFailure: return "HypothesisFailure";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Good, Verdict::Bad, Verdict::OutsideTheorem})
    if (to_string(v) == s) return v;
  throw PreconditionError("unknown verdict \"" + s + "\"");
}

VerdictReason reason_from_string(const std::string& s) {
  for (auto r : {VerdictReason::TheoremClauseI, VerdictReason::TheoremClauseII, VerdictReason::DimensionWitness,
                 VerdictReason::CoprimeConstruction, VerdictReason::LPrimeSymmetric,
                 VerdictReason::HypothesisFailure})
    if (to_string(r) == s) return r;
  throw PreconditionError("unknown verdict reason \"" + s + "\"");
}

namespace {

CycNum product_of_q_integers(const std::map<int, int>& multiset, int l, std::int64_t s) {
  CycNum acc(Rational(1), 2 * static_cast<std::uint64_t>(l));
  for (auto [value, count] : multiset) {
    if (count == 0) continue;
    acc *= q_integer(value, static_cast<std::uint64_t>(l), s).pow(count);
  }
  return acc;
}

void require_level(const RootSystem& rs, int l) {
  if (l <= rs.coxeter_number())
    throw PreconditionError("level l = " + std::to_string(l) + " must exceed the Coxeter number h = " +
                            std::to_string(rs.coxeter_number()));
}

}  // namespace

CycNum qdim(const RootSystem& rs, int l, const Weight& lambda, std::int64_t s) {
  require_level(rs, l);
  if (!in_alcove(rs, l, lambda))
    throw PreconditionError("weight " + lambda.to_string() + " is outside the level-" + std::to_string(l) +
                            " alcove of " + rs.label().to_string());
  // cancel equal q-integers between numerator and denominator before multiplying out
  std::map<int, int> top, bottom;
  for (const auto& alpha : rs.positive_roots()) {
    ++top[rs.shifted_pairing(lambda, alpha)];
    ++bottom[RootSystem::height(alpha)];
  }
  for (auto& [value, count] : bottom) {
    auto it = top.find(value);
    if (it == top.end()) continue;
    const int common = std::min(count, it->second);
    count -= common;
    it->second -= common;
  }
  CycNum result = product_of_q_integers(top, l, s) / product_of_q_integers(bottom, l, s);
  if (!result.is_integral())
    throw InternalError("quantum dimension of " + lambda.to_string() + " is not an algebraic integer");
  return result;
}

std::vector<VerlindeSimple> verlinde_simples(const RootSystem& rs, int l) {
  std::vector<VerlindeSimple> out;
  for (auto& w : enumerate_alcove(rs, l)) {
    CycNum d = qdim(rs, l, w);
    BigInt n = norm(d).get_num();
    out.push_back(VerlindeSimple{std::move(w), std::move(d), std::move(n)});
  }
  return out;
}

PrimeVerdict classify_prime(const RootSystem& rs, int l, std::uint64_t p) {
  const int h = rs.coxeter_number();
  if (l % 2 == 0) throw PreconditionError("classify_prime: l = " + std::to_string(l) + " must be odd");
  require_level(rs, l);
  if (!is_prime(p)) throw PreconditionError("classify_prime: " + std::to_string(p) + " is not prime");

  PrimeVerdict v;
  v.prime = p;
  const auto ul = static_cast<std::uint64_t>(l);
  if (ul % p != 0) {
    v.verdict = Verdict::Good;
    v.reason = VerdictReason::CoprimeConstruction;
    return v;
  }
  if (is_prime(ul)) {
    v.verdict = Verdict::Good;
    v.reason = VerdictReason::LPrimeSymmetric;
    return v;
  }
  if (p < static_cast<std::uint64_t>(h)) {
    v.verdict = Verdict::OutsideTheorem;
    v.reason = VerdictReason::HypothesisFailure;
    v.detail = "p = " + std::to_string(p) + " divides l but p < h = " + std::to_string(h);
    return v;
  }
  Weight witness = rs.rho();
  for (auto& c : witness.coords) c = static_cast<int>(ul / p) - 1;
  const BigInt n = norm(qdim(rs, l, witness)).get_num();
  if (!divides(p, n))
    throw InternalError("witness " + witness.to_string() + " has dimension norm " + n.get_str() +
                        " not divisible by " + std::to_string(p));
  v.verdict = Verdict::Bad;
  v.reason = VerdictReason::TheoremClauseII;
  v.witness = std::move(witness);
  v.witness_norm = n;
  return v;
}

std::vector<Weight> scan_dimension_witnesses(const RootSystem& rs, int l, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("scan_dimension_witnesses: " + std::to_string(p) + " is not prime");
  std::vector<Weight> out;
  for (auto& w : enumerate_alcove(rs, l))
    if (divides(p, norm(qdim(rs, l, w)).get_num())) out.push_back(std::move(w));
  return out;
}

std::vector<PrimeVerdict> verdicts_up_to(const RootSystem& rs, int l, std::uint64_t pmax) {
  require_level(rs, l);
  std::vector<PrimeVerdict> out;
  for (auto p : primes_up_to(pmax)) {
    if (l % 2 == 0) {
      PrimeVerdict v;
      v.prime = p;
      v.detail = "l = " + std::to_string(l) + " is even";
      out.push_back(std::move(v));
    } else {
      out.push_back(classify_prime(rs, l, p));
    }
  }
  return out;
}

}  // namespace fuscat
