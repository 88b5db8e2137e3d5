#pragma once

// Structured command results, their JSON form and their text tables.
// Every number is serialized as a decimal string.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fuscat/amplitude.hpp"
#include "fuscat/cyclotomic.hpp"
#include "fuscat/finitegroup.hpp"
#include "fuscat/rootsys.hpp"
#include "fuscat/verlinde.hpp"

namespace fuscat {

using Json = nlohmann::json;

struct CycPayload {
  std::string expression;
  std::uint64_t n = 1;
  CycNum value;
  Rational norm;
  bool integral = true;
  std::optional<std::uint64_t> p;
  std::optional<bool> p_unit;
  friend bool operator==(const CycPayload&, const CycPayload&) = default;
};

struct LemmaNormRow {
  std::uint64_t n = 0;
  Rational norm;
  std::uint64_t prime_power_base = 0;  // 0 unless n is a prime power
  bool matches = false;
  friend bool operator==(const LemmaNormRow&, const LemmaNormRow&) = default;
};

struct LemmaNormPayload {
  std::uint64_t nmax = 0;
  std::vector<LemmaNormRow> rows;
  bool all_match = false;
  friend bool operator==(const LemmaNormPayload&, const LemmaNormPayload&) = default;
};

struct VerlindeSimpleRow {
  Weight weight;
  CycNum qdim;
  BigInt norm;
  std::vector<std::uint64_t> dividing_primes;  // primes <= pmax dividing norm
  friend bool operator==(const VerlindeSimpleRow&, const VerlindeSimpleRow&) = default;
};

struct VerlindeSimplesPayload {
  std::string type;
  int l = 0;
  int coxeter = 0;
  std::uint64_t pmax = 0;
  std::vector<VerlindeSimpleRow> simples;
  friend bool operator==(const VerlindeSimplesPayload&, const VerlindeSimplesPayload&) = default;
};

struct VerlindeClassifyPayload {
  std::string type;
  int l = 0;
  int coxeter = 0;
  PrimeVerdict verdict;
  std::vector<Weight> scan;  // alcove weights with p | norm(dim)
  friend bool operator==(const VerlindeClassifyPayload&, const VerlindeClassifyPayload&) = default;
};

struct VerlindeBadPrimesPayload {
  std::string type;
  int l = 0;
  int coxeter = 0;
  std::uint64_t pmax = 0;
  std::vector<PrimeVerdict> verdicts;
  std::vector<std::uint64_t> bad;
  std::vector<std::uint64_t> scan_flagged;  // primes failing the necessary condition
  friend bool operator==(const VerlindeBadPrimesPayload&, const VerlindeBadPrimesPayload&) = default;
};

struct ClassRow {
  std::string representative;
  std::uint64_t size = 0;
  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct GroupPayload {
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t field_prime = 0;
  std::vector<ClassRow> classes;
  std::vector<std::uint64_t> degrees;
  std::vector<BadPrime> bad;
  std::vector<std::uint64_t> good_dividing_order;
  friend bool operator==(const GroupPayload&, const GroupPayload&) = default;
};

struct CosetRow {
  std::string representative;
  std::uint64_t size = 0;
  friend bool operator==(const CosetRow&, const CosetRow&) = default;
};

struct GTSimpleRow {
  std::string representative;
  std::uint64_t stab_order = 0;
  std::uint64_t degree = 0;
  std::uint64_t dim = 0;
  friend bool operator==(const GTSimpleRow&, const GTSimpleRow&) = default;
};

struct GtcatPayload {
  std::string group;
  std::string subgroup;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::vector<CosetRow> double_cosets;
  std::vector<GTSimpleRow> simples;
  std::uint64_t sum_of_squares = 0;
  std::vector<BadPrime> bad;
  std::vector<std::uint64_t> good_dividing_order;
  friend bool operator==(const GtcatPayload&, const GtcatPayload&) = default;
};

struct ItoMichlerRow {
  std::uint64_t prime = 0;
  bool applicable = false;
  std::string reason;
  std::uint64_t sylow_order = 0;
  std::uint64_t complement_order = 0;
  bool closed = false;
  bool abelian = false;
  bool normal = false;
  std::vector<std::string> sylow_elements;
  friend bool operator==(const ItoMichlerRow&, const ItoMichlerRow&) = default;
};

struct ItoMichlerPayload {
  std::string group;
  std::uint64_t order = 0;
  std::vector<ItoMichlerRow> rows;
  friend bool operator==(const ItoMichlerPayload&, const ItoMichlerPayload&) = default;
};

struct ClassicalAmplitudePayload {
  std::string normalization;
  Rational t2;
  Rational t4_raw;
  Rational value;  // normalized tetrahedron
  Rational casimir;
  Rational operator_coeff;
  Rational traced_coeff;
  Rational loop_formula;  // q3 (q3 - 2) / (q3 - 1) at q3 = dim X
  friend bool operator==(const ClassicalAmplitudePayload&, const ClassicalAmplitudePayload&) = default;
};

struct QuantumAmplitudePayload {
  std::string normalization;
  std::uint64_t l = 0;
  CycNum q3;
  CycNum value;
  CycNum value_squared;
  Rational value_norm;
  BigInt denominator_norm;
  std::vector<DenominatorCertificate> certificates;
  std::vector<std::uint64_t> bad;
  friend bool operator==(const QuantumAmplitudePayload&, const QuantumAmplitudePayload&) = default;
};

struct CheckRow {
  std::string subject;
  std::string check;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

struct CrosscheckPayload {
  std::vector<CheckRow> checks;
  bool passed = false;
  friend bool operator==(const CrosscheckPayload&, const CrosscheckPayload&) = default;
};

using Payload = std::variant<CycPayload, LemmaNormPayload, VerlindeSimplesPayload, VerlindeClassifyPayload,
                             VerlindeBadPrimesPayload, GroupPayload, GtcatPayload, ItoMichlerPayload,
                             ClassicalAmplitudePayload, QuantumAmplitudePayload, CrosscheckPayload>;

struct Provenance {
  std::string q_convention = "q = zeta_{2l} (q^2 of order l)";
  std::string cocycles = "trivial (omega = 1, psi = 1)";
  std::uint64_t enumeration_cap = 0;
  std::map<std::string, std::string> hypotheses;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Report {
  std::vector<std::string> command;
  Payload payload;
  Provenance provenance;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Name used as the "kind" field, e.g. "verlinde.classify".
std::string payload_kind(const Payload& p);

Json cyc_to_json(const CycNum& a);
CycNum cyc_from_json(const Json& j);

Json report_to_json(const Report& r);
/// Throws PreconditionError on malformed input.
Report report_from_json(const Json& j);

/// Aligned plain-text rendering.
std::string render_text(const Report& r);

}  // namespace fuscat
