// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fuscat/amplitude.hpp"
#include "fuscat/cyclotomic.hpp"
#include "fuscat/finitegroup.hpp"
#include "fuscat/gtcat.hpp"
#include "fuscat/verlinde.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace fuscat;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) why << msg;
    ok = ok && cond;
  }
};

std::vector<std::uint64_t> bad_list(const std::vector<BadPrime>& bad) {
  std::vector<std::uint64_t> out;
  for (const auto& b : bad) out.push_back(b.prime);
  return out;
}

bool is_unit_norm(const BigInt& n) { return abs(n) == 1; }

void lemma_norm(Check& c) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const Rational got = norm(CycNum(1) - CycNum::root_of_unity(n, 1));
    const std::uint64_t p = prime_power_base(n);
    c.expect(got == Rational(p == 0 ? 1 : p), "n = " + std::to_string(n) + " gives " + to_string(got));
  }
}

void rep_s3(Check& c) {
  const auto r = rep_bad_primes(builtin_group("S3"));
  c.expect(bad_list(r.bad) == std::vector<std::uint64_t>{2}, "bad primes differ from {2}");
  c.expect(r.good_dividing_order == std::vector<std::uint64_t>{3}, "3 not reported good");
}

void gt_s3(Check& c) {
  const auto g = builtin_group("S3");
  const auto h = subgroup(g, parse_generators("(1 2)"));
  for (const auto* sub : {&h, &g}) {
    const auto simples = enumerate_simples(g, *sub);
    std::uint64_t sum = 0;
    for (const auto& s : simples) sum += s.dimension * s.dimension;
    c.expect(sum == 6, "sum of squared dimensions " + std::to_string(sum));
    c.expect(bad_list(gt_bad_primes(g, simples).bad) == std::vector<std::uint64_t>{2}, "bad primes differ from {2}");
  }
}

void verlinde_units(Check& c) {
  for (const char* type : {"A1", "A2"}) {
    const auto rs = build_root_system(type);
    for (int l : {7, 11, 13}) {
      const std::string tag = std::string(type) + " l=" + std::to_string(l);
      for (const auto& s : verlinde_simples(rs, l))
        c.expect(is_unit_norm(s.qdim_norm), tag + " " + s.weight.to_string() + " norm " + to_string(s.qdim_norm));
      for (auto p : primes_up_to(100))
        c.expect(classify_prime(rs, l, p).verdict == Verdict::Good, tag + " p=" + std::to_string(p) + " not Good");
    }
  }
}

void verlinde_bad(Check& c) {
  struct Case { const char* type; int l; std::uint64_t p; };
  for (const Case& k : {Case{"A1", 9, 3}, Case{"A2", 9, 3}, Case{"A1", 15, 3}, Case{"A1", 15, 5}}) {
    const auto rs = build_root_system(k.type);
    const std::string tag = std::string(k.type) + " l=" + std::to_string(k.l) + " p=" + std::to_string(k.p);
    const auto v = classify_prime(rs, k.l, k.p);
    c.expect(v.verdict == Verdict::Bad, tag + " not Bad");
    Weight expected{std::vector<int>(rs.rank(), k.l / static_cast<int>(k.p) - 1)};
    c.expect(v.witness && *v.witness == expected, tag + " witness is not (l/p - 1) rho");
    if (!v.witness) continue;
    const auto scan = scan_dimension_witnesses(rs, k.l, k.p);
    c.expect(std::find(scan.begin(), scan.end(), expected) != scan.end(), tag + " witness missing from the scan");
    const Rational n = oracle::resultant_norm(qdim(rs, k.l, expected));
    c.expect(n.get_den() == 1 && divides(k.p, n.get_num()), tag + " p does not divide the witness norm");
  }
}

void a1_level_eight(Check& c) {
  const auto rs = build_root_system("A1");
  const auto simples = verlinde_simples(rs, 8);
  c.expect(simples.size() == 7, "alcove size " + std::to_string(simples.size()));
  if (simples.size() != 7) return;
  const CycNum root2_plus_1 = CycNum(1) + CycNum::root_of_unity(16, 2) + CycNum::root_of_unity(16, -2);
  const std::vector<CycNum> dims{CycNum(1), q_integer(2, 8), root2_plus_1, q_integer(4, 8),
                                 root2_plus_1, q_integer(6, 8), CycNum(1)};
  for (int m = 0; m < 7; ++m) c.expect(simples[m].qdim == dims[m], "dimension of V_" + std::to_string(m));
  const double root2 = std::sqrt(2.0);
  c.expect(std::abs(oracle::evaluate(root2_plus_1) - std::complex<double>(1 + root2, 0)) < 1e-12, "1 + sqrt 2 mismatch");
  for (int m : {0, 2, 4, 6}) c.expect(is_unit_norm(simples[m].qdim_norm), "V_" + std::to_string(m) + " not a unit");
  const auto t = quantum_T4(8);
  c.expect(t.value_squared == CycNum(Rational(1, 2)), "T4 squared is " + t.value_squared.to_string());
  c.expect(divides(2, t.denominator_norm), "2 does not divide the denominator norm");
}

void sl2_tetrahedron(Check& c) {
  const auto t = sl2_adjoint();
  c.expect(amplitude_T4_normalized(t) == Rational(3, 2), "normalized T4 " + to_string(amplitude_T4_normalized(t)));
  const auto id = casimir_identity(t);
  c.expect(id.traced_coeff == Rational(3, 2), "matrix identity coefficient " + to_string(id.traced_coeff));
}

void degrees(Check& c) {
  const std::map<std::string, std::vector<std::uint64_t>> frozen{
      {"S3", {1, 1, 2}},
      {"S4", {1, 1, 2, 3, 3}},
      {"S5", {1, 1, 4, 4, 5, 5, 6}},
      {"A4", {1, 1, 1, 3}},
      {"A5", {1, 3, 3, 4, 5}},
      {"D8", {1, 1, 1, 1, 2}},
      {"Q8", {1, 1, 1, 1, 2}},
  };
  for (const auto& [name, want] : frozen) {
    const auto gens = builtin_generators(name);
    const auto got = char_degrees(PermGroup::enumerate(gens)).degrees;
    c.expect(got == want, name + " differs from the classical list");
    c.expect(got == oracle::numeric_char_degrees(gens), name + " differs from the numeric oracle");
  }
  for (const auto& name : builtin_corpus()) {
    const auto g = builtin_group(name);
    const auto d = char_degrees(g).degrees;
    std::uint64_t sum = 0;
    for (auto x : d) sum += x * x;
    c.expect(sum == g.order(), name + " sum of squares");
    c.expect(d.size() == g.classes().size(), name + " degree count");
  }
}

void ito_michler(Check& c) {
  struct Case { const char* group; std::uint64_t p; std::uint64_t sylow; };
  for (const Case& k : {Case{"A4", 2, 4}, Case{"S3", 3, 3}}) {
    const auto g = builtin_group(k.group);
    const auto r = ito_michler_verify(g, k.p);
    const std::string tag = std::string(k.group) + " p=" + std::to_string(k.p);
    c.expect(r.applicable && r.closed && r.abelian && r.normal, tag + " Sylow not normal abelian");
    c.expect(r.sylow_order == k.sylow, tag + " Sylow order");
    c.expect(r.complement_order * r.sylow_order == g.order() && gcd_u64(r.complement_order, k.p) == 1,
             tag + " complement not coprime");
    const auto facts = oracle::sylow_facts(builtin_generators(k.group), k.p);
    c.expect(facts.is_subgroup && facts.abelian && facts.p_elements == k.sylow, tag + " oracle disagrees");
  }
  const auto s4 = ito_michler_verify(builtin_group("S4"), 2);
  c.expect(!s4.applicable, "S4 p=2 should be NotApplicable");
}

void properties(Check& c) {
  constexpr int cases = 1000;
  for (const auto& r : {props::norm_multiplicativity(101, cases), props::galois_norm_invariance(102, cases),
                        props::phi_product_identity(103, cases), props::div_mul_roundtrip(104, cases),
                        props::double_coset_sizes(105, cases)}) {
    c.expect(r.cases == cases, r.name + " ran " + std::to_string(r.cases) + " cases");
    c.expect(r.failures == 0, r.name + ": " + r.first_failure);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {"norm of 1 - zeta_n for n in 2..200", 30, lemma_norm},
      {"Rep(S3) bad primes {2}, 3 good", 1, rep_s3},
      {"C(S3, <(1 2)>) and C(S3, S3) agree", 1, gt_s3},
      {"Verlinde units at prime l", 60, verlinde_units},
      {"Verlinde Bad verdicts with witnesses", 60, verlinde_bad},
      {"A1 at l = 8 dimensions and T4", 5, a1_level_eight},
      {"sl(2) adjoint tetrahedron 3/2", 1, sl2_tetrahedron},
      {"character degrees", 60, degrees},
      {"Ito-Michler", 1, ito_michler},
      {"property suites, 1000 cases each", 120, properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& k = criteria[i];
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < k.limit_s, "took " + std::to_string(secs) + " s");
    failed += c.ok ? 0 : 1;
    std::printf("%s %2zu %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, k.name, secs,
                c.ok ? "" : ": ", c.why.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
