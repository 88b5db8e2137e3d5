#include "fuscat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "fuscat/amplitude.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/gtcat.hpp"
#include "fuscat/numtheory.hpp"
#include "fuscat/verlinde.hpp"

namespace fuscat {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Provenance base_provenance() {
  Provenance p;
  p.enumeration_cap = enumeration_cap();
  return p;
}

Report make_report(Payload payload, std::map<std::string, std::string> hypotheses = {}) {
  Report r{{}, std::move(payload), base_provenance()};
  r.provenance.hypotheses = std::move(hypotheses);
  return r;
}

void require_prime(std::uint64_t p, const char* flag) {
  if (!is_prime(p)) throw PreconditionError(std::string(flag) + " = " + std::to_string(p) + " is not prime");
}

std::map<std::string, std::string> level_hypotheses(const RootSystem& rs, int l) {
  return {{"l_odd", yes_no(l % 2 != 0)}, {"l_greater_than_h", yes_no(l > rs.coxeter_number())}};
}

std::vector<std::uint64_t> primes_dividing(const BigInt& n, std::uint64_t pmax) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(pmax))
    if (divides(p, n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> bad_primes_of(const std::vector<BadPrime>& bad) {
  std::vector<std::uint64_t> out;
  for (const auto& b : bad) out.push_back(b.prime);
  return out;
}

CheckRow check(std::string subject, std::string name, bool passed, std::string detail = "") {
  return CheckRow{std::move(subject), std::move(name), passed, std::move(detail)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void group_checks(const NamedGroup& ng, std::vector<CheckRow>& rows) {
  const auto& g = ng.group;
  const std::string& name = ng.name;
  auto guarded = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows.push_back(check(name, what, false, e.what()));
    }
  };

  DegreeVector degrees;
  guarded("character degrees", [&] {
    degrees = char_degrees(g);
    std::uint64_t sum = 0;
    bool divide = true;
    for (auto d : degrees.degrees) {
      sum += d * d;
      divide = divide && g.order() % d == 0;
    }
    rows.push_back(check(name, "sum of squared degrees = |G|", sum == g.order(),
                         std::to_string(sum) + " vs " + std::to_string(g.order())));
    rows.push_back(check(name, "#degrees = #classes", degrees.degrees.size() == g.classes().size(),
                         std::to_string(degrees.degrees.size()) + " vs " + std::to_string(g.classes().size())));
    rows.push_back(check(name, "degrees divide |G|", divide));
  });

  guarded("Rep(G) = C(G,G,1,1)", [&] {
    const auto rep = bad_primes_of(rep_bad_primes(g, degrees).bad);
    const auto gt = bad_primes_of(gt_bad_primes(g, g).bad);
    rows.push_back(check(name, "gt_bad_primes(G,G) = rep_bad_primes(G)", rep == gt, join(gt) + " vs " + join(rep)));
  });

  guarded("Vect_G = C(G,1,1,1)", [&] {
    const PermGroup trivial = subgroup(g, {});
    const auto simples = enumerate_simples(g, trivial);
    const bool pointed = simples.size() == g.order() &&
                         std::all_of(simples.begin(), simples.end(), [](const GTSimple& s) { return s.dimension == 1; });
    rows.push_back(check(name, "H = {e}: |G| simples of dimension 1", pointed));
    rows.push_back(check(name, "gt_bad_primes(G,{e}) empty", gt_bad_primes(g, simples).bad.empty()));
  });

  guarded("intermediate subgroup", [&] {
    if (g.generators().empty()) return;
    const PermGroup h = subgroup(g, {g.generators().front()});
    const auto cosets = double_cosets(g, h);
    std::uint64_t total = 0;
    bool sizes_ok = true;
    for (const auto& dc : cosets) {
      total += dc.size;
      const auto stab = stabilizer_intersection(g, h, dc.representative);
      sizes_ok = sizes_ok && dc.size * stab.order() == h.order() * h.order();
    }
    const std::string sub = "H = <" + g.generators().front().to_cycle_string() + ">";
    rows.push_back(check(name, sub + ": double coset sizes sum to |G|", total == g.order()));
    rows.push_back(check(name, sub + ": |HgH| = |H|^2/|H^g|", sizes_ok));
    const auto simples = enumerate_simples(g, h);
    std::uint64_t sum = 0;
    for (const auto& s : simples) sum += s.dimension * s.dimension;
    rows.push_back(check(name, sub + ": sum of squared dimensions = |G|", sum == g.order()));
    bool divide = true;
    for (const auto& b : gt_bad_primes(g, simples).bad) divide = divide && g.order() % b.prime == 0;
    rows.push_back(check(name, sub + ": bad primes divide |G|", divide));
  });

  for (auto p : prime_divisors(g.order()))
    guarded("Ito-Michler p = " + std::to_string(p), [&] {
      const auto im = ito_michler_verify(g, p);
      if (im.applicable)
        rows.push_back(check(name, "Ito-Michler p = " + std::to_string(p),
                             im.closed && im.abelian && im.normal && gcd_u64(im.complement_order, p) == 1,
                             "|S| = " + std::to_string(im.sylow_order)));
    });
}

void verlinde_checks(std::vector<CheckRow>& rows) {
  const std::pair<const char*, int> panel[] = {{"A1", 7}, {"A1", 9}, {"A2", 7}, {"A2", 9}, {"A1", 15}, {"A3", 9}};
  for (const auto& [type, l] : panel) {
    const std::string subject = std::string(type) + " l=" + std::to_string(l);
    try {
      const auto rs = build_root_system(type);
      bool consistent = true;
      for (const auto& v : verdicts_up_to(rs, l, 100)) {
        if (v.verdict != Verdict::Bad) continue;
        const auto scan = scan_dimension_witnesses(rs, l, v.prime);
        consistent = consistent && v.witness && std::find(scan.begin(), scan.end(), *v.witness) != scan.end();
      }
      rows.push_back(check(subject, "Bad verdicts carry a witness found by the scan", consistent));
    } catch (const std::exception& e) {
      rows.push_back(check(subject, "Bad verdicts carry a witness found by the scan", false, e.what()));
    }
  }
  const auto lemma = std::get<LemmaNormPayload>(lemma_norm_report(60).payload);
  rows.push_back(check("Q(zeta_n), n <= 60", "N(1 - zeta_n) follows the prime-power rule", lemma.all_match));
}

struct GroupFlags {
  std::optional<std::string> name;
  std::optional<std::string> gens;
  void attach(CLI::App* app) {
    app->add_option("--group", name, "Built-in group, e.g. S4, A5, D8, C12, Q8, SL23, S3xC4");
    app->add_option("--gens", gens, "Generators in cycle notation, e.g. \"(1 2)(3 4), (1 2 3)\"");
  }
};

}  // namespace

NamedGroup resolve_group(const std::optional<std::string>& name, const std::optional<std::string>& gens) {
  if (name.has_value() == gens.has_value()) throw PreconditionError("give exactly one of --group and --gens");
  if (name) return NamedGroup{*name, builtin_group(*name)};
  return NamedGroup{"<" + *gens + ">", PermGroup::enumerate(parse_generators(*gens))};
}

Report cyc_report(const std::string& expression, std::uint64_t n, std::optional<std::uint64_t> p) {
  if (n == 0) throw PreconditionError("--n must be positive");
  CycPayload out;
  out.expression = expression;
  out.n = n;
  out.value = parse_cyc(expression, n);
  out.norm = norm(out.value);
  out.integral = out.value.is_integral();
  if (p) {
    require_prime(*p, "--p");
    out.p = p;
    if (out.integral) out.p_unit = is_p_unit(out.value, *p);
  }
  return make_report(std::move(out));
}

Report lemma_norm_report(std::uint64_t nmax) {
  if (nmax < 2) throw PreconditionError("--nmax must be at least 2");
  LemmaNormPayload out;
  out.nmax = nmax;
  out.all_match = true;
  for (std::uint64_t n = 2; n <= nmax; ++n) {
    LemmaNormRow row;
    row.n = n;
    row.norm = norm(CycNum(1) - CycNum::root_of_unity(n));
    row.prime_power_base = prime_power_base(n);
    row.matches = row.norm == Rational(static_cast<unsigned long>(row.prime_power_base ? row.prime_power_base : 1));
    out.all_match = out.all_match && row.matches;
    out.rows.push_back(std::move(row));
  }
  return make_report(std::move(out));
}

Report verlinde_simples_report(const std::string& type, int l, std::uint64_t pmax) {
  const auto rs = build_root_system(type);
  VerlindeSimplesPayload out;
  out.type = rs.label().to_string();
  out.l = l;
  out.coxeter = rs.coxeter_number();
  out.pmax = pmax;
  for (auto& s : verlinde_simples(rs, l)) {
    auto primes = primes_dividing(s.qdim_norm, pmax);
    out.simples.push_back(VerlindeSimpleRow{std::move(s.weight), std::move(s.qdim), std::move(s.qdim_norm), primes});
  }
  return make_report(std::move(out), level_hypotheses(rs, l));
}

Report verlinde_classify_report(const std::string& type, int l, std::uint64_t p) {
  const auto rs = build_root_system(type);
  require_prime(p, "--p");
  VerlindeClassifyPayload out;
  out.type = rs.label().to_string();
  out.l = l;
  out.coxeter = rs.coxeter_number();
  out.verdict = classify_prime(rs, l, p);
  out.scan = scan_dimension_witnesses(rs, l, p);
  auto hyp = level_hypotheses(rs, l);
  hyp["p_at_least_h"] = yes_no(p >= static_cast<std::uint64_t>(rs.coxeter_number()));
  return make_report(std::move(out), std::move(hyp));
}

Report verlinde_badprimes_report(const std::string& type, int l, std::uint64_t pmax) {
  const auto rs = build_root_system(type);
  VerlindeBadPrimesPayload out;
  out.type = rs.label().to_string();
  out.l = l;
  out.coxeter = rs.coxeter_number();
  out.pmax = pmax;
  out.verdicts = verdicts_up_to(rs, l, pmax);
  for (const auto& v : out.verdicts)
    if (v.verdict == Verdict::Bad) out.bad.push_back(v.prime);
  const auto simples = verlinde_simples(rs, l);
  for (auto p : primes_up_to(pmax))
    if (std::any_of(simples.begin(), simples.end(), [p](const VerlindeSimple& s) { return divides(p, s.qdim_norm); }))
      out.scan_flagged.push_back(p);
  return make_report(std::move(out), level_hypotheses(rs, l));
}

Report group_report(const NamedGroup& ng) {
  const auto& g = ng.group;
  GroupPayload out;
  out.group = ng.name;
  out.order = g.order();
  out.exponent = g.exponent();
  out.field_prime = class_field_prime(g);
  for (const auto& c : g.classes()) out.classes.push_back(ClassRow{g.element(c.representative).to_cycle_string(), c.size()});
  const auto degrees = char_degrees(g);
  out.degrees = degrees.degrees;
  auto primes = rep_bad_primes(g, degrees);
  out.bad = std::move(primes.bad);
  out.good_dividing_order = std::move(primes.good_dividing_order);
  return make_report(std::move(out));
}

Report gtcat_report(const NamedGroup& ng, const std::string& subgroup_gens) {
  const auto& g = ng.group;
  const PermGroup h =
      subgroup_gens.empty() ? g : subgroup(g, parse_generators(subgroup_gens, g.degree()));
  GtcatPayload out;
  out.group = ng.name;
  out.subgroup = subgroup_gens.empty() ? ng.name : "<" + subgroup_gens + ">";
  out.group_order = g.order();
  out.subgroup_order = h.order();
  for (const auto& dc : double_cosets(g, h)) out.double_cosets.push_back(CosetRow{dc.representative.to_cycle_string(), dc.size});
  const auto simples = enumerate_simples(g, h);
  for (const auto& s : simples) {
    out.simples.push_back(GTSimpleRow{s.coset_rep.to_cycle_string(), s.stabilizer_order, s.irrep_degree, s.dimension});
    out.sum_of_squares += s.dimension * s.dimension;
  }
  auto primes = gt_bad_primes(g, simples);
  out.bad = std::move(primes.bad);
  out.good_dividing_order = std::move(primes.good_dividing_order);
  return make_report(std::move(out), {{"trivial_cocycles", "yes"}});
}

Report ito_michler_report(const NamedGroup& ng, std::optional<std::uint64_t> p) {
  const auto& g = ng.group;
  ItoMichlerPayload out;
  out.group = ng.name;
  out.order = g.order();
  std::vector<std::uint64_t> primes;
  if (p) {
    require_prime(*p, "--p");
    primes.push_back(*p);
  } else {
    primes = prime_divisors(g.order());
  }
  for (auto q : primes) {
    const auto im = ito_michler_verify(g, q);
    ItoMichlerRow row;
    row.prime = q;
    row.applicable = im.applicable;
    row.reason = im.applicable ? "p divides |G| but no degree" : im.not_applicable_reason;
    row.sylow_order = im.sylow_order;
    row.complement_order = im.complement_order;
    row.closed = im.closed;
    row.abelian = im.abelian;
    row.normal = im.normal;
    for (const auto& s : im.sylow_elements) row.sylow_elements.push_back(s.to_cycle_string());
    out.rows.push_back(std::move(row));
  }
  return make_report(std::move(out));
}

Report amplitude_classical_report() {
  const auto t = sl2_adjoint();
  ClassicalAmplitudePayload out;
  out.normalization = "bubble m . m_* = id_X, i.e. A(T4) dim(X)^2 / A(T2)^2";
  out.t2 = amplitude_T2(t);
  out.t4_raw = amplitude_T4(t);
  out.value = amplitude_T4_normalized(t);
  const auto cas = casimir_identity(t);
  out.casimir = cas.casimir;
  out.operator_coeff = cas.operator_coeff;
  out.traced_coeff = cas.traced_coeff;
  out.loop_formula = tetrahedron_from_loop(Rational(static_cast<long>(t.dim())));
  return make_report(std::move(out), {{"invariant_form", "Killing form"}});
}

Report amplitude_quantum_report(std::uint64_t l, std::uint64_t pmax) {
  if (l < 2) throw PreconditionError("--l must be at least 2");
  auto q = quantum_T4(l, pmax);
  QuantumAmplitudePayload out;
  out.normalization = "[3]_q ([3]_q - 2) / ([3]_q - 1)";
  out.l = q.l;
  out.q3 = std::move(q.q3);
  out.value = std::move(q.value);
  out.value_squared = std::move(q.value_squared);
  out.value_norm = q.value_norm;
  out.denominator_norm = q.denominator_norm;
  for (const auto& c : q.certificates)
    if (c.divides_denominator_norm) out.bad.push_back(c.prime);
  out.certificates = std::move(q.certificates);
  return make_report(std::move(out), {{"q3_not_one", "yes"}});
}

Report crosscheck_report(const std::optional<NamedGroup>& g) {
  CrosscheckPayload out;
  if (g) {
    group_checks(*g, out.checks);
  } else {
    for (const auto& name : builtin_corpus()) group_checks(NamedGroup{name, builtin_group(name)}, out.checks);
    verlinde_checks(out.checks);
  }
  out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const CheckRow& c) { return c.passed; });
  return make_report(std::move(out), {{"trivial_cocycles", "yes"}});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact good/bad prime certificates for fusion categories", "fuscat"};
  app.require_subcommand(1);
  bool json = false;
  std::string out_file;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--out", out_file, "Also write the JSON report to this file");

  std::function<Report()> action;

  auto* cyc = app.add_subcommand("cyc", "Evaluate an element of Q(zeta_n)")->fallthrough();
  std::string expr;
  std::uint64_t n = 1;
  std::optional<std::uint64_t> p;
  cyc->add_option("expr", expr, "Expression in integers, z, + - * / ^ and parentheses")->required();
  cyc->add_option("--n", n, "Conductor of the ambient field");
  cyc->add_option("--p", p, "Also test whether the element is a p-unit");
  cyc->callback([&] { action = [&] { return cyc_report(expr, n, p); }; });

  auto* lemma = app.add_subcommand("lemma-norm", "Tabulate N(1 - zeta_n)")->fallthrough();
  std::uint64_t nmax = 200;
  lemma->add_option("--nmax", nmax, "Largest n")->capture_default_str();
  lemma->callback([&] { action = [&] { return lemma_norm_report(nmax); }; });

  auto* verlinde = app.add_subcommand("verlinde", "Verlinde categories")->require_subcommand(1)->fallthrough();
  std::string type;
  int l = 0;
  std::uint64_t pmax = 100;
  verlinde->add_option("--type", type, "Root system A1..A8, D4..D8, E6..E8")->required();
  verlinde->add_option("--l", l, "Order of q^2")->required();
  verlinde->add_option("--p", p, "Prime");
  verlinde->add_option("--pmax", pmax, "Largest prime examined")->capture_default_str();
  verlinde->add_subcommand("simples", "Alcove simples with dimensions and norms")->fallthrough()->callback([&] {
    action = [&] { return verlinde_simples_report(type, l, pmax); };
  });
  verlinde->add_subcommand("classify", "Verdict for one prime")->fallthrough()->callback([&] {
    action = [&] {
      if (!p) throw PreconditionError("verlinde classify needs --p");
      return verlinde_classify_report(type, l, *p);
    };
  });
  verlinde->add_subcommand("badprimes", "Verdicts for all primes up to --pmax")->fallthrough()->callback([&] {
    action = [&] { return verlinde_badprimes_report(type, l, pmax); };
  });

  GroupFlags group_flags;
  auto* group = app.add_subcommand("group", "Classes, character degrees and Rep(G) bad primes")->fallthrough();
  group_flags.attach(group);
  group->callback([&] { action = [&] { return group_report(resolve_group(group_flags.name, group_flags.gens)); }; });

  GroupFlags gt_flags;
  std::string subgroup_gens;
  auto* gtcat = app.add_subcommand("gtcat", "Group-theoretical categories C(G,H,1,1)")->require_subcommand(1)->fallthrough();
  gt_flags.attach(gtcat);
  gtcat->add_option("--subgroup-gens", subgroup_gens, "Generators of H (default H = G)");
  for (const char* mode : {"simples", "badprimes"})
    gtcat->add_subcommand(mode, mode == std::string("simples") ? "Simple objects" : "Bad primes")->fallthrough()->callback([&] {
      action = [&] { return gtcat_report(resolve_group(gt_flags.name, gt_flags.gens), subgroup_gens); };
    });

  GroupFlags im_flags;
  auto* ito = app.add_subcommand("ito-michler", "Verify normal abelian Sylow subgroups")->fallthrough();
  im_flags.attach(ito);
  ito->add_option("--p", p, "Prime (default: every prime dividing |G|)");
  ito->callback([&] { action = [&] { return ito_michler_report(resolve_group(im_flags.name, im_flags.gens), p); }; });

  auto* amplitude = app.add_subcommand("amplitude", "Trivalent graph amplitudes")->require_subcommand(1)->fallthrough();
  auto* t4 = amplitude->add_subcommand("t4", "Tetrahedron amplitude")->fallthrough();
  bool classical = false, quantum = false;
  std::uint64_t amp_l = 0, amp_pmax = 50;
  auto* classical_flag = t4->add_flag("--classical", classical, "sl(2) adjoint representation");
  auto* quantum_flag = t4->add_flag("--quantum", quantum, "Closed form at q = zeta_{2l}");
  classical_flag->excludes(quantum_flag);
  t4->add_option("--l", amp_l, "Order of q^2 (quantum)");
  t4->add_option("--pmax", amp_pmax, "Largest prime certified")->capture_default_str();
  t4->callback([&] {
    action = [&] {
      if (classical == quantum) throw PreconditionError("amplitude t4 needs exactly one of --classical and --quantum");
      if (classical) return amplitude_classical_report();
      if (amp_l == 0) throw PreconditionError("amplitude t4 --quantum needs --l");
      return amplitude_quantum_report(amp_l, amp_pmax);
    };
  });

  GroupFlags cc_flags;
  auto* cross = app.add_subcommand("crosscheck", "Cross-module consistency harness")->fallthrough();
  cc_flags.attach(cross);
  cross->callback([&] {
    action = [&] {
      std::optional<NamedGroup> g;
      if (cc_flags.name || cc_flags.gens) g = resolve_group(cc_flags.name, cc_flags.gens);
      return crosscheck_report(g);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Report report = action();
    report.command = args;
    const Json j = report_to_json(report);
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw PreconditionError("cannot open " + out_file + " for writing");
      f << j.dump(2) << '\n';
    }
    if (json)
      out << j.dump(2) << '\n';
    else
      out << render_text(report);
    if (const auto* cc = std::get_if<CrosscheckPayload>(&report.payload); cc && !cc->passed) return 1;
    return 0;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fuscat
