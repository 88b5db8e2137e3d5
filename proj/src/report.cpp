#include "fuscat/report.hpp"

#include <algorithm>
#include <sstream>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

// ---- scalar encoding -------------------------------------------------------

Json num(std::uint64_t v) { return std::to_string(v); }
Json num(int v) { return std::to_string(v); }
Json num(const BigInt& v) { return v.get_str(); }
Json num(const Rational& v) { return v.get_str(); }

const std::string& text_of(const Json& j) {
  if (!j.is_string()) throw PreconditionError("expected a decimal string, got " + j.dump());
  return j.get_ref<const std::string&>();
}

std::uint64_t to_u64(const Json& j) {
  const auto& s = text_of(j);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw PreconditionError("not a non-negative integer: \"" + s + "\"");
  return std::stoull(s);
}

int to_int(const Json& j) {
  const auto& s = text_of(j);
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw PreconditionError("not an integer: \"" + s + "\"");
  return v;
}

BigInt to_big(const Json& j) {
  BigInt v;
  if (v.set_str(text_of(j), 10) != 0) throw PreconditionError("not an integer: \"" + text_of(j) + "\"");
  return v;
}

Rational to_rat(const Json& j) {
  Rational v;
  if (v.set_str(text_of(j), 10) != 0 || v.get_den() == 0)
    throw PreconditionError("not a rational: \"" + text_of(j) + "\"");
  v.canonicalize();
  return v;
}

bool to_bool(const Json& j) {
  if (!j.is_boolean()) throw PreconditionError("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

std::string to_str(const Json& j) {
  if (!j.is_string()) throw PreconditionError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

template <typename T, typename F>
std::vector<T> list_of(const Json& j, F&& decode) {
  if (!j.is_array()) throw PreconditionError("expected an array, got " + j.dump());
  std::vector<T> out;
  for (const auto& e : j) out.push_back(decode(e));
  return out;
}

Json u64_list(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(num(x));
  return out;
}

std::vector<std::uint64_t> u64_list_from(const Json& j) { return list_of<std::uint64_t>(j, to_u64); }

Json weight_json(const Weight& w) {
  Json out = Json::array();
  for (int c : w.coords) out.push_back(num(c));
  return out;
}

Weight weight_from(const Json& j) { return Weight{list_of<int>(j, to_int)}; }

Json verdict_json(const PrimeVerdict& v) {
  Json out{{"prime", num(v.prime)},
           {"verdict", to_string(v.verdict)},
           {"reason", to_string(v.reason)},
           {"detail", v.detail}};
  if (v.witness) out["witness"] = weight_json(*v.witness);
  if (v.witness_norm) out["witness_norm"] = num(*v.witness_norm);
  return out;
}

PrimeVerdict verdict_from(const Json& j) {
  PrimeVerdict v;
  v.prime = to_u64(j.at("prime"));
  v.verdict = verdict_from_string(to_str(j.at("verdict")));
  v.reason = reason_from_string(to_str(j.at("reason")));
  v.detail = to_str(j.at("detail"));
  if (j.contains("witness")) v.witness = weight_from(j.at("witness"));
  if (j.contains("witness_norm")) v.witness_norm = to_big(j.at("witness_norm"));
  return v;
}

Json bad_json(const std::vector<BadPrime>& bad) {
  Json out = Json::array();
  for (const auto& b : bad) out.push_back({{"prime", num(b.prime)}, {"witness", num(b.witness)}});
  return out;
}

std::vector<BadPrime> bad_from(const Json& j) {
  return list_of<BadPrime>(j, [](const Json& e) { return BadPrime{to_u64(e.at("prime")), to_u64(e.at("witness"))}; });
}

// ---- payload encoding ------------------------------------------------------

Json encode(const CycPayload& p) {
  Json out{{"expression", p.expression},
           {"n", num(p.n)},
           {"value", cyc_to_json(p.value)},
           {"norm", num(p.norm)},
           {"integral", p.integral}};
  if (p.p) out["p"] = num(*p.p);
  if (p.p_unit) out["p_unit"] = *p.p_unit;
  return out;
}

Json encode(const LemmaNormPayload& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows)
    rows.push_back({{"n", num(r.n)},
                    {"norm", num(r.norm)},
                    {"prime_power_base", num(r.prime_power_base)},
                    {"matches", r.matches}});
  return {{"nmax", num(p.nmax)}, {"rows", rows}, {"all_match", p.all_match}};
}

Json encode(const VerlindeSimplesPayload& p) {
  Json simples = Json::array();
  for (const auto& s : p.simples)
    simples.push_back({{"weight", weight_json(s.weight)},
                       {"qdim", cyc_to_json(s.qdim)},
                       {"norm", num(s.norm)},
                       {"dividing_primes", u64_list(s.dividing_primes)}});
  return {{"type", p.type}, {"l", num(p.l)}, {"coxeter", num(p.coxeter)}, {"pmax", num(p.pmax)}, {"simples", simples}};
}

Json encode(const VerlindeClassifyPayload& p) {
  Json scan = Json::array();
  for (const auto& w : p.scan) scan.push_back(weight_json(w));
  return {{"type", p.type},
          {"l", num(p.l)},
          {"coxeter", num(p.coxeter)},
          {"verdict", verdict_json(p.verdict)},
          {"scan", scan}};
}

Json encode(const VerlindeBadPrimesPayload& p) {
  Json verdicts = Json::array();
  for (const auto& v : p.verdicts) verdicts.push_back(verdict_json(v));
  return {{"type", p.type},
          {"l", num(p.l)},
          {"coxeter", num(p.coxeter)},
          {"pmax", num(p.pmax)},
          {"verdicts", verdicts},
          {"bad_primes", u64_list(p.bad)},
          {"scan_flagged", u64_list(p.scan_flagged)}};
}

Json encode(const GroupPayload& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes) classes.push_back({{"rep", c.representative}, {"size", num(c.size)}});
  return {{"group", p.group},
          {"order", num(p.order)},
          {"exponent", num(p.exponent)},
          {"field_prime", num(p.field_prime)},
          {"classes", classes},
          {"degrees", u64_list(p.degrees)},
          {"bad_primes", bad_json(p.bad)},
          {"good_dividing_order", u64_list(p.good_dividing_order)}};
}

Json encode(const GtcatPayload& p) {
  Json cosets = Json::array();
  for (const auto& c : p.double_cosets) cosets.push_back({{"rep", c.representative}, {"size", num(c.size)}});
  Json simples = Json::array();
  for (const auto& s : p.simples)
    simples.push_back({{"rep", s.representative},
                       {"stab_order", num(s.stab_order)},
                       {"degree", num(s.degree)},
                       {"dim", num(s.dim)}});
  return {{"group", p.group},
          {"subgroup", p.subgroup},
          {"group_order", num(p.group_order)},
          {"subgroup_order", num(p.subgroup_order)},
          {"double_cosets", cosets},
          {"simples", simples},
          {"sum_of_squares", num(p.sum_of_squares)},
          {"bad_primes", bad_json(p.bad)},
          {"good_dividing_order", u64_list(p.good_dividing_order)}};
}

Json encode(const ItoMichlerPayload& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows)
    rows.push_back({{"prime", num(r.prime)},
                    {"applicable", r.applicable},
                    {"reason", r.reason},
                    {"sylow_order", num(r.sylow_order)},
                    {"complement_order", num(r.complement_order)},
                    {"closed", r.closed},
                    {"abelian", r.abelian},
                    {"normal", r.normal},
                    {"sylow_elements", r.sylow_elements}});
  return {{"group", p.group}, {"order", num(p.order)}, {"primes", rows}};
}

Json encode(const ClassicalAmplitudePayload& p) {
  return {{"normalization", p.normalization},
          {"t2", num(p.t2)},
          {"t4_raw", num(p.t4_raw)},
          {"value", num(p.value)},
          {"casimir", num(p.casimir)},
          {"operator_coeff", num(p.operator_coeff)},
          {"traced_coeff", num(p.traced_coeff)},
          {"loop_formula", num(p.loop_formula)}};
}

Json encode(const QuantumAmplitudePayload& p) {
  Json certs = Json::array();
  for (const auto& c : p.certificates)
    certs.push_back({{"prime", num(c.prime)}, {"divides_denominator_norm", c.divides_denominator_norm}});
  return {{"normalization", p.normalization},
          {"l", num(p.l)},
          {"q3", cyc_to_json(p.q3)},
          {"value", cyc_to_json(p.value)},
          {"value_squared", cyc_to_json(p.value_squared)},
          {"value_norm", num(p.value_norm)},
          {"denominator_norm", num(p.denominator_norm)},
          {"certificates", certs},
          {"bad_primes", u64_list(p.bad)}};
}

Json encode(const CrosscheckPayload& p) {
  Json checks = Json::array();
  for (const auto& c : p.checks)
    checks.push_back({{"subject", c.subject}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"passed", p.passed}};
}

// ---- payload decoding ------------------------------------------------------

Payload decode_payload(const std::string& kind, const Json& j) {
  if (kind == "cyc") {
    CycPayload p;
    p.expression = to_str(j.at("expression"));
    p.n = to_u64(j.at("n"));
    p.value = cyc_from_json(j.at("value"));
    p.norm = to_rat(j.at("norm"));
    p.integral = to_bool(j.at("integral"));
    if (j.contains("p")) p.p = to_u64(j.at("p"));
    if (j.contains("p_unit")) p.p_unit = to_bool(j.at("p_unit"));
    return p;
  }
  if (kind == "lemma-norm") {
    LemmaNormPayload p;
    p.nmax = to_u64(j.at("nmax"));
    p.rows = list_of<LemmaNormRow>(j.at("rows"), [](const Json& r) {
      return LemmaNormRow{to_u64(r.at("n")), to_rat(r.at("norm")), to_u64(r.at("prime_power_base")),
                          to_bool(r.at("matches"))};
    });
    p.all_match = to_bool(j.at("all_match"));
    return p;
  }
  if (kind == "verlinde.simples") {
    VerlindeSimplesPayload p;
    p.type = to_str(j.at("type"));
    p.l = to_int(j.at("l"));
    p.coxeter = to_int(j.at("coxeter"));
    p.pmax = to_u64(j.at("pmax"));
    p.simples = list_of<VerlindeSimpleRow>(j.at("simples"), [](const Json& s) {
      return VerlindeSimpleRow{weight_from(s.at("weight")), cyc_from_json(s.at("qdim")), to_big(s.at("norm")),
                               u64_list_from(s.at("dividing_primes"))};
    });
    return p;
  }
  if (kind == "verlinde.classify") {
    VerlindeClassifyPayload p;
    p.type = to_str(j.at("type"));
    p.l = to_int(j.at("l"));
    p.coxeter = to_int(j.at("coxeter"));
    p.verdict = verdict_from(j.at("verdict"));
    p.scan = list_of<Weight>(j.at("scan"), weight_from);
    return p;
  }
  if (kind == "verlinde.badprimes") {
    VerlindeBadPrimesPayload p;
    p.type = to_str(j.at("type"));
    p.l = to_int(j.at("l"));
    p.coxeter = to_int(j.at("coxeter"));
    p.pmax = to_u64(j.at("pmax"));
    p.verdicts = list_of<PrimeVerdict>(j.at("verdicts"), verdict_from);
    p.bad = u64_list_from(j.at("bad_primes"));
    p.scan_flagged = u64_list_from(j.at("scan_flagged"));
    return p;
  }
  if (kind == "group") {
    GroupPayload p;
    p.group = to_str(j.at("group"));
    p.order = to_u64(j.at("order"));
    p.exponent = to_u64(j.at("exponent"));
    p.field_prime = to_u64(j.at("field_prime"));
    p.classes = list_of<ClassRow>(j.at("classes"),
                                  [](const Json& c) { return ClassRow{to_str(c.at("rep")), to_u64(c.at("size"))}; });
    p.degrees = u64_list_from(j.at("degrees"));
    p.bad = bad_from(j.at("bad_primes"));
    p.good_dividing_order = u64_list_from(j.at("good_dividing_order"));
    return p;
  }
  if (kind == "gtcat") {
    GtcatPayload p;
    p.group = to_str(j.at("group"));
    p.subgroup = to_str(j.at("subgroup"));
    p.group_order = to_u64(j.at("group_order"));
    p.subgroup_order = to_u64(j.at("subgroup_order"));
    p.double_cosets = list_of<CosetRow>(
        j.at("double_cosets"), [](const Json& c) { return CosetRow{to_str(c.at("rep")), to_u64(c.at("size"))}; });
    p.simples = list_of<GTSimpleRow>(j.at("simples"), [](const Json& s) {
      return GTSimpleRow{to_str(s.at("rep")), to_u64(s.at("stab_order")), to_u64(s.at("degree")),
                         to_u64(s.at("dim"))};
    });
    p.sum_of_squares = to_u64(j.at("sum_of_squares"));
    p.bad = bad_from(j.at("bad_primes"));
    p.good_dividing_order = u64_list_from(j.at("good_dividing_order"));
    return p;
  }
  if (kind == "ito-michler") {
    ItoMichlerPayload p;
    p.group = to_str(j.at("group"));
    p.order = to_u64(j.at("order"));
    p.rows = list_of<ItoMichlerRow>(j.at("primes"), [](const Json& r) {
      ItoMichlerRow row;
      row.prime = to_u64(r.at("prime"));
      row.applicable = to_bool(r.at("applicable"));
      row.reason = to_str(r.at("reason"));
      row.sylow_order = to_u64(r.at("sylow_order"));
      row.complement_order = to_u64(r.at("complement_order"));
      row.closed = to_bool(r.at("closed"));
      row.abelian = to_bool(r.at("abelian"));
      row.normal = to_bool(r.at("normal"));
      row.sylow_elements = list_of<std::string>(r.at("sylow_elements"), to_str);
      return row;
    });
    return p;
  }
  if (kind == "amplitude.classical") {
    ClassicalAmplitudePayload p;
    p.normalization = to_str(j.at("normalization"));
    p.t2 = to_rat(j.at("t2"));
    p.t4_raw = to_rat(j.at("t4_raw"));
    p.value = to_rat(j.at("value"));
    p.casimir = to_rat(j.at("casimir"));
    p.operator_coeff = to_rat(j.at("operator_coeff"));
    p.traced_coeff = to_rat(j.at("traced_coeff"));
    p.loop_formula = to_rat(j.at("loop_formula"));
    return p;
  }
  if (kind == "amplitude.quantum") {
    QuantumAmplitudePayload p;
    p.normalization = to_str(j.at("normalization"));
    p.l = to_u64(j.at("l"));
    p.q3 = cyc_from_json(j.at("q3"));
    p.value = cyc_from_json(j.at("value"));
    p.value_squared = cyc_from_json(j.at("value_squared"));
    p.value_norm = to_rat(j.at("value_norm"));
    p.denominator_norm = to_big(j.at("denominator_norm"));
    p.certificates = list_of<DenominatorCertificate>(j.at("certificates"), [](const Json& c) {
      return DenominatorCertificate{to_u64(c.at("prime")), to_bool(c.at("divides_denominator_norm"))};
    });
    p.bad = u64_list_from(j.at("bad_primes"));
    return p;
  }
  if (kind == "crosscheck") {
    CrosscheckPayload p;
    p.checks = list_of<CheckRow>(j.at("checks"), [](const Json& c) {
      return CheckRow{to_str(c.at("subject")), to_str(c.at("check")), to_bool(c.at("passed")),
                      to_str(c.at("detail"))};
    });
    p.passed = to_bool(j.at("passed"));
    return p;
  }
  throw PreconditionError("unknown report kind \"" + kind + "\"");
}

// ---- text rendering --------------------------------------------------------

class Table {
public:
  explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void render(std::ostream& os) const {
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) {
      width[c] = headers_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      s.erase(s.find_last_not_of(' ') + 1);
      os << s << '\n';
    };
    line(headers_);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows_) line(r);
  }

private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

std::string join_bad(const std::vector<BadPrime>& bad) {
  std::vector<std::uint64_t> primes;
  for (const auto& b : bad) primes.push_back(b.prime);
  return join(primes);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void render_verdicts(std::ostream& os, const std::vector<PrimeVerdict>& verdicts) {
  Table t({"p", "verdict", "reason", "witness", "witness norm", "detail"});
  for (const auto& v : verdicts)
    t.add({std::to_string(v.prime), to_string(v.verdict), to_string(v.reason),
           v.witness ? v.witness->to_string() : "", v.witness_norm ? v.witness_norm->get_str() : "", v.detail});
  t.render(os);
}

void render(std::ostream& os, const CycPayload& p) {
  os << "element    " << p.expression << "  (n = " << p.n << ")\n"
     << "value      " << p.value.to_string() << "  at conductor " << p.value.conductor() << '\n'
     << "norm       " << p.norm.get_str() << '\n'
     << "integral   " << yes_no(p.integral) << '\n';
  if (p.p) os << "p-unit     " << (p.p_unit ? yes_no(*p.p_unit) : "n/a") << "  (p = " << *p.p << ")\n";
}

void render(std::ostream& os, const LemmaNormPayload& p) {
  Table t({"n", "N(1 - zeta_n)", "prime power of", "matches"});
  for (const auto& r : p.rows)
    t.add({std::to_string(r.n), r.norm.get_str(), r.prime_power_base ? std::to_string(r.prime_power_base) : "-",
           yes_no(r.matches)});
  t.render(os);
  os << "all rows match the prime-power rule: " << yes_no(p.all_match) << '\n';
}

void render(std::ostream& os, const VerlindeSimplesPayload& p) {
  os << p.type << ", l = " << p.l << ", h = " << p.coxeter << ", " << p.simples.size() << " simples\n";
  Table t({"weight", "dim", "norm", "primes <= " + std::to_string(p.pmax) + " dividing norm"});
  for (const auto& s : p.simples) t.add({s.weight.to_string(), s.qdim.to_string(), s.norm.get_str(), join(s.dividing_primes)});
  t.render(os);
}

void render(std::ostream& os, const VerlindeClassifyPayload& p) {
  os << p.type << ", l = " << p.l << ", h = " << p.coxeter << '\n';
  render_verdicts(os, {p.verdict});
  os << "dimension scan (p | norm):";
  if (p.scan.empty()) os << " none";
  for (const auto& w : p.scan) os << ' ' << w.to_string();
  os << '\n';
}

void render(std::ostream& os, const VerlindeBadPrimesPayload& p) {
  os << p.type << ", l = " << p.l << ", h = " << p.coxeter << ", primes <= " << p.pmax << '\n';
  render_verdicts(os, p.verdicts);
  os << "bad primes: " << join(p.bad) << '\n' << "dimension scan flags: " << join(p.scan_flagged) << '\n';
}

void render(std::ostream& os, const GroupPayload& p) {
  os << p.group << ": order " << p.order << ", exponent " << p.exponent << ", " << p.classes.size()
     << " classes, class field F_" << p.field_prime << '\n';
  Table t({"class", "representative", "size"});
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    t.add({std::to_string(i), p.classes[i].representative, std::to_string(p.classes[i].size)});
  t.render(os);
  os << "degrees: " << join(p.degrees) << '\n';
  Table b({"bad prime", "witness degree"});
  for (const auto& x : p.bad) b.add({std::to_string(x.prime), std::to_string(x.witness)});
  b.render(os);
  os << "good primes dividing |G|: " << join(p.good_dividing_order) << '\n';
}

void render(std::ostream& os, const GtcatPayload& p) {
  os << "G = " << p.group << " (order " << p.group_order << "), H = " << p.subgroup << " (order " << p.subgroup_order
     << ")\n";
  Table c({"double coset rep", "size"});
  for (const auto& x : p.double_cosets) c.add({x.representative, std::to_string(x.size)});
  c.render(os);
  Table s({"rep", "|H^g|", "degree", "dim"});
  for (const auto& x : p.simples)
    s.add({x.representative, std::to_string(x.stab_order), std::to_string(x.degree), std::to_string(x.dim)});
  s.render(os);
  os << "sum of squared dimensions: " << p.sum_of_squares << '\n'
     << "bad primes: " << join_bad(p.bad) << '\n'
     << "good primes dividing |G|: " << join(p.good_dividing_order) << '\n';
}

void render(std::ostream& os, const ItoMichlerPayload& p) {
  os << p.group << ": order " << p.order << '\n';
  Table t({"p", "applicable", "|S|", "|K|", "closed", "abelian", "normal", "note"});
  for (const auto& r : p.rows)
    t.add({std::to_string(r.prime), yes_no(r.applicable), std::to_string(r.sylow_order),
           std::to_string(r.complement_order), yes_no(r.closed), yes_no(r.abelian), yes_no(r.normal), r.reason});
  t.render(os);
}

void render(std::ostream& os, const ClassicalAmplitudePayload& p) {
  os << "sl(2) adjoint, " << p.normalization << '\n'
     << "A(T2) unnormalized      " << p.t2.get_str() << '\n'
     << "A(T4) unnormalized      " << p.t4_raw.get_str() << '\n'
     << "A(T4) normalized        " << p.value.get_str() << '\n'
     << "Casimir                 " << p.casimir.get_str() << '\n'
     << "quartic word, operator  " << p.operator_coeff.get_str() << '\n'
     << "quartic word, traced    " << p.traced_coeff.get_str() << '\n'
     << "loop formula at [3]=3   " << p.loop_formula.get_str() << '\n';
}

void render(std::ostream& os, const QuantumAmplitudePayload& p) {
  os << "l = " << p.l << ", " << p.normalization << '\n'
     << "[3]_q          " << p.q3.to_string() << '\n'
     << "A(T4)          " << p.value.to_string() << '\n'
     << "A(T4)^2        " << p.value_squared.to_string() << '\n'
     << "N(A(T4))       " << p.value_norm.get_str() << '\n'
     << "N(denominator) " << p.denominator_norm.get_str() << '\n'
     << "primes dividing the denominator norm: " << join(p.bad) << '\n';
}

void render(std::ostream& os, const CrosscheckPayload& p) {
  Table t({"subject", "check", "result", "detail"});
  for (const auto& c : p.checks) t.add({c.subject, c.check, c.passed ? "PASS" : "FAIL", c.detail});
  t.render(os);
  os << (p.passed ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace

std::string payload_kind(const Payload& p) {
  static const char* const kinds[] = {"cyc",
                                      "lemma-norm",
                                      "verlinde.simples",
                                      "verlinde.classify",
                                      "verlinde.badprimes",
                                      "group",
                                      "gtcat",
                                      "ito-michler",
                                      "amplitude.classical",
                                      "amplitude.quantum",
                                      "crosscheck"};
  static_assert(std::size(kinds) == std::variant_size_v<Payload>);
  return kinds[p.index()];
}

Json cyc_to_json(const CycNum& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.numerator()) coeffs.push_back(num(c));
  return {{"conductor", num(a.conductor())}, {"numerator", coeffs}, {"denominator", num(a.denominator())}};
}

CycNum cyc_from_json(const Json& j) {
  const std::uint64_t n = to_u64(j.at("conductor"));
  if (n == 0) throw PreconditionError("conductor must be positive");
  auto coeffs = list_of<BigInt>(j.at("numerator"), to_big);
  const BigInt den = to_big(j.at("denominator"));
  if (den <= 0) throw PreconditionError("denominator must be positive");
  return CycNum(n, std::move(coeffs), den);
}

Json report_to_json(const Report& r) {
  Json hyp = Json::object();
  for (const auto& [k, v] : r.provenance.hypotheses) hyp[k] = v;
  return {{"command", r.command},
          {"kind", payload_kind(r.payload)},
          {"result", std::visit([](const auto& p) { return encode(p); }, r.payload)},
          {"provenance",
           {{"q_convention", r.provenance.q_convention},
            {"cocycles", r.provenance.cocycles},
            {"enumeration_cap", num(static_cast<std::uint64_t>(r.provenance.enumeration_cap))},
            {"hypotheses", hyp}}}};
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.command = list_of<std::string>(j.at("command"), to_str);
    r.payload = decode_payload(to_str(j.at("kind")), j.at("result"));
    const auto& prov = j.at("provenance");
    r.provenance.q_convention = to_str(prov.at("q_convention"));
    r.provenance.cocycles = to_str(prov.at("cocycles"));
    r.provenance.enumeration_cap = to_u64(prov.at("enumeration_cap"));
    for (const auto& [k, v] : prov.at("hypotheses").items()) r.provenance.hypotheses[k] = to_str(v);
    return r;
  } catch (const PreconditionError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw PreconditionError(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  std::visit([&](const auto& p) { render(os, p); }, r.payload);
  os << "\nprovenance: " << r.provenance.q_convention << "; cocycles " << r.provenance.cocycles
     << "; enumeration cap " << r.provenance.enumeration_cap << '\n';
  for (const auto& [k, v] : r.provenance.hypotheses) os << "  " << k << ": " << v << '\n';
  return os.str();
}

}  // namespace fuscat
