#include "fuscat/finitegroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("Perm: image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  Perm out;
  out.images_ = std::move(inv);
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Perm out = *this;
  for (auto i = static_cast<std::uint32_t>(images_.size()); i < degree; ++i) out.images_.push_back(i);
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    const std::size_t n = std::max(a.degree(), b.degree());
    return a.extended(n) * b.extended(n);
  }
  Perm out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << "(";
    bool first = true;
    for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw PreconditionError("cannot parse permutation \"" + std::string(text) + "\": " + msg);
  };
  std::size_t max_point = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t point = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), point);
      if (ec != std::errc() || point == 0) fail("points are positive integers");
      i = static_cast<std::size_t>(ptr - text.data());
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) fail("repeated point in a cycle");
      cycle.push_back(point - 1);
      max_point = std::max<std::size_t>(max_point, point);
    }
    cycles.push_back(std::move(cycle));
  }
  const std::size_t n = std::max(degree, max_point);
  Perm result = Perm::identity(n);
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    result = result * Perm(std::move(images));
  }
  return result;
}

std::vector<Perm> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  pieces.push_back(text.substr(start));
  std::vector<Perm> gens;
  for (auto piece : pieces) {
    const bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) continue;
    gens.push_back(parse_cycles(piece, degree));
  }
  if (gens.empty()) throw PreconditionError("no generators given");
  std::size_t n = degree;
  for (const auto& g : gens) n = std::max(n, g.degree());
  for (auto& g : gens) g = g.extended(n);
  return gens;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("FUSCAT_ENUM_CAP")) {
    std::size_t cap = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc() || ptr != s.data() + s.size() || cap == 0)
      throw PreconditionError("FUSCAT_ENUM_CAP must be a positive integer, got \"" + std::string(s) + "\"");
    return cap;
  }
  return 20000;
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::enumerate(std::vector<Perm> generators, std::size_t cap) {
  std::size_t n = 0;
  for (const auto& g : generators) n = std::max(n, g.degree());
  for (auto& g : generators) g = g.extended(n);

  PermGroup grp;
  grp.degree_ = n;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  const Perm id = Perm::identity(n);
  seen.insert(id);
  frontier.push_back(id);
  std::vector<Perm> elements{id};
  while (!frontier.empty()) {
    const Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw PreconditionError("group order exceeds the enumeration cap " + std::to_string(cap) +
                                  "; raise it with FUSCAT_ENUM_CAP");
        elements.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  std::erase_if(generators, [](const Perm& g) { return g.is_identity(); });
  grp.generators_ = std::move(generators);
  grp.elements_ = std::move(elements);
  grp.index_and_classify();
  return grp;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw PreconditionError("from_elements: empty element list");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup grp;
  grp.degree_ = elements.front().degree();
  // greedy generating set: add an element whenever it is not yet generated
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> generated{Perm::identity(grp.degree_)};
  for (const auto& x : elements) {
    if (generated.contains(x)) continue;
    gens.push_back(x);
    std::vector<Perm> current(generated.begin(), generated.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (const auto& g : gens) {
        Perm y = current[i] * g;
        if (generated.insert(y).second) current.push_back(std::move(y));
      }
  }
  if (generated.size() != elements.size()) throw PreconditionError("from_elements: element set is not closed");
  grp.generators_ = std::move(gens);
  grp.elements_ = std::move(elements);
  grp.index_and_classify();
  return grp;
}

void PermGroup::index_and_classify() {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  if (!elements_.front().is_identity()) throw InternalError("identity missing from group");

  // conjugation orbits under the generators
  const std::vector<Perm>& conj = generators_;
  std::vector<Perm> conj_inv;
  for (const auto& g : conj) conj_inv.push_back(g.inverse());
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  class_index_.assign(elements_.size(), unassigned);
  classes_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_index_[i] != unassigned) continue;
    ConjugacyClass cls{i, {i}};
    class_index_[i] = classes_.size();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const Perm& x = elements_[cls.members[k]];
      for (std::size_t g = 0; g < conj.size(); ++g) {
        const auto idx = index_of(conj_inv[g] * x * conj[g]);
        if (!idx) throw PreconditionError("element set is not closed under conjugation");
        if (class_index_[*idx] == unassigned) {
          class_index_[*idx] = classes_.size();
          cls.members.push_back(*idx);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p.degree() == degree_ ? p : p.extended(degree_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::product(std::size_t i, std::size_t j) const {
  return *index_of(elements_[i] * elements_[j]);
}

std::size_t PermGroup::inverse(std::size_t i) const { return *index_of(elements_[i].inverse()); }

std::size_t PermGroup::inverse_class(std::size_t k) const {
  return class_of(inverse(classes_[k].representative));
}

std::uint64_t PermGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& cls : classes_) e = std::lcm(e, elements_[cls.representative].order());
  return e;
}

bool PermGroup::is_abelian() const { return classes_.size() == elements_.size(); }

// ---------------------------------------------------------------- builtins

namespace {

Perm cycle_perm(std::size_t n, std::uint32_t first, std::uint32_t last) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  for (std::uint32_t i = first; i < last; ++i) images[i] = i + 1;
  images[last] = first;
  return Perm(std::move(images));
}

std::vector<Perm> sl23_generators() {
  // action of [[1,1],[0,1]] and [[0,2],[1,0]] on the nonzero vectors of F_3^2
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<std::uint32_t> images;
    for (auto [x, y] : vecs) {
      const std::pair<int, int> w{(m00 * x + m01 * y) % 3, (m10 * x + m11 * y) % 3};
      images.push_back(static_cast<std::uint32_t>(std::find(vecs.begin(), vecs.end(), w) - vecs.begin()));
    }
    return Perm(std::move(images));
  };
  return {act(1, 1, 0, 1), act(0, 2, 1, 0)};
}

int parse_index(std::string_view digits, std::string_view name) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1)
    throw PreconditionError("unknown group \"" + std::string(name) + "\"");
  return n;
}

}  // namespace

std::vector<Perm> builtin_generators(std::string_view name) {
  if (const auto x = name.find('x'); x != std::string_view::npos) {
    auto left = builtin_generators(name.substr(0, x));
    auto right = builtin_generators(name.substr(x + 1));
    std::size_t dl = 0, dr = 0;
    for (const auto& g : left) dl = std::max(dl, g.degree());
    for (const auto& g : right) dr = std::max(dr, g.degree());
    std::vector<Perm> gens;
    for (const auto& g : left) gens.push_back(g.extended(dl + dr));
    for (const auto& g : right) {
      std::vector<std::uint32_t> images(dl + dr);
      std::iota(images.begin(), images.end(), 0U);
      const Perm ge = g.extended(dr);
      for (std::size_t i = 0; i < dr; ++i) images[dl + i] = static_cast<std::uint32_t>(dl + ge(i));
      gens.emplace_back(std::move(images));
    }
    return gens;
  }
  if (name == "Q8") return parse_generators("(1 2 4 7)(3 6 8 5), (1 3 4 8)(2 5 7 6)");
  if (name == "SL23") return sl23_generators();
  if (name.size() < 2) throw PreconditionError("unknown group \"" + std::string(name) + "\"");
  const int n = parse_index(name.substr(1), name);
  const auto un = static_cast<std::uint32_t>(n);
  switch (name[0]) {
    case 'S':
      if (n > 8) break;
      if (n == 1) return {Perm::identity(1)};
      return {cycle_perm(un, 0, 1), cycle_perm(un, 0, un - 1)};
    case 'A':
      if (n > 8) break;
      if (n < 3) return {Perm::identity(std::max(n, 1))};
      return {cycle_perm(un, 0, 2), n % 2 == 1 ? cycle_perm(un, 0, un - 1) : cycle_perm(un, 1, un - 1)};
    case 'C':
      if (n == 1) return {Perm::identity(1)};
      return {cycle_perm(un, 0, un - 1)};
    case 'D': {
      if (n % 2 != 0 || n < 4) break;
      const std::uint32_t m = un / 2;
      if (m == 2) return parse_generators("(1 2)(3 4), (1 3)(2 4)");
      std::vector<std::uint32_t> refl(m);
      for (std::uint32_t i = 0; i < m; ++i) refl[i] = (m - i) % m;
      return {cycle_perm(m, 0, m - 1), Perm(std::move(refl))};
    }
    default:
      break;
  }
  throw PreconditionError("unknown group \"" + std::string(name) +
                          "\" (expected S<n>, A<n> with n <= 8, D<2m>, C<n>, Q8, SL23, or XxY)");
}

PermGroup builtin_group(std::string_view name) { return PermGroup::enumerate(builtin_generators(name)); }

std::vector<std::string> builtin_corpus() {
  return {"S3", "S4", "S5", "S6", "A4", "A5", "A6", "D6", "D8", "D10", "D12", "D16", "D20",
          "D24", "D30", "D40", "C1", "C7", "C12", "Q8", "SL23", "S3xC4", "S3xS3", "Q8xC3", "A4xC2"};
}

// ---------------------------------------------------------------- queries

RepPrimeReport rep_bad_primes(const PermGroup& g) { return rep_bad_primes(g, char_degrees(g)); }

RepPrimeReport rep_bad_primes(const PermGroup& g, const DegreeVector& degrees) {
  RepPrimeReport report;
  for (auto p : prime_divisors(g.order())) {
    auto it = std::find_if(degrees.degrees.begin(), degrees.degrees.end(),
                           [p](std::uint64_t d) { return d % p == 0; });
    if (it != degrees.degrees.end())
      report.bad.push_back(BadPrime{p, *it});
    else
      report.good_dividing_order.push_back(p);
  }
  return report;
}

ItoMichlerReport ito_michler_verify(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("ito_michler_verify: " + std::to_string(p) + " is not prime");
  ItoMichlerReport report;
  report.prime = p;
  if (g.order() % p != 0) {
    report.not_applicable_reason = std::to_string(p) + " does not divide |G| = " + std::to_string(g.order());
    return report;
  }
  for (auto d : char_degrees(g).degrees) {
    if (d % p == 0) {
      report.not_applicable_reason = std::to_string(p) + " divides the character degree " + std::to_string(d);
      return report;
    }
  }
  report.applicable = true;
  auto violation = [&](const std::string& what) {
    throw InternalError("Ito-Michler violation for p = " + std::to_string(p) + ": " + what);
  };

  std::vector<std::size_t> sylow;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const std::uint64_t ord = g.element(i).order();
    if (p_part(ord, p) == ord) sylow.push_back(i);
  }
  report.sylow_order = sylow.size();
  if (report.sylow_order != p_part(g.order(), p))
    violation("the p-elements number " + std::to_string(sylow.size()) + ", not the p-part of |G|");
  std::vector<bool> in_sylow(g.order(), false);
  for (auto i : sylow) in_sylow[i] = true;

  report.closed = true;
  report.abelian = true;
  for (auto a : sylow)
    for (auto b : sylow) {
      const std::size_t ab = g.product(a, b);
      if (!in_sylow[ab]) report.closed = false;
      if (ab != g.product(b, a)) report.abelian = false;
    }
  report.normal = true;
  for (const auto& x : g.generators()) {
    const Perm xi = x.inverse();
    for (auto s : sylow)
      if (!in_sylow[*g.index_of(xi * g.element(s) * x)]) report.normal = false;
  }
  if (!report.closed) violation("the p-elements are not closed under multiplication");
  if (!report.abelian) violation("the Sylow subgroup is not abelian");
  if (!report.normal) violation("the Sylow subgroup is not normal");
  report.complement_order = g.order() / report.sylow_order;
  if (report.complement_order % p == 0) violation("the complement order is divisible by p");
  for (auto i : sylow) report.sylow_elements.push_back(g.element(i));
  return report;
}

PermGroup subgroup(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<Perm> padded;
  for (const auto& x : gens) {
    if (x.degree() > g.degree()) {
      for (auto i = g.degree(); i < x.degree(); ++i)
        if (x(static_cast<std::uint32_t>(i)) != i)
          throw PreconditionError("generator " + x.to_cycle_string() + " moves points outside G");
    }
    std::vector<std::uint32_t> images(x.images().begin(), x.images().begin() + std::min(x.degree(), g.degree()));
    Perm y = Perm(std::move(images)).extended(g.degree());
    if (!g.contains(y)) throw PreconditionError("generator " + x.to_cycle_string() + " is not an element of G");
    padded.push_back(std::move(y));
  }
  if (padded.empty()) padded.push_back(Perm::identity(g.degree()));
  return PermGroup::enumerate(std::move(padded), g.order());
}

std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw PreconditionError("H is not a subgroup of G: " + x.to_cycle_string() + " not in G");
  std::vector<bool> assigned(g.order(), false);
  std::vector<DoubleCoset> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    assigned[i] = true;
    std::vector<std::size_t> members{i};
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Perm& x = g.element(members[k]);
      for (const auto& s : h.generators()) {
        for (const Perm& y : {s * x, x * s}) {
          const std::size_t j = *g.index_of(y);
          if (!assigned[j]) {
            assigned[j] = true;
            members.push_back(j);
          }
        }
      }
    }
    out.push_back(DoubleCoset{g.element(i), members.size()});
  }
  return out;
}

PermGroup stabilizer_intersection(const PermGroup& g, const PermGroup& h, const Perm& x) {
  const auto xi = g.index_of(x);
  if (!xi) throw PreconditionError("element " + x.to_cycle_string() + " is not in G");
  const Perm& xe = g.element(*xi);
  const Perm x_inv = xe.inverse();
  std::vector<Perm> kept;
  for (const auto& e : h.elements()) {
    const Perm ge = e.extended(g.degree());
    if (h.contains(x_inv * ge * xe)) kept.push_back(ge);
  }
  return PermGroup::from_elements(std::move(kept));
}

}  // namespace fuscat
