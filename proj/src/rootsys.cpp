#include "fuscat/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "fuscat/errors.hpp"

namespace fuscat {

std::string TypeLabel::to_string() const {
  const char letter = type == RootType::A ? 'A' : type == RootType::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank);
}

TypeLabel parse_type_label(std::string_view label) {
  if (label.size() < 2) throw PreconditionError("invalid root system label \"" + std::string(label) + "\"");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  const auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw PreconditionError("invalid root system label \"" + std::string(label) + "\"");
  if (letter == 'B' || letter == 'C' || letter == 'F' || letter == 'G')
    throw PreconditionError("root system " + std::string(label) +
                            " is not simply laced; only types A, D and E are supported");
  if (rank > kMaxRank) throw PreconditionError("rank " + std::to_string(rank) + " exceeds the cap " +
                                               std::to_string(kMaxRank));
  switch (letter) {
    case 'A':
      if (rank >= 1) return {RootType::A, rank};
      break;
    case 'D':
      if (rank >= 4) return {RootType::D, rank};
      break;
    case 'E':
      if (rank >= 6) return {RootType::E, rank};
      break;
    default:
      break;
  }
  throw PreconditionError("invalid root system label \"" + std::string(label) +
                          "\" (expected A1-A8, D4-D8, E6-E8)");
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ")";
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(const TypeLabel& label) {
  std::vector<std::pair<int, int>> edges;
  const int n = label.rank;
  switch (label.type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case RootType::D:
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case RootType::E:
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to node 4
      edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      break;
  }
  return edges;
}

int expected_coxeter_number(const TypeLabel& label) {
  switch (label.type) {
    case RootType::A: return label.rank + 1;
    case RootType::D: return 2 * label.rank - 2;
    case RootType::E: return label.rank == 6 ? 12 : label.rank == 7 ? 18 : 30;
  }
  return 0;
}

}  // namespace

int RootSystem::height(const RootCoords& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

int RootSystem::shifted_pairing(const Weight& lambda, const RootCoords& alpha) const {
  int s = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) s += alpha[j] * (lambda.coords[j] + 1);
  return s;
}

RootSystem build_root_system(const TypeLabel& label) {
  RootSystem rs;
  rs.label_ = label;
  const int n = label.rank;
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan_[i][i] = 2;
  for (auto [a, b] : dynkin_edges(label)) rs.cartan_[a][b] = rs.cartan_[b][a] = -1;

  // Grow roots level by level: beta + alpha_i is a root iff the alpha_i-string
  // through beta extends upward, i.e. q = p - <beta, alpha_i> > 0.
  std::set<RootCoords> known;
  std::vector<RootCoords> level;
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  std::vector<RootCoords> all = level;
  while (!level.empty()) {
    std::set<RootCoords> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (RootCoords down = beta;;) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += beta[j] * rs.cartan_[j][i];
        if (p - pair > 0) {
          RootCoords up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) known.insert(r);
    all.insert(all.end(), level.begin(), level.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = RootSystem::height(a), hb = RootSystem::height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.positive_roots_ = std::move(all);

  const int top = RootSystem::height(rs.positive_roots_.back());
  const auto at_top = std::count_if(rs.positive_roots_.begin(), rs.positive_roots_.end(),
                                    [top](const RootCoords& r) { return RootSystem::height(r) == top; });
  if (at_top != 1) throw InternalError("root closure produced no unique highest root for " + label.to_string());
  rs.coxeter_ = top + 1;
  if (rs.coxeter_ != expected_coxeter_number(label))
    throw InternalError("Coxeter number mismatch for " + label.to_string());
  if (static_cast<int>(rs.positive_roots_.size()) * 2 != rs.coxeter_ * n)
    throw InternalError("positive root count mismatch for " + label.to_string());
  return rs;
}

RootSystem build_root_system(std::string_view label) { return build_root_system(parse_type_label(label)); }

bool in_alcove(const RootSystem& rs, int l, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank()) return false;
  if (std::any_of(lambda.coords.begin(), lambda.coords.end(), [](int c) { return c < 0; })) return false;
  return rs.shifted_pairing(lambda, rs.highest_root()) < l;
}

std::vector<Weight> enumerate_alcove(const RootSystem& rs, int l) {
  const int h = rs.coxeter_number();
  if (l <= h)
    throw PreconditionError("level l = " + std::to_string(l) + " must exceed the Coxeter number h = " +
                            std::to_string(h) + " of " + rs.label().to_string());
  const RootCoords& marks = rs.highest_root();
  const int n = rs.rank();
  std::vector<Weight> out;
  std::vector<int> coords(n, 0);
  // slack = l - 1 - (rho, theta) - sum_j c_j lambda_j over the coordinates fixed so far
  int base = 0;
  for (int c : marks) base += c;
  if (base > l - 1) return out;
  auto bounded = [&](auto&& self, int j, int slack) -> void {
    if (j == n) {
      out.push_back(Weight{coords});
      return;
    }
    for (int v = 0; marks[j] * v <= slack; ++v) {
      coords[j] = v;
      self(self, j + 1, slack - marks[j] * v);
    }
    coords[j] = 0;
  };
  bounded(bounded, 0, l - 1 - base);
  return out;
}

}  // namespace fuscat
