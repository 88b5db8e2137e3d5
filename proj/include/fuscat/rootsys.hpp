#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fuscat {

/// Largest rank accepted by parse_type_label / build_root_system.
inline constexpr int kMaxRank = 8;

enum class RootType { A, D, E };

struct TypeLabel {
  RootType type;
  int rank;

  std::string to_string() const;
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Accepts "A1".."A8", "D4".."D8", "E6", "E7", "E8". Non-simply-laced and
/// out-of-range labels throw PreconditionError.
TypeLabel parse_type_label(std::string_view label);

/// A dominant weight in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  std::string to_string() const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// A root in the simple-root basis.
using RootCoords = std::vector<int>;

class RootSystem {
public:
  const TypeLabel& label() const { return label_; }
  int rank() const { return label_.rank; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Sorted by height, then lexicographically.
  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const RootCoords& highest_root() const { return positive_roots_.back(); }
  int coxeter_number() const { return coxeter_; }

  /// (lambda + rho, alpha) = sum_j c_j (lambda_j + 1) for alpha = sum_j c_j alpha_j.
  int shifted_pairing(const Weight& lambda, const RootCoords& alpha) const;
  /// (rho, alpha), the height of alpha.
  static int height(const RootCoords& alpha);

  Weight rho() const { return Weight{std::vector<int>(rank(), 1)}; }
  Weight zero_weight() const { return Weight{std::vector<int>(rank(), 0)}; }

private:
  friend RootSystem build_root_system(const TypeLabel& label);

  TypeLabel label_{RootType::A, 1};
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoords> positive_roots_;
  int coxeter_ = 0;
};

RootSystem build_root_system(const TypeLabel& label);
RootSystem build_root_system(std::string_view label);

/// Dominant weights with (lambda + rho, theta) < l in lexicographic order.
/// Requires l > h.
std::vector<Weight> enumerate_alcove(const RootSystem& rs, int l);

/// Whether lambda is dominant with (lambda + rho, theta) < l.
bool in_alcove(const RootSystem& rs, int l, const Weight& lambda);

}  // namespace fuscat
