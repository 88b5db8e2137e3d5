#pragma once

/**
 * @file finitegroup.hpp
 * @brief Permutation groups at desk scale: enumeration, conjugacy classes,
 * irreducible character degrees, double cosets.
 *
 * Groups are enumerated element by element (the order is capped), so every
 * query is a direct computation on the element list. Elements are kept in
 * lexicographic order of their image tuples; index 0 is the identity.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fuscat {

/// A permutation of {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Same permutation acting on more points (fixes the new ones).
  Perm extended(std::size_t degree) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// 1-indexed cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Parses "(1 2)(3 4)" (1-indexed, commas or whitespace between points).
/// The degree is raised to cover every point mentioned.
Perm parse_cycles(std::string_view text, std::size_t degree = 0);

/// Parses a comma separated generator list such as "(1 2)(3 4), (1 2 3)".
/// All generators are padded to a common degree.
std::vector<Perm> parse_generators(std::string_view text, std::size_t degree = 0);

/// Default 20000; overridden by the FUSCAT_ENUM_CAP environment variable.
std::size_t enumeration_cap();

struct ConjugacyClass {
  std::size_t representative;  // element index, minimal in the class
  std::vector<std::size_t> members;
  std::size_t size() const { return members.size(); }
};

class PermGroup {
public:
  /// Closure of the generators. Throws PreconditionError if the order exceeds cap.
  static PermGroup enumerate(std::vector<Perm> generators, std::size_t cap = enumeration_cap());
  /// A group whose element set is already known to be closed.
  static PermGroup from_elements(std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_index_[element]; }
  /// Index of the class containing the inverses of class k.
  std::size_t inverse_class(std::size_t k) const;

  /// lcm of element orders.
  std::uint64_t exponent() const;
  bool is_abelian() const;

private:
  void index_and_classify();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;
};

/// Generators for the named groups S<n>, A<n> (n <= 8), D<2m> (dihedral of
/// order 2m), C<n>, Q8, SL23, and direct products written XxY (e.g. S3xC4).
std::vector<Perm> builtin_generators(std::string_view name);
PermGroup builtin_group(std::string_view name);
/// Names used by the consistency harness.
std::vector<std::string> builtin_corpus();

/// Sorted multiset of irreducible character degrees.
struct DegreeVector {
  std::vector<std::uint64_t> degrees;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Smallest prime q = 1 (mod exp G) with q > 2 sqrt|G|.
std::uint64_t class_field_prime(const PermGroup& g);

/// Character degrees from the simultaneous eigenvectors of the class
/// matrices over F_q (see class_field_prime).
DegreeVector char_degrees(const PermGroup& g);

struct BadPrime {
  std::uint64_t prime;
  std::uint64_t witness;  // a degree (or dimension) divisible by prime
  friend bool operator==(const BadPrime&, const BadPrime&) = default;
};

struct RepPrimeReport {
  std::vector<BadPrime> bad;
  /// Primes dividing |G| that divide no degree. Primes not dividing |G| are
  /// good as well and are not listed.
  std::vector<std::uint64_t> good_dividing_order;
};

RepPrimeReport rep_bad_primes(const PermGroup& g);
RepPrimeReport rep_bad_primes(const PermGroup& g, const DegreeVector& degrees);

struct ItoMichlerReport {
  std::uint64_t prime = 0;
  bool applicable = false;
  std::string not_applicable_reason;
  std::uint64_t sylow_order = 0;
  std::uint64_t complement_order = 0;
  bool closed = false;
  bool abelian = false;
  bool normal = false;
  std::vector<Perm> sylow_elements;
};

/// Checks that the p-elements form a normal abelian Sylow subgroup whenever
/// p divides |G| but no character degree. A failed check throws InternalError.
ItoMichlerReport ito_michler_verify(const PermGroup& g, std::uint64_t p);

/// Enumerates the subgroup of g generated by gens. Throws PreconditionError
/// if a generator is not in g.
PermGroup subgroup(const PermGroup& g, const std::vector<Perm>& gens);

struct DoubleCoset {
  Perm representative;  // lexicographically minimal element of HxH
  std::size_t size;
};

/// The partition of G into double cosets HxH, ordered by representative.
std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& h);

/// H intersected with x H x^-1.
PermGroup stabilizer_intersection(const PermGroup& g, const PermGroup& h, const Perm& x);

}  // namespace fuscat
