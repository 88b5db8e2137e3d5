#pragma once

// Group-theoretical categories C(G, H, 1, 1) with trivial cocycles.
// Simples are pairs (g, rho): g runs over double coset representatives of H
// in G and rho over the irreducibles of H^g = H n gHg^-1, with
// dim V_{g,rho} = |H| / |H^g| * dim rho.

#include <cstdint>
#include <vector>

#include "fuscat/finitegroup.hpp"

namespace fuscat {

struct GTSimple {
  Perm coset_rep;
  std::uint64_t stabilizer_order;
  std::uint64_t irrep_degree;
  std::uint64_t dimension;
};

/// Throws InternalError if the dimensions do not square-sum to |G|.
std::vector<GTSimple> enumerate_simples(const PermGroup& g, const PermGroup& h);

struct GTPrimeReport {
  std::vector<BadPrime> bad;  // witness = a simple's dimension
  std::vector<std::uint64_t> good_dividing_order;
};

GTPrimeReport gt_bad_primes(const PermGroup& g, const PermGroup& h);
GTPrimeReport gt_bad_primes(const PermGroup& g, const std::vector<GTSimple>& simples);

}  // namespace fuscat
