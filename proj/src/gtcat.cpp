#include "fuscat/gtcat.hpp"

#include <algorithm>

#include "fuscat/errors.hpp"
#include "fuscat/numtheory.hpp"

namespace fuscat {

std::vector<GTSimple> enumerate_simples(const PermGroup& g, const PermGroup& h) {
  std::vector<GTSimple> out;
  std::uint64_t sum = 0;
  for (const auto& dc : double_cosets(g, h)) {
    const PermGroup stab = stabilizer_intersection(g, h, dc.representative);
    if (h.order() % stab.order() != 0) throw InternalError("stabilizer order does not divide |H|");
    const std::uint64_t index = h.order() / stab.order();
    for (auto deg : char_degrees(stab).degrees) {
      const std::uint64_t dim = index * deg;
      sum += dim * dim;
      out.push_back(GTSimple{dc.representative, stab.order(), deg, dim});
    }
  }
  if (sum != g.order())
    throw InternalError("global dimension check failed: sum of squared dimensions " + std::to_string(sum) +
                        " != |G| = " + std::to_string(g.order()));
  return out;
}

GTPrimeReport gt_bad_primes(const PermGroup& g, const std::vector<GTSimple>& simples) {
  GTPrimeReport report;
  std::vector<std::uint64_t> candidates = prime_divisors(g.order());
  for (const auto& s : simples)
    for (auto p : prime_divisors(s.dimension)) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto p : candidates) {
    auto it = std::find_if(simples.begin(), simples.end(), [p](const GTSimple& s) { return s.dimension % p == 0; });
    if (it != simples.end())
      report.bad.push_back(BadPrime{p, it->dimension});
    else if (g.order() % p == 0)
      report.good_dividing_order.push_back(p);
  }
  return report;
}

GTPrimeReport gt_bad_primes(const PermGroup& g, const PermGroup& h) { return gt_bad_primes(g, enumerate_simples(g, h)); }

}  // namespace fuscat
