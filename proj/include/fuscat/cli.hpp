#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuscat/finitegroup.hpp"
#include "fuscat/report.hpp"

namespace fuscat {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Exactly one of name (a built-in such as "S4") or gens (cycle notation) must be set.
NamedGroup resolve_group(const std::optional<std::string>& name, const std::optional<std::string>& gens);

Report cyc_report(const std::string& expression, std::uint64_t n, std::optional<std::uint64_t> p = std::nullopt);
Report lemma_norm_report(std::uint64_t nmax);
Report verlinde_simples_report(const std::string& type, int l, std::uint64_t pmax = 100);
Report verlinde_classify_report(const std::string& type, int l, std::uint64_t p);
Report verlinde_badprimes_report(const std::string& type, int l, std::uint64_t pmax = 100);
Report group_report(const NamedGroup& g);
/// subgroup_gens empty means H = G.
Report gtcat_report(const NamedGroup& g, const std::string& subgroup_gens);
/// Without p, every prime dividing |G| is examined.
Report ito_michler_report(const NamedGroup& g, std::optional<std::uint64_t> p = std::nullopt);
Report amplitude_classical_report();
Report amplitude_quantum_report(std::uint64_t l, std::uint64_t pmax = 50);
/// Cross-module identities on one group, or on the whole built-in corpus
/// plus a fixed Verlinde panel when g is empty.
Report crosscheck_report(const std::optional<NamedGroup>& g);

/// Command-line entry point. args excludes the program name.
/// Returns 0 on success, 2 on usage or precondition errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuscat
