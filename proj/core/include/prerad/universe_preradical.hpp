#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/preradical.hpp"
#include "prerad/universe.hpp"

namespace prerad {

// A preradical restricted to a universe: for each member, the lattice index
// of the submodule it picks.
using Assignment = std::vector<std::size_t>;

Assignment assignment_of(const Preradical& sigma, const ModuleUniverse& u);
const DynBitset& assigned_set(const Assignment& a, const ModuleUniverse& u, std::size_t i);

struct PreradicalFlags {
  bool natural = false;
  bool idempotent = false;
  bool radical = false;
  bool t_radical = false;
  bool left_exact = false;
  bool preserves_epis = false;
  nlohmann::json to_json() const;
};

// Every flag decided exhaustively over the universe.
PreradicalFlags classify(const Assignment& a, const ModuleUniverse& u);
PreradicalFlags classify(const Preradical& sigma, const ModuleUniverse& u);

bool is_natural(const Assignment& a, const ModuleUniverse& u);
bool is_idempotent(const Assignment& a, const ModuleUniverse& u);
bool is_radical(const Assignment& a, const ModuleUniverse& u);
bool is_t_radical(const Assignment& a, const ModuleUniverse& u);
bool is_left_exact(const Assignment& a, const ModuleUniverse& u);
bool preserves_epis(const Assignment& a, const ModuleUniverse& u);

enum class Comparison { Less, Greater, Equal, Incomparable };
std::string to_string(Comparison c);
Comparison compare(const Assignment& a, const Assignment& b, const ModuleUniverse& u);
bool leq(const Assignment& a, const Assignment& b, const ModuleUniverse& u);

// Membership bitsets over universe members.
DynBitset torsion_class(const Assignment& a, const ModuleUniverse& u);
DynBitset torsion_free_class(const Assignment& a, const ModuleUniverse& u);

// Universe-level closures and operations on assignments.
Assignment hat(const Assignment& a, const ModuleUniverse& u);
Assignment bar(const Assignment& a, const ModuleUniverse& u);
Assignment compose(const Assignment& outer, const Assignment& inner, const ModuleUniverse& u);
Assignment colon(const Assignment& outer, const Assignment& inner, const ModuleUniverse& u);
Assignment meet(const Assignment& a, const Assignment& b, const ModuleUniverse& u);
Assignment join(const Assignment& a, const Assignment& b, const ModuleUniverse& u);

// Alpha and Omega (Gamma when `n` is not fully invariant) of the submodule
// with element set `n` of member i, computed from the cached hom-sets.
Assignment universe_alpha(const ModuleUniverse& u, std::size_t i, const DynBitset& n);
Assignment universe_omega(const ModuleUniverse& u, std::size_t i, const DynBitset& n);

// The ideal sigma(R), as a set of ring elements.
DynBitset ideal_at_regular(const Assignment& a, const ModuleUniverse& u);

struct FlagFilter {
  bool idempotent = false;
  bool radical = false;
  bool t_radical = false;
  bool left_exact = false;
};

struct EnumerationOptions {
  FlagFilter filter;
  // Forced values: member index -> lattice index.
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  // Maximum number of natural assignments visited before giving up.
  std::size_t cap = 200000;
};

// Every natural assignment of fully invariant submodules, filtered by flags,
// in lexicographic order of lattice indices. Throws BoundExceeded when more
// than `cap` natural assignments exist.
std::vector<Assignment> enumerate_universe_preradicals(const ModuleUniverse& u, const EnumerationOptions& options = {});

std::string assignment_label(const Assignment& a, const ModuleUniverse& u);
nlohmann::json assignment_json(const Assignment& a, const ModuleUniverse& u);

}  // namespace prerad
