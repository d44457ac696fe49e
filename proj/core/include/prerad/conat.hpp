#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/bitset.hpp"
#include "prerad/universe.hpp"

namespace prerad {

// Classes of modules are bitsets over universe members. Every notion below is
// relative to the universe: "every module" means "every member".

std::string class_label(const DynBitset& c, const ModuleUniverse& u);
nlohmann::json class_json(const DynBitset& c, const ModuleUniverse& u);

bool is_quotient_closed(const DynBitset& c, const ModuleUniverse& u);
DynBitset quotient_closure(const DynBitset& c, const ModuleUniverse& u);

// Members with no nonzero quotient in c. Throws SpecError unless c is
// quotient closed.
DynBitset perp(const DynBitset& c, const ModuleUniverse& u);

// Quotient closed with perp(perp(c)) == c.
bool is_conatural(const DynBitset& c, const ModuleUniverse& u);

// Condition (CN): whenever every nonzero quotient of M shares a nonzero
// quotient with some member of c, M belongs to c. Defined for any c.
bool satisfies_cn(const DynBitset& c, const ModuleUniverse& u);

// The smallest conatural class containing c (perp of perp of its quotient
// closure).
DynBitset conatural_closure(const DynBitset& c, const ModuleUniverse& u);

// All quotient-closed classes containing 0, ordered by (size, bits). Throws
// BoundExceeded past `cap` classes.
std::vector<DynBitset> quotient_closed_classes(const ModuleUniverse& u, std::size_t cap = 100000);
// All conatural classes, same order.
std::vector<DynBitset> conatural_classes(const ModuleUniverse& u, std::size_t cap = 100000);

// Lattice structure of a family of conatural classes under meet = intersection,
// join = conatural closure of the union, complement = perp.
struct LatticeCheck {
  bool has_bounds = false;
  bool meet_closed = false;
  bool join_closed = false;
  bool complemented = false;
  bool distributive = false;
  bool boolean() const { return has_bounds && meet_closed && join_closed && complemented && distributive; }
  nlohmann::json to_json() const;
};
LatticeCheck check_boolean(const std::vector<DynBitset>& classes, const ModuleUniverse& u);

// Hasse diagram of the classes under inclusion.
std::string conat_dot(const std::vector<DynBitset>& classes, const ModuleUniverse& u);

}  // namespace prerad
