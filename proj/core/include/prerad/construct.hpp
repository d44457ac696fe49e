#pragma once

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "prerad/module.hpp"

namespace prerad {

// A module together with a map from some other index set onto its elements.
struct Presented {
  ModulePtr module;
  std::vector<Elem> map;
};

// Cyclic decomposition of a finite module given abstractly on the index set
// 0..n-1 (0 is the zero element). Generators are chosen greedily, their
// relations diagonalised, and the action is transported to the diagonal
// basis. `map[i]` is the element of the result corresponding to index i.
Presented decompose(const RingPtr& ring, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                    const std::function<Elem(Elem, Elem)>& act);

// Canonical presentation of m (invariant-factor orders) with the isomorphism.
std::pair<ModulePtr, ModuleMorphism> canonical(const ModulePtr& m);

struct QuotientResult {
  ModulePtr module;
  ModuleMorphism projection;
};
QuotientResult quotient(const Submodule& n);

struct SubmoduleResult {
  ModulePtr module;
  ModuleMorphism embedding;
};
SubmoduleResult submodule_as_module(const Submodule& n);

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);
ModulePtr direct_power(const ModulePtr& m, std::size_t k);

ModulePtr regular_module(const RingPtr& ring);
// The regular module with map[r] = element corresponding to ring element r.
Presented regular_presented(const RingPtr& ring);
// R/L for the left ideal L generated by `gens`.
ModulePtr cyclic_module(const RingPtr& ring, std::span<const Elem> gens);

// Simple modules up to isomorphism, ordered by size then by the first maximal
// left ideal presenting them.
std::vector<ModulePtr> simple_modules(const RingPtr& ring);
// Jacobson radical of the ring (radical of the regular module).
DynBitset jacobson_radical(const RingPtr& ring);

// Module specifications: summands joined by '+', each optionally raised to a
// power with '^k'. Summands: 0, R, Zd (R/dR, which must have d elements),
// S<i> (i-th simple, from 1), P<i> (projective cover of S<i>), R/<a,b,...>.
ModulePtr parse_module(const RingPtr& ring, std::string_view spec);
// Submodule specifications: "0", "all", or generators separated by ';',
// optionally wrapped in angle brackets.
Submodule parse_submodule(const ModulePtr& m, std::string_view spec);

}  // namespace prerad
