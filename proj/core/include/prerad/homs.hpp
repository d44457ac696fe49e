#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "prerad/module.hpp"

namespace prerad {

using ElemTable = std::vector<Elem>;

// Enumerates R-linear maps src -> dst as element tables. The search assigns
// images to the R-module generators of src one at a time and extends the
// partial map over the generated submodule, rejecting an image as soon as it
// conflicts with values already forced. The visitor returns false to stop.
// With `bijective_only`, a generator image must have exactly the same
// annihilator pattern as the generator, which prunes the search to
// candidate isomorphisms.
void for_each_hom(const FiniteModule& src, const FiniteModule& dst,
                  const std::function<bool(const ElemTable&)>& visit, bool bijective_only = false);

// Complete, duplicate-free, lexicographic on generator images.
std::vector<ElemTable> hom_tables(const FiniteModule& src, const FiniteModule& dst);

// Throws RingMismatch when the modules live over different rings.
std::vector<ModuleMorphism> hom_set(const ModulePtr& src, const ModulePtr& dst);
bool has_nonzero_hom(const FiniteModule& src, const FiniteModule& dst);

// Cheap isomorphism invariants: order, invariant factors, |r*M| for every r.
std::vector<long long> iso_profile(const FiniteModule& m);

// An isomorphism src -> dst, if one exists.
std::optional<ModuleMorphism> find_isomorphism(const ModulePtr& src, const ModulePtr& dst);
bool are_isomorphic(const ModulePtr& a, const ModulePtr& b);

}  // namespace prerad
