#pragma once

#include <vector>

#include "prerad/module.hpp"

namespace prerad {

std::vector<Elem> idempotents(const RingPtr& ring);

// Local projective modules Re, one per simple module and in the same order as
// simple_modules(ring): the i-th has top isomorphic to the i-th simple.
std::vector<ModulePtr> indecomposable_projectives(const RingPtr& ring);

struct ProjectiveCover {
  ModulePtr cover;
  ModuleMorphism epi;
};

// P = sum of Re's matching the simple summands of M/rad M, with a surjection
// whose kernel is checked to be superfluous. Every finite ring is left perfect
// so a cover always exists.
ProjectiveCover projective_cover(const ModulePtr& m);

// m is projective iff its cover has the same order.
bool is_projective(const ModulePtr& m);

}  // namespace prerad
