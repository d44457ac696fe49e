#pragma once

#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "prerad/module.hpp"

namespace prerad {

// tr_M(K) = K. For finite modules this is equivalent to K being an
// epimorphic image of a finite direct sum of copies of M.
bool xi_contains(const ModulePtr& m, const ModulePtr& k);

// Preimage in M of gamma_A^M(M/B): the meet of f^-1(A) over f: M/B -> M.
Submodule box_product(const Submodule& a, const Submodule& b);
// Preimage in M of the reject of M/A in M/B.
Submodule comultiplication(const Submodule& a, const Submodule& b);
// Meet of all B <= M with Hom(M/N, M/B) = 0.
Submodule totalizer(const Submodule& n);

using SubmodulePair = std::pair<Submodule, Submodule>;

// Four coprimeness criteria, each computed on its own:
//   by_xi:     every proper N has tr_{M/N}(M) = M
//   by_box:    L box N != M for all proper L, N
//   by_comult: (L:N) != M for all proper L, N
//   by_hom:    Hom(M/L, M/N) != 0 for all proper L, N
// A failing criterion keeps the first offending pair in lattice order; for
// by_xi both entries are the offending N.
struct CoprimeVerdict {
  bool zero = false;
  bool by_xi = true;
  bool by_box = true;
  bool by_comult = true;
  bool by_hom = true;
  std::optional<SubmodulePair> xi_witness;
  std::optional<SubmodulePair> box_witness;
  std::optional<SubmodulePair> comult_witness;
  std::optional<SubmodulePair> hom_witness;

  nlohmann::json to_json() const;
};

CoprimeVerdict coprime_verdict(const ModulePtr& m);

// Re-checks a witness against its criterion; true when it really fails there.
bool xi_witness_holds(const SubmodulePair& w);
bool box_witness_holds(const SubmodulePair& w);
bool comult_witness_holds(const SubmodulePair& w);
bool hom_witness_holds(const SubmodulePair& w);

}  // namespace prerad
