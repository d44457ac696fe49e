#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/homs.hpp"
#include "prerad/module.hpp"

namespace prerad {

struct UniverseOptions {
  std::size_t max_order = 16;
  std::size_t sum_arity = 2;
  // Also close under submodules. Needed to decide idempotence and left
  // exactness on the universe, since those evaluate sigma on sigma(U) and on
  // every N <= U.
  bool submodule_closure = true;
  std::size_t max_classes = 64;
};

class ModuleUniverse;
using UniversePtr = std::shared_ptr<const ModuleUniverse>;

// A finite set of pairwise non-isomorphic modules, closed under quotients
// (and by default submodules), with the quotient and submodule of every
// member by every submodule identified with a member through an explicit map.
class ModuleUniverse {
 public:
  // Seeds must include a module isomorphic to R. Throws BoundExceeded when
  // the closure would exceed options.max_classes.
  static UniversePtr build(const RingPtr& ring, const std::vector<ModulePtr>& seeds, UniverseOptions options = {});
  static UniversePtr build(const RingPtr& ring, UniverseOptions options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const UniverseOptions& options() const noexcept { return options_; }
  std::size_t size() const noexcept { return members_.size(); }
  const ModulePtr& member(std::size_t i) const { return members_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t zero_index() const noexcept { return 0; }
  std::size_t regular_index() const noexcept { return regular_; }
  // Ring element behind each element of the regular member, for one fixed
  // isomorphism R -> member(regular_index()). Fully invariant submodules of
  // R correspond to the same ideal under every such isomorphism.
  const std::vector<Elem>& regular_ring_elements() const noexcept { return regular_ring_; }
  // Members isomorphic to the simple modules, in simple_modules() order.
  const std::vector<std::size_t>& simple_indices() const noexcept { return simples_; }

  // Index of the member isomorphic to m, if any.
  std::optional<std::size_t> find(const ModulePtr& m) const;
  std::optional<std::size_t> find_by_name(const std::string& name) const;

  // For member i and its submodule with lattice index k: the member
  // isomorphic to the quotient and the projection onto it.
  std::size_t quotient_class(std::size_t i, std::size_t k) const { return quotients_[i][k].cls; }
  const ModuleMorphism& quotient_map(std::size_t i, std::size_t k) const { return quotients_[i][k].map; }
  // The member isomorphic to the submodule and an embedding of it into i.
  std::size_t sub_class(std::size_t i, std::size_t k) const { return subs_[i][k].cls; }
  const ModuleMorphism& sub_embedding(std::size_t i, std::size_t k) const { return subs_[i][k].map; }

  // Classes that are quotients of member i (including 0 and i itself).
  const DynBitset& quotient_set(std::size_t i) const { return quotient_sets_[i]; }

  // Cached hom-set between members, lexicographic on generator images.
  const std::vector<ElemTable>& homs(std::size_t i, std::size_t j) const;
  bool nonzero_hom(std::size_t i, std::size_t j) const;

  nlohmann::json parameters() const;
  nlohmann::json describe() const;

 private:
  struct Link {
    std::size_t cls;
    ModuleMorphism map;
  };
  ModuleUniverse() = default;

  RingPtr ring_;
  UniverseOptions options_;
  std::vector<ModulePtr> members_;
  std::vector<std::vector<long long>> profiles_;
  std::vector<std::string> names_;
  std::size_t regular_ = 0;
  std::vector<std::size_t> simples_;
  std::vector<Elem> regular_ring_;
  std::vector<std::vector<Link>> quotients_;
  std::vector<std::vector<Link>> subs_;
  std::vector<DynBitset> quotient_sets_;

  mutable std::unique_ptr<std::once_flag[]> hom_once_;
  mutable std::vector<std::vector<ElemTable>> hom_cache_;
};

}  // namespace prerad
