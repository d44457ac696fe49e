#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prerad/bitset.hpp"
#include "prerad/ring.hpp"
#include "prerad/smith.hpp"

namespace prerad {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// Largest module whose submodule lattice or hom-sets are enumerated.
inline constexpr std::size_t kMaxModuleOrder = 256;

// A finite left R-module presented as Z/d_1 + ... + Z/d_k with, for every
// ring element r, an integer matrix whose column i is r * e_i. Elements are
// indexed in mixed radix with the first coordinate most significant, so
// index order is lexicographic order on coordinate vectors.
class FiniteModule {
 public:
  // Validates well-definedness and the module axioms; throws Error.
  static ModulePtr create(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action);
  static ModulePtr zero(RingPtr ring);
  // Skips axiom validation; used for presentations derived from valid modules.
  static ModulePtr create_trusted(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action);

  FiniteModule(const FiniteModule&) = delete;
  FiniteModule& operator=(const FiniteModule&) = delete;

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool is_zero() const noexcept { return size_ == 1; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem act(Elem r, Elem x) const noexcept { return act_[r * size_ + x]; }
  // k * x for an integer k >= 0.
  Elem times(long long k, Elem x) const noexcept;

  std::vector<int> coordinates(Elem x) const;
  // Reduces each coordinate modulo its order.
  Elem from_coordinates(std::span<const long long> coords) const;
  Elem generator(std::size_t i) const;
  const IntMatrix& action_matrix(Elem r) const { return action_[r]; }

  std::string element_label(Elem x) const;
  std::optional<Elem> parse_element(std::string_view text) const;
  // Sorted invariant factors (each > 1) of the additive group.
  std::vector<long long> invariant_factors() const;
  std::string abelian_type() const;

  // Cyclic submodule R*x.
  DynBitset cyclic_span(Elem x) const;
  // Submodule generated by the union of `base` and R*x; base must be a submodule.
  DynBitset join_cyclic(const DynBitset& base, Elem x) const;
  DynBitset sum_sets(const DynBitset& a, const DynBitset& b) const;

  // Greedy R-module generating set (elements with large cyclic spans first).
  const std::vector<Elem>& ring_generators() const;
  // Submodule lattice as element sets, ordered by (size, bitset). Throws
  // BoundExceeded when size() > kMaxModuleOrder.
  const std::vector<DynBitset>& lattice_sets() const;
  // Endomorphisms as element tables, lexicographic on generator images.
  const std::vector<std::vector<Elem>>& endomorphism_tables() const;
  // Parallel to lattice_sets(): whether each submodule is fully invariant.
  const std::vector<bool>& fully_invariant_flags() const;
  std::size_t lattice_index(const DynBitset& set) const;

 private:
  FiniteModule(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action);
  void validate() const;

  RingPtr ring_;
  std::vector<int> orders_;
  std::vector<IntMatrix> action_;
  std::size_t size_ = 1;
  std::vector<std::size_t> strides_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> act_;

  mutable std::once_flag gens_once_;
  mutable std::vector<Elem> ring_generators_;
  mutable std::once_flag lattice_once_;
  mutable std::vector<DynBitset> lattice_;
  mutable std::once_flag endo_once_;
  mutable std::vector<std::vector<Elem>> endos_;
  mutable std::once_flag fi_once_;
  mutable std::vector<bool> fully_invariant_;
};

// A submodule of a parent module, stored as its element set.
class Submodule {
 public:
  Submodule(ModulePtr parent, DynBitset elements);

  static Submodule zero(const ModulePtr& parent);
  static Submodule whole(const ModulePtr& parent);
  static Submodule generated_by(const ModulePtr& parent, std::span<const Elem> gens);

  const ModulePtr& parent() const noexcept { return parent_; }
  const DynBitset& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.count(); }
  bool contains(Elem x) const noexcept { return elements_.test(x); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_whole() const noexcept;
  bool is_proper() const noexcept { return !is_whole(); }

  // Irredundant generating set, chosen greedily in element order.
  std::vector<Elem> generators() const;
  std::string label() const;

  Submodule operator+(const Submodule& other) const;
  Submodule operator&(const Submodule& other) const;
  bool is_subset_of(const Submodule& other) const noexcept { return elements_.is_subset_of(other.elements_); }

  friend bool operator==(const Submodule& a, const Submodule& b) noexcept {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  ModulePtr parent_;
  DynBitset elements_;
};

// An R-linear map, stored as a full element table.
class ModuleMorphism {
 public:
  // Trusted: the table is assumed to be R-linear.
  ModuleMorphism(ModulePtr source, ModulePtr target, std::vector<Elem> table);

  // Builds the map from one image per cyclic generator of the source; throws
  // Error when the images do not define an R-linear map.
  static ModuleMorphism from_generator_images(ModulePtr source, ModulePtr target, std::span<const Elem> images);
  static ModuleMorphism identity(const ModulePtr& m);
  static ModuleMorphism zero(const ModulePtr& source, const ModulePtr& target);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  Elem operator()(Elem x) const noexcept { return table_[x]; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  std::vector<Elem> generator_images() const;

  bool is_zero() const noexcept;
  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;
  bool is_linear() const noexcept;

  Submodule image() const;
  Submodule image(const Submodule& sub) const;
  Submodule kernel() const;
  Submodule preimage(const Submodule& sub) const;
  DynBitset image_set(const DynBitset& sub) const;
  DynBitset preimage_set(const DynBitset& sub) const;

  // next o *this
  ModuleMorphism then(const ModuleMorphism& next) const;

  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) noexcept {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<Elem> table_;
};

// All submodules in canonical order. Throws BoundExceeded past kMaxModuleOrder.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m);
bool is_fully_invariant(const Submodule& n);
// Exhaustive: N + K != M for every proper K.
bool superfluous(const Submodule& n);
Submodule radical_of(const ModulePtr& m);
Submodule socle_of(const ModulePtr& m);
std::vector<Submodule> maximal_submodules(const ModulePtr& m);
std::vector<Submodule> minimal_submodules(const ModulePtr& m);
bool is_simple(const ModulePtr& m);
bool is_semisimple(const ModulePtr& m);

}  // namespace prerad
