#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/bitset.hpp"

namespace prerad {

using Elem = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite unital ring given by Cayley tables over the index set 0..n-1.
// Instances are validated on construction and immutable afterwards.
class FiniteRing {
 public:
  using Table = std::vector<std::vector<Elem>>;

  // Throws RingAxiomError listing every violated axiom.
  static RingPtr from_tables(Table add, Table mul, std::string tag,
                             std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return add_.size(); }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a][b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a][b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a][neg_[b]]; }
  // n * 1 for an integer n (negative allowed).
  Elem from_integer(long long n) const noexcept;
  // Additive order of 1.
  std::size_t characteristic() const noexcept { return characteristic_; }

  const std::string& tag() const noexcept { return tag_; }
  const std::string& label(Elem e) const { return labels_[e]; }
  std::optional<Elem> parse_element(std::string_view text) const;

  bool commutative() const noexcept { return commutative_; }
  // True when (R,+) is cyclic, i.e. R is isomorphic to Z/n as a ring.
  bool additively_cyclic() const noexcept { return characteristic_ == size(); }

  // All two-sided ideals in canonical order (size, then element bitset).
  const std::vector<DynBitset>& two_sided_ideals() const noexcept { return ideals_; }
  DynBitset ideal_generated_by(std::span<const Elem> gens) const;
  bool is_two_sided_ideal(const DynBitset& set) const;
  // I*J: additive span of products.
  DynBitset ideal_product(const DynBitset& a, const DynBitset& b) const;
  std::string ideal_label(const DynBitset& ideal) const;

  // Structural equality of tables; rings built from equal specs compare equal.
  bool same_as(const FiniteRing& other) const noexcept;

  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }

 private:
  FiniteRing() = default;
  DynBitset additive_closure(DynBitset set) const;

  Table add_;
  Table mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::size_t characteristic_ = 1;
  bool commutative_ = true;
  std::string tag_;
  std::vector<std::string> labels_;
  std::vector<DynBitset> ideals_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

// Ring specifications:
//   zn:N                    integers modulo N (N >= 2)
//   product(A,B,...)        direct product of ring specs
//   triangular:n:p          upper-triangular n x n matrices over F_p
//   matrix:n:p              full n x n matrices over F_p
// Tables can also be given as JSON {"add": [[...]], "mul": [[...]]}.
// Every ring is limited to 64 elements.
RingPtr make_ring(std::string_view spec);
RingPtr make_ring_from_json(const nlohmann::json& spec);

inline constexpr std::size_t kMaxRingOrder = 64;

}  // namespace prerad
