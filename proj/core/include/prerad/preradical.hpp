#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/module.hpp"

namespace prerad {

class Preradical;
using PreradicalPtr = std::shared_ptr<const Preradical>;

enum class PrOp { Zero, One, Alpha, Omega, Gamma, Trace, Reject, Ideal, Rad, Soc, Meet, Join, Compose, Colon, Hat, Bar };

// Preradical expressions. Leaves carry modules or ideals over a fixed ring;
// evaluation on a module over a different ring throws RingMismatch.
//
//   Alpha(N<=M)(U)  = sum of f(N), f in Hom(M,U)       (N fully invariant)
//   Omega(N<=M)(U)  = meet of f^-1(N), f in Hom(U,M)   (N fully invariant)
//   Gamma(N<=M)(U)  = as Omega, any N
//   Trace(M), Reject(M), Ideal(I)(U) = I*U, Rad, Soc
//   Compose(s,t)(U) = s(t(U));  Colon(s,t)(U) = preimage of s(U/t(U))
//   Hat(s): s iterated downwards to a fixed point (largest idempotent below s)
//   Bar(s): V -> preimage of s(U/V) iterated from 0 (least radical above s)
class Preradical {
 public:
  static PreradicalPtr zero();
  static PreradicalPtr one();
  static PreradicalPtr rad();
  static PreradicalPtr soc();
  // `spec` is the module spec the leaf was parsed from, kept for printing.
  static PreradicalPtr alpha(const Submodule& n, std::string spec = {});
  static PreradicalPtr omega(const Submodule& n, std::string spec = {});
  static PreradicalPtr gamma(const Submodule& n, std::string spec = {});
  static PreradicalPtr trace(const ModulePtr& m, std::string spec = {});
  static PreradicalPtr reject(const ModulePtr& m, std::string spec = {});
  // `ideal` must be a two-sided ideal of `ring`.
  static PreradicalPtr ideal(const RingPtr& ring, const DynBitset& ideal);
  static PreradicalPtr meet(std::vector<PreradicalPtr> args);
  static PreradicalPtr join(std::vector<PreradicalPtr> args);
  static PreradicalPtr compose(PreradicalPtr outer, PreradicalPtr inner);
  static PreradicalPtr colon(PreradicalPtr outer, PreradicalPtr inner);
  static PreradicalPtr hat(PreradicalPtr arg);
  static PreradicalPtr bar(PreradicalPtr arg);

  PrOp op() const noexcept { return op_; }
  const std::vector<PreradicalPtr>& args() const noexcept { return args_; }
  const ModulePtr& module() const noexcept { return module_; }
  const std::optional<Submodule>& submodule() const noexcept { return sub_; }
  const DynBitset& ideal_set() const noexcept { return ideal_; }
  // Ring of the leaves, or null for ring-free expressions (zero, one, rad, soc).
  RingPtr ring() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  Preradical() = default;
  static PreradicalPtr leaf(PrOp op, ModulePtr m, std::optional<Submodule> sub, std::string spec);

  PrOp op_ = PrOp::Zero;
  std::vector<PreradicalPtr> args_;
  ModulePtr module_;
  std::optional<Submodule> sub_;
  RingPtr ring_;
  DynBitset ideal_;
  std::string spec_;
};

Submodule eval(const Preradical& sigma, const ModulePtr& u);

// Text syntax: zero, one, rad, soc, trace(M), reject(M), ideal(a,b,...),
// alpha(M, gens), omega(M, gens), gamma(M, gens), meet(p,q,...), join(p,q,...),
// compose(p,q), colon(p,q), hat(p), bar(p). M is a module spec and gens a
// submodule spec (elements separated by ';', or 0 / all).
// The resolver turns module specs into modules; the default is parse_module.
// Passing a universe lookup lets submodule generators refer to the member's
// own presentation.
using ModuleResolver = std::function<ModulePtr(const std::string&)>;
PreradicalPtr parse_preradical(const RingPtr& ring, std::string_view text, const ModuleResolver& resolve = {});
// JSON form: {"op": "...", "module": spec, "submodule": spec, "generators": [...],
// "args": [...]} with "args" holding [outer, inner] for compose and colon.
PreradicalPtr preradical_from_json(const RingPtr& ring, const nlohmann::json& j, const ModuleResolver& resolve = {});

}  // namespace prerad
