#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/cofirst.hpp"
#include "prerad/products.hpp"
#include "prerad/universe_preradical.hpp"

namespace prerad {

enum class Status { Holds, Fails, Reported, Vacuous, Degraded };
// Assert entries fail the run on Fails; Report entries never do.
enum class EntryKind { Assert, Report };
// Which quantifier produced a verdict.
enum class Regime { ExhaustiveUniverse, GeneratedFamily, IdealFamily, BoundedCoproduct, Example, None };

std::string to_string(Status s);
std::string to_string(EntryKind k);
std::string to_string(Regime r);

struct SuiteOptions {
  // Natural assignments visited by the exhaustive enumeration before the
  // suites fall back to the generated family.
  std::size_t enumeration_cap = 200000;
  // Quotient-closed classes enumerated before giving up.
  std::size_t class_cap = 100000;
};

// A universe assignment paired with an expression realizing it, when one is known.
struct Realized {
  Assignment a;
  PreradicalPtr expr;
};

// Shared, lazily computed data for one (ring, universe) pair.
class SuiteContext {
 public:
  SuiteContext(RingPtr ring, UniverseOptions universe_options, SuiteOptions options = {});
  // Universe closed from `seeds`, which must include a copy of R.
  SuiteContext(RingPtr ring, const std::vector<ModulePtr>& seeds, UniverseOptions universe_options,
               SuiteOptions options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::string& ring_spec() const noexcept { return ring_spec_; }
  const ModuleUniverse& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const SuiteOptions& options() const noexcept { return options_; }

  // Every universe preradical, or the generated family when the enumeration
  // cap was hit (then degraded() is true).
  const std::vector<Assignment>& preradicals();
  bool degraded();
  Regime quantifier();
  const PreradicalFlags& flags(const Assignment& a);
  std::vector<Assignment> idempotents();
  std::vector<Assignment> radicals();
  std::vector<Assignment> idempotent_radicals();

  // Alpha/Omega/Gamma/trace/reject/ideal/rad/soc over the universe, one
  // expression per distinct assignment, simplest expressions first.
  const std::vector<Realized>& generated();
  // One entry per two-sided ideal I, realizing I*(-).
  const std::vector<Realized>& ideal_family();
  PreradicalPtr realize(const Assignment& a);

  const CoprimeVerdict& coprime(std::size_t member);
  const ClassTriple& triple(const Assignment& a);
  const std::vector<DynBitset>& quotient_closed();
  const std::vector<DynBitset>& conatural();

  // Every member has zero radical (the finite-ring test for V-rings).
  bool v_ring();
  // The ring is semisimple: rad(R) = 0.
  bool semisimple_ring();

  // Common witness context: ring and universe parameters.
  nlohmann::json witness_base() const;

 private:
  RingPtr ring_;
  std::string ring_spec_;
  UniversePtr universe_;
  // Universe names of non-default seeds, recorded in witnesses.
  std::vector<std::string> seed_names_;
  SuiteOptions options_;
  std::optional<std::vector<Assignment>> preradicals_;
  bool degraded_ = false;
  std::map<Assignment, PreradicalFlags> flags_;
  std::optional<std::vector<Realized>> generated_;
  std::optional<std::vector<Realized>> ideals_;
  std::map<std::size_t, CoprimeVerdict> coprime_;
  std::map<Assignment, ClassTriple> triples_;
  std::optional<std::vector<DynBitset>> quotient_closed_;
  std::optional<std::vector<DynBitset>> conatural_;
};

struct PropositionResult {
  std::string id;
  std::string anchor;
  EntryKind kind = EntryKind::Assert;
  Regime regime = Regime::None;
  Status status = Status::Holds;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();
  double runtime_ms = 0;
};

struct RegistryEntry {
  std::string id;
  std::string anchor;
  int section;
  EntryKind kind;
  PropositionResult (*run)(SuiteContext&);
};

// All entries in report order.
const std::vector<RegistryEntry>& registry();
// Resolves "all", "section1".."section5" and individual ids to registry
// entries, in registry order, without duplicates. Throws SpecError on an
// unknown name.
std::vector<const RegistryEntry*> select_entries(const std::vector<std::string>& selection);

struct SuiteReport {
  std::string ring;
  nlohmann::json universe;
  nlohmann::json options;
  std::vector<PropositionResult> propositions;

  // Canonical JSON; runtimes only when asked for.
  nlohmann::json to_json(bool include_timing = false) const;
  // Line-per-proposition text rendering of to_json().
  std::string to_text() const;
  bool assert_failed() const;
};

inline constexpr const char* kReportSchemaVersion = "1.0";

SuiteReport run_entries(SuiteContext& ctx, const std::vector<const RegistryEntry*>& entries);
SuiteReport run_suites(const RingPtr& ring, const UniverseOptions& universe_options,
                       const std::vector<std::string>& selection, const SuiteOptions& options = {});

SuiteReport run_section1_suite(SuiteContext& ctx);
SuiteReport run_section2_suite(SuiteContext& ctx);
SuiteReport run_section3_suite(SuiteContext& ctx);
SuiteReport run_section4_suite(SuiteContext& ctx);
SuiteReport run_section5_suite(SuiteContext& ctx);

// Re-derives a witness from scratch (rebuilding the universe it names) and
// returns whether it still shows what it claims. Throws SpecError for kinds
// that carry no re-checkable claim.
bool recheck_witness(const nlohmann::json& witness);

}  // namespace prerad
