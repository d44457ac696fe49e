#pragma once

#include <string>
#include <vector>

#include "prerad/conat.hpp"
#include "prerad/error.hpp"
#include "prerad/suites.hpp"

namespace prerad::suites {

// Collects the verdict of one entry while its checks run.
struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t violations = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();

  // Counts one check; on failure keeps the first few witnesses.
  void check(bool good, const nlohmann::json& witness = nullptr) {
    ++checked;
    if (good) return;
    ok = false;
    ++violations;
    if (!witness.is_null() && witnesses.size() < 8) witnesses.push_back(witness);
  }
};

// Status of an assert entry: Holds, Fails, or Degraded when it held only
// on the generated family.
PropositionResult finish(const RegistryEntry& e, Regime regime, Outcome out, bool degraded = false);
PropositionResult vacuous(const RegistryEntry& e, nlohmann::json details);

std::string sub_label(const ModulePtr& m, const DynBitset& set);
// A member/sigma witness re-checkable through recheck_witness.
nlohmann::json predicate_witness(SuiteContext& ctx, std::size_t member, const PreradicalPtr& sigma,
                                 const std::string& predicate, bool expected);
// Data-only witness for a universe assignment that has no known expression.
nlohmann::json assignment_witness(SuiteContext& ctx, const Assignment& a);
nlohmann::json sigma_json(SuiteContext& ctx, const Assignment& a);

// Names of all nonzero members in c.
nlohmann::json members_json(const ModuleUniverse& u, const DynBitset& c);

bool is_zero_class(const DynBitset& c, const ModuleUniverse& u);
DynBitset whole_class(const ModuleUniverse& u);
DynBitset zero_class(const ModuleUniverse& u);

// A cached context for a ring other than the configured one, used by the
// self-contained examples.
SuiteContext& example_context(const std::string& ring_spec);

std::vector<RegistryEntry> section1_entries();
std::vector<RegistryEntry> section2_entries();
std::vector<RegistryEntry> section3_entries();
std::vector<RegistryEntry> section4_entries();
std::vector<RegistryEntry> section5_entries();

}  // namespace prerad::suites
