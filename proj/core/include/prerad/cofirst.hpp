#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/preradical.hpp"
#include "prerad/universe_preradical.hpp"

namespace prerad {

// Predicates on the zero module return Zero rather than true or false.
enum class Verdict { False, True, Zero };
std::string to_string(Verdict v);
nlohmann::json to_json(Verdict v);
inline Verdict verdict(bool b) { return b ? Verdict::True : Verdict::False; }

// Fully co-first: no nonzero quotient lies in T_sigma. Co-first: that, or
// M itself lies in T_sigma. Second: sigma(M) is 0 or M.
Verdict is_fully_co_first(const ModulePtr& m, const Preradical& sigma);
Verdict is_co_first(const ModulePtr& m, const Preradical& sigma);
Verdict is_second(const ModulePtr& m, const Preradical& sigma);
// Every proper fully invariant submodule is superfluous.
bool is_dihollow(const ModulePtr& m);

// The same predicates for a universe member under a universe assignment.
Verdict fully_co_first(const ModuleUniverse& u, std::size_t i, const Assignment& a);
Verdict co_first(const ModuleUniverse& u, std::size_t i, const Assignment& a);
Verdict second(const ModuleUniverse& u, std::size_t i, const Assignment& a);

// Family versions: the predicate for every member of the family. On False,
// `failing` (when given) receives the index of the first offending sigma.
Verdict family_co_first(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                        std::size_t* failing = nullptr);
Verdict family_fully_co_first(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                              std::size_t* failing = nullptr);
Verdict family_second(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                      std::size_t* failing = nullptr);

// Membership bitsets over the universe. P: fully co-first (0 included);
// P_bar: co-first plus 0; S: second plus 0; T, F: torsion and torsion-free.
struct ClassTriple {
  DynBitset P, P_bar, S, T, F;
  nlohmann::json to_json(const ModuleUniverse& u) const;
};

ClassTriple class_triple(const Assignment& a, const ModuleUniverse& u);

}  // namespace prerad
