#include "prerad/cofirst.hpp"

#include "prerad/conat.hpp"
#include "prerad/construct.hpp"

namespace prerad {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Zero: return "zero";
  }
  return "?";
}

nlohmann::json to_json(Verdict v) {
  if (v == Verdict::Zero) return "zero";
  return v == Verdict::True;
}

Verdict is_fully_co_first(const ModulePtr& m, const Preradical& sigma) {
  if (m->is_zero()) return Verdict::Zero;
  for (const auto& k : m->lattice_sets()) {
    if (k.count() == m->size()) continue;
    auto q = quotient(Submodule(m, k)).module;
    if (eval(sigma, q).is_whole()) return Verdict::False;
  }
  return Verdict::True;
}

Verdict is_co_first(const ModulePtr& m, const Preradical& sigma) {
  if (m->is_zero()) return Verdict::Zero;
  if (eval(sigma, m).is_whole()) return Verdict::True;
  return is_fully_co_first(m, sigma);
}

Verdict is_second(const ModulePtr& m, const Preradical& sigma) {
  if (m->is_zero()) return Verdict::Zero;
  const auto s = eval(sigma, m);
  return verdict(s.is_zero() || s.is_whole());
}

bool is_dihollow(const ModulePtr& m) {
  const auto& lat = m->lattice_sets();
  const auto& fi = m->fully_invariant_flags();
  for (std::size_t k = 0; k + 1 < lat.size(); ++k)
    if (fi[k] && !superfluous(Submodule(m, lat[k]))) return false;
  return true;
}

Verdict fully_co_first(const ModuleUniverse& u, std::size_t i, const Assignment& a) {
  if (u.member(i)->is_zero()) return Verdict::Zero;
  const auto torsion = torsion_class(a, u);
  const std::size_t subs = u.member(i)->lattice_sets().size();
  for (std::size_t k = 0; k + 1 < subs; ++k)
    if (torsion.test(u.quotient_class(i, k))) return Verdict::False;
  return Verdict::True;
}

Verdict co_first(const ModuleUniverse& u, std::size_t i, const Assignment& a) {
  if (u.member(i)->is_zero()) return Verdict::Zero;
  if (torsion_class(a, u).test(i)) return Verdict::True;
  return fully_co_first(u, i, a);
}

Verdict second(const ModuleUniverse& u, std::size_t i, const Assignment& a) {
  if (u.member(i)->is_zero()) return Verdict::Zero;
  return verdict(a[i] == 0 || a[i] + 1 == u.member(i)->lattice_sets().size());
}

namespace {

template <typename Pred>
Verdict for_family(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family, std::size_t* failing,
                   Pred pred) {
  if (u.member(i)->is_zero()) return Verdict::Zero;
  for (std::size_t s = 0; s < family.size(); ++s)
    if (pred(u, i, family[s]) == Verdict::False) {
      if (failing) *failing = s;
      return Verdict::False;
    }
  return Verdict::True;
}

}  // namespace

Verdict family_co_first(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                        std::size_t* failing) {
  return for_family(u, i, family, failing, co_first);
}

Verdict family_fully_co_first(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                              std::size_t* failing) {
  return for_family(u, i, family, failing, fully_co_first);
}

Verdict family_second(const ModuleUniverse& u, std::size_t i, const std::vector<Assignment>& family,
                      std::size_t* failing) {
  return for_family(u, i, family, failing, second);
}

ClassTriple class_triple(const Assignment& a, const ModuleUniverse& u) {
  ClassTriple c{DynBitset(u.size()), DynBitset(u.size()), DynBitset(u.size()), torsion_class(a, u),
                torsion_free_class(a, u)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (fully_co_first(u, i, a) != Verdict::False) c.P.set(i);
    if (co_first(u, i, a) != Verdict::False) c.P_bar.set(i);
    if (second(u, i, a) != Verdict::False) c.S.set(i);
  }
  return c;
}

nlohmann::json ClassTriple::to_json(const ModuleUniverse& u) const {
  return {{"P", class_json(P, u)},
          {"P_bar", class_json(P_bar, u)},
          {"S", class_json(S, u)},
          {"T", class_json(T, u)},
          {"F", class_json(F, u)}};
}

}  // namespace prerad
