#include "prerad/products.hpp"

#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/homs.hpp"

namespace prerad {

namespace {

void same_parent(const Submodule& a, const Submodule& b) {
  if (a.parent() != b.parent()) throw Error("submodules of different modules");
}

bool trace_is_everything(const ModulePtr& m, const ModulePtr& k) {
  DynBitset img(k->size());
  img.set(0);
  for (const auto& f : hom_tables(*m, *k))
    for (Elem e : f) img.set(e);
  std::vector<Elem> gens;
  img.for_each([&](std::size_t x) { gens.push_back(static_cast<Elem>(x)); });
  return Submodule::generated_by(k, gens).is_whole();
}

nlohmann::json pair_json(const std::optional<SubmodulePair>& w) {
  if (!w) return nullptr;
  return nlohmann::json::array({w->first.label(), w->second.label()});
}

}  // namespace

bool xi_contains(const ModulePtr& m, const ModulePtr& k) {
  if (!same_ring(m->ring(), k->ring())) throw RingMismatch();
  return trace_is_everything(m, k);
}

Submodule box_product(const Submodule& a, const Submodule& b) {
  same_parent(a, b);
  const auto& m = a.parent();
  auto q = quotient(b);
  DynBitset keep(q.module->size());
  keep.set_all();
  for (const auto& f : hom_tables(*q.module, *m))
    for (Elem x = 0; x < q.module->size(); ++x)
      if (!a.contains(f[x])) keep.reset(x);
  return Submodule(m, q.projection.preimage_set(keep));
}

Submodule comultiplication(const Submodule& a, const Submodule& b) {
  same_parent(a, b);
  const auto& m = a.parent();
  auto qa = quotient(a).module;
  auto qb = quotient(b);
  DynBitset keep(qb.module->size());
  keep.set_all();
  for (const auto& f : hom_tables(*qb.module, *qa))
    for (Elem x = 0; x < qb.module->size(); ++x)
      if (f[x] != 0) keep.reset(x);
  return Submodule(m, qb.projection.preimage_set(keep));
}

Submodule totalizer(const Submodule& n) {
  const auto& m = n.parent();
  auto qn = quotient(n).module;
  DynBitset acc(m->size());
  acc.set_all();
  for (const auto& b : m->lattice_sets()) {
    auto qb = quotient(Submodule(m, b)).module;
    if (!has_nonzero_hom(*qn, *qb)) acc &= b;
  }
  return Submodule(m, acc);
}

CoprimeVerdict coprime_verdict(const ModulePtr& m) {
  CoprimeVerdict v;
  if (m->is_zero()) {
    v.zero = true;
    return v;
  }
  // Quotients and hom tables are shared between criteria; each criterion
  // still evaluates its own definition.
  std::vector<Submodule> proper;
  std::vector<QuotientResult> quotients;
  for (const auto& s : m->lattice_sets()) {
    if (s.count() == m->size()) continue;
    proper.emplace_back(m, s);
    quotients.push_back(quotient(proper.back()));
  }
  const auto n_proper = proper.size();
  std::vector<std::optional<std::vector<ElemTable>>> between(n_proper * n_proper);
  auto homs = [&](std::size_t from, std::size_t to) -> const std::vector<ElemTable>& {
    auto& slot = between[from * n_proper + to];
    if (!slot) slot = hom_tables(*quotients[from].module, *quotients[to].module);
    return *slot;
  };
  std::vector<std::optional<std::vector<ElemTable>>> into_m(n_proper);
  auto homs_to_m = [&](std::size_t from) -> const std::vector<ElemTable>& {
    if (!into_m[from]) into_m[from] = hom_tables(*quotients[from].module, *m);
    return *into_m[from];
  };

  for (std::size_t i = 0; i < n_proper && v.by_xi; ++i)
    if (!xi_contains(quotients[i].module, m)) {
      v.by_xi = false;
      v.xi_witness.emplace(proper[i], proper[i]);
    }
  for (std::size_t l = 0; l < n_proper; ++l)
    for (std::size_t n = 0; n < n_proper; ++n) {
      const auto& qn = quotients[n];
      if (v.by_box) {
        // L box N: preimage of the x in M/N sent into L by every f: M/N -> M
        DynBitset keep(qn.module->size());
        keep.set_all();
        for (const auto& f : homs_to_m(n))
          for (Elem x = 0; x < qn.module->size(); ++x)
            if (!proper[l].contains(f[x])) keep.reset(x);
        if (qn.projection.preimage_set(keep).count() == m->size()) {
          v.by_box = false;
          v.box_witness.emplace(proper[l], proper[n]);
        }
      }
      if (v.by_comult) {
        // (L:N): preimage of the reject of M/L in M/N
        DynBitset keep(qn.module->size());
        keep.set_all();
        for (const auto& f : homs(n, l))
          for (Elem x = 0; x < qn.module->size(); ++x)
            if (f[x] != 0) keep.reset(x);
        if (qn.projection.preimage_set(keep).count() == m->size()) {
          v.by_comult = false;
          v.comult_witness.emplace(proper[l], proper[n]);
        }
      }
      if (v.by_hom) {
        const auto& fs = homs(l, n);
        bool nonzero = std::any_of(fs.begin(), fs.end(),
                                   [](const ElemTable& f) { return std::any_of(f.begin(), f.end(), [](Elem y) { return y != 0; }); });
        if (!nonzero) {
          v.by_hom = false;
          v.hom_witness.emplace(proper[l], proper[n]);
        }
      }
    }
  return v;
}

nlohmann::json CoprimeVerdict::to_json() const {
  return {{"zero", zero},
          {"by_xi", by_xi},
          {"by_box", by_box},
          {"by_comult", by_comult},
          {"by_hom", by_hom},
          {"witness",
           {{"xi", pair_json(xi_witness)},
            {"box", pair_json(box_witness)},
            {"comult", pair_json(comult_witness)},
            {"hom", pair_json(hom_witness)}}}};
}

bool xi_witness_holds(const SubmodulePair& w) {
  return w.first.is_proper() && !xi_contains(quotient(w.first).module, w.first.parent());
}

bool box_witness_holds(const SubmodulePair& w) {
  return w.first.is_proper() && w.second.is_proper() && box_product(w.first, w.second).is_whole();
}

bool comult_witness_holds(const SubmodulePair& w) {
  return w.first.is_proper() && w.second.is_proper() && comultiplication(w.first, w.second).is_whole();
}

bool hom_witness_holds(const SubmodulePair& w) {
  return w.first.is_proper() && w.second.is_proper() &&
         !has_nonzero_hom(*quotient(w.first).module, *quotient(w.second).module);
}

}  // namespace prerad
