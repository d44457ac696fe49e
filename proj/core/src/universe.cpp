#include "prerad/universe.hpp"

#include <algorithm>
#include <numeric>

#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/projective.hpp"

namespace prerad {

namespace {

struct ClassList {
  std::vector<ModulePtr> members;
  std::vector<std::vector<long long>> profiles;
  std::size_t cap = 0;

  std::optional<std::size_t> find(const ModulePtr& m, const std::vector<long long>& profile) const {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (profiles[i] == profile && find_isomorphism(m, members[i])) return i;
    return std::nullopt;
  }

  std::size_t add(const ModulePtr& raw) {
    auto m = canonical(raw).first;
    auto profile = iso_profile(*m);
    if (auto i = find(m, profile)) return *i;
    if (members.size() == cap)
      throw BoundExceeded("universe closure exceeds the class cap of " + std::to_string(cap));
    members.push_back(m);
    profiles.push_back(std::move(profile));
    return members.size() - 1;
  }
};

}  // namespace

UniversePtr ModuleUniverse::build(const RingPtr& ring, UniverseOptions options) {
  return build(ring, {regular_module(ring)}, options);
}

UniversePtr ModuleUniverse::build(const RingPtr& ring, const std::vector<ModulePtr>& seeds, UniverseOptions options) {
  if (options.max_order < ring->size())
    throw SpecError("max_order " + std::to_string(options.max_order) + " is below the ring order " +
                    std::to_string(ring->size()));
  if (options.max_order > kMaxModuleOrder)
    throw BoundExceeded("max_order is limited to " + std::to_string(kMaxModuleOrder));
  if (options.max_classes == 0) throw SpecError("max_classes must be positive");

  ClassList list;
  list.cap = options.max_classes;
  list.add(FiniteModule::zero(ring));
  const auto regular = regular_module(ring);
  bool has_regular = false;
  for (const auto& s : seeds) {
    if (!same_ring(s->ring(), ring)) throw RingMismatch();
    if (s->size() > options.max_order)
      throw SpecError("seed of order " + std::to_string(s->size()) + " exceeds max_order");
    list.add(s);
    has_regular = has_regular || are_isomorphic(s, regular);
  }
  if (!has_regular) throw SpecError("universe seeds must include the regular module R");

  auto close = [&](std::size_t from) {
    for (std::size_t i = from; i < list.members.size(); ++i) {
      const ModulePtr m = list.members[i];
      for (const auto& k : m->lattice_sets()) {
        Submodule sub(m, k);
        list.add(quotient(sub).module);
        if (options.submodule_closure) list.add(submodule_as_module(sub).module);
      }
    }
  };
  close(0);

  // Direct sums of 2..sum_arity nonzero members of the first closure.
  const std::size_t base = list.members.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> sums = [&](std::size_t start, std::size_t order) {
    if (pick.size() >= 2) {
      std::vector<ModulePtr> parts;
      for (auto p : pick) parts.push_back(list.members[p]);
      list.add(direct_sum(parts).module);
    }
    if (pick.size() == options.sum_arity) return;
    for (std::size_t j = start; j < base; ++j) {
      const std::size_t sz = list.members[j]->size();
      if (sz == 1 || order * sz > options.max_order) continue;
      pick.push_back(j);
      sums(j, order * sz);
      pick.pop_back();
    }
  };
  sums(1, 1);
  close(base);

  auto u = std::shared_ptr<ModuleUniverse>(new ModuleUniverse());
  u->ring_ = ring;
  u->options_ = options;
  std::vector<std::size_t> order(list.members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return list.members[a]->size() < list.members[b]->size(); });
  for (auto i : order) {
    u->members_.push_back(list.members[i]);
    u->profiles_.push_back(list.profiles[i]);
  }
  const std::size_t n = u->members_.size();
  u->regular_ = *u->find(regular);
  {
    auto reg = regular_presented(ring);
    auto iso = find_isomorphism(reg.module, u->members_[u->regular_]);
    u->regular_ring_.assign(ring->size(), 0);
    for (Elem r = 0; r < ring->size(); ++r) u->regular_ring_[(*iso)(reg.map[r])] = r;
  }

  const auto simples = simple_modules(ring);
  for (const auto& s : simples) {
    auto i = u->find(s);
    if (!i) throw Error("a simple module is missing from the universe");
    u->simples_.push_back(*i);
  }

  // Links from every (member, submodule) to the members it produces.
  u->quotients_.resize(n);
  u->subs_.resize(n);
  u->quotient_sets_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = u->members_[i];
    for (const auto& k : m->lattice_sets()) {
      Submodule sub(m, k);
      auto q = quotient(sub);
      auto qc = u->find(q.module);
      if (!qc) throw Error("universe is not quotient-closed");
      auto qiso = find_isomorphism(q.module, u->members_[*qc]);
      u->quotients_[i].push_back({*qc, q.projection.then(*qiso)});
      u->quotient_sets_[i].set(*qc);

      auto s = submodule_as_module(sub);
      if (auto sc = u->find(s.module)) {
        auto siso = find_isomorphism(u->members_[*sc], s.module);
        u->subs_[i].push_back({*sc, siso->then(s.embedding)});
      } else if (options.submodule_closure) {
        throw Error("universe is not submodule-closed");
      } else {
        u->subs_[i].push_back({n, ModuleMorphism::zero(s.module, m)});
      }
    }
  }

  // Names: abelian type when R is Z/n, otherwise R, S<i>, P<i> or a numbered label.
  const auto projectives = indecomposable_projectives(ring);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = u->members_[i];
    std::string name;
    if (ring->additively_cyclic() || m->is_zero()) {
      name = m->abelian_type();
    } else if (i == u->regular_) {
      name = "R";
    } else {
      for (std::size_t s = 0; s < simples.size() && name.empty(); ++s)
        if (u->simples_[s] == i) name = "S" + std::to_string(s + 1);
      for (std::size_t p = 0; p < projectives.size() && name.empty(); ++p)
        if (are_isomorphic(m, projectives[p])) name = "P" + std::to_string(p + 1);
      for (std::size_t a = 1; a < i && name.empty(); ++a)
        for (std::size_t b = a; b < i && name.empty(); ++b)
          if (u->members_[a]->size() * u->members_[b]->size() == m->size() &&
              are_isomorphic(direct_sum({u->members_[a], u->members_[b]}).module, m))
            name = u->names_[a] + "+" + u->names_[b];
      if (name.empty()) name = "M" + std::to_string(i) + "(" + m->abelian_type() + ")";
    }
    u->names_.push_back(std::move(name));
  }

  u->hom_once_ = std::make_unique<std::once_flag[]>(n * n);
  u->hom_cache_.resize(n * n);
  return u;
}

std::optional<std::size_t> ModuleUniverse::find(const ModulePtr& m) const {
  if (!same_ring(m->ring(), ring_)) throw RingMismatch();
  const auto profile = iso_profile(*m);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (profiles_[i] == profile && find_isomorphism(m, members_[i])) return i;
  return std::nullopt;
}

std::optional<std::size_t> ModuleUniverse::find_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const std::vector<ElemTable>& ModuleUniverse::homs(std::size_t i, std::size_t j) const {
  const std::size_t slot = i * members_.size() + j;
  std::call_once(hom_once_[slot], [&] { hom_cache_[slot] = hom_tables(*members_[i], *members_[j]); });
  return hom_cache_[slot];
}

bool ModuleUniverse::nonzero_hom(std::size_t i, std::size_t j) const { return homs(i, j).size() > 1; }

nlohmann::json ModuleUniverse::parameters() const {
  return {{"max_order", options_.max_order},
          {"sum_arity", options_.sum_arity},
          {"submodule_closure", options_.submodule_closure},
          {"classes", members_.size()}};
}

nlohmann::json ModuleUniverse::describe() const {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    members.push_back({{"index", i},
                       {"name", names_[i]},
                       {"order", m->size()},
                       {"abelian_type", m->abelian_type()},
                       {"submodules", m->lattice_sets().size()}});
  }
  return {{"ring", ring_->tag()}, {"parameters", parameters()}, {"members", members}};
}

}  // namespace prerad
