#include "prerad/projective.hpp"

#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/homs.hpp"

namespace prerad {

namespace {

// Re as a module, with the ring element r*e behind each of its elements.
struct LocalProjective {
  ModulePtr module;
  std::vector<Elem> ring_element;
  Elem idempotent = 0;
};

std::vector<LocalProjective> local_projectives(const RingPtr& ring) {
  const auto simples = simple_modules(ring);
  auto reg = regular_presented(ring);
  std::vector<Elem> ring_of(ring->size());
  for (Elem r = 0; r < ring->size(); ++r) ring_of[reg.map[r]] = r;

  std::vector<LocalProjective> out(simples.size());
  std::size_t filled = 0;
  for (Elem e : idempotents(ring)) {
    if (filled == simples.size()) break;
    if (e == ring->zero()) continue;
    const Elem x = reg.map[e];
    auto sub = submodule_as_module(Submodule(reg.module, reg.module->cyclic_span(x)));
    auto top = quotient(radical_of(sub.module)).module;
    if (!is_simple(top)) continue;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (out[i].module || !are_isomorphic(top, simples[i])) continue;
      LocalProjective lp;
      lp.module = sub.module;
      lp.idempotent = e;
      lp.ring_element.resize(sub.module->size());
      for (Elem y = 0; y < sub.module->size(); ++y) lp.ring_element[y] = ring_of[sub.embedding(y)];
      out[i] = std::move(lp);
      ++filled;
      break;
    }
  }
  if (filled != simples.size()) throw Error("no local projective found for some simple module");
  return out;
}

}  // namespace

std::vector<Elem> idempotents(const RingPtr& ring) {
  std::vector<Elem> out;
  for (Elem e = 0; e < ring->size(); ++e)
    if (ring->mul(e, e) == e) out.push_back(e);
  return out;
}

std::vector<ModulePtr> indecomposable_projectives(const RingPtr& ring) {
  std::vector<ModulePtr> out;
  for (auto& lp : local_projectives(ring)) out.push_back(lp.module);
  return out;
}

ProjectiveCover projective_cover(const ModulePtr& m) {
  if (m->is_zero()) return {m, ModuleMorphism::identity(m)};
  const auto& ring = m->ring();
  const auto locals = local_projectives(ring);
  // Each chosen y in eM with y outside span + rad(M) adds one simple summand to
  // the top; the images generate M once they generate M / rad M.
  DynBitset span = radical_of(m).elements();
  std::vector<std::size_t> kinds;
  std::vector<Elem> images;
  while (span.count() < m->size()) {
    bool grew = false;
    for (std::size_t i = 0; i < locals.size() && !grew; ++i) {
      const Elem e = locals[i].idempotent;
      for (Elem y = 0; y < m->size(); ++y) {
        if (span.test(y) || m->act(e, y) != y) continue;
        kinds.push_back(i);
        images.push_back(y);
        span = m->join_cyclic(span, y);
        grew = true;
        break;
      }
    }
    if (!grew) throw Error("projective cover construction stalled");
  }
  std::vector<ModulePtr> parts;
  for (auto i : kinds) parts.push_back(locals[i].module);
  auto sum = direct_sum(parts);
  std::vector<Elem> table(sum.module->size(), 0);
  for (Elem x = 0; x < sum.module->size(); ++x) {
    Elem acc = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Elem c = sum.projections[j](x);
      acc = m->add(acc, m->act(locals[kinds[j]].ring_element[c], images[j]));
    }
    table[x] = acc;
  }
  ModuleMorphism epi(sum.module, m, std::move(table));
  if (!epi.is_surjective() || !superfluous(epi.kernel())) throw Error("projective cover verification failed");
  return {sum.module, std::move(epi)};
}

bool is_projective(const ModulePtr& m) { return projective_cover(m).cover->size() == m->size(); }

}  // namespace prerad
