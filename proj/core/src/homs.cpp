#include "prerad/homs.hpp"

#include <algorithm>

#include "prerad/error.hpp"

namespace prerad {

namespace {

class HomSearch {
 public:
  HomSearch(const FiniteModule& src, const FiniteModule& dst, bool bijective_only)
      : src_(src), dst_(dst), gens_(src.ring_generators()), bijective_only_(bijective_only) {
    const std::size_t rn = src.ring()->size();
    DynBitset span(src.size());
    span.set(0);
    for (Elem g : gens_) {
      // Ring elements that push g back into the span of earlier generators;
      // the image of g must agree with the partial map on those.
      std::vector<Elem> rel;
      for (Elem r = 0; r < rn; ++r)
        if (span.test(src.act(r, g))) rel.push_back(r);
      relations_.push_back(std::move(rel));
      spans_.push_back(span);
      span = src.join_cyclic(span, g);
    }
    // Additive annihilator pattern of each generator for the bijective filter.
    for (Elem g : gens_) {
      std::vector<bool> ann(rn);
      for (Elem r = 0; r < rn; ++r) ann[r] = src.act(r, g) == 0;
      annihilators_.push_back(std::move(ann));
    }
    levels_.assign(gens_.size() + 1, ElemTable(src.size(), 0));
  }

  void run(const std::function<bool(const ElemTable&)>& visit) {
    if (gens_.empty()) {
      visit(levels_[0]);
      return;
    }
    visit_ = &visit;
    extend(0);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(std::size_t i) {
    if (i == gens_.size()) return (*visit_)(levels_[i]);
    const Elem g = gens_[i];
    const ElemTable& f = levels_[i];
    const std::size_t rn = src_.ring()->size();
    for (Elem y = 0; y < dst_.size(); ++y) {
      bool ok = true;
      for (Elem r : relations_[i])
        if (dst_.act(r, y) != f[src_.act(r, g)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (bijective_only_) {
        for (Elem r = 0; r < rn && ok; ++r) ok = (dst_.act(r, y) == 0) == annihilators_[i][r];
        if (!ok) continue;
      }
      ElemTable& next = levels_[i + 1];
      spans_[i].for_each([&](std::size_t s) {
        for (Elem r = 0; r < rn; ++r)
          next[src_.add(static_cast<Elem>(s), src_.act(r, g))] = dst_.add(f[s], dst_.act(r, y));
      });
      if (!extend(i + 1)) return false;
    }
    return true;
  }

  const FiniteModule& src_;
  const FiniteModule& dst_;
  const std::vector<Elem>& gens_;
  bool bijective_only_;
  std::vector<std::vector<Elem>> relations_;
  std::vector<DynBitset> spans_;
  std::vector<std::vector<bool>> annihilators_;
  std::vector<ElemTable> levels_;
  const std::function<bool(const ElemTable&)>* visit_ = nullptr;
};

std::vector<Elem> generator_key(const FiniteModule& src, const ElemTable& t) {
  std::vector<Elem> key;
  for (std::size_t i = 0; i < src.rank(); ++i) key.push_back(t[src.generator(i)]);
  return key;
}

bool is_bijection(const ElemTable& t) {
  std::vector<bool> hit(t.size(), false);
  for (Elem e : t) {
    if (e >= t.size() || hit[e]) return false;
    hit[e] = true;
  }
  return true;
}

}  // namespace

void for_each_hom(const FiniteModule& src, const FiniteModule& dst, const std::function<bool(const ElemTable&)>& visit,
                  bool bijective_only) {
  if (!same_ring(src.ring(), dst.ring())) throw RingMismatch();
  if (src.size() > kMaxModuleOrder || dst.size() > kMaxModuleOrder)
    throw BoundExceeded("hom enumeration limited to modules of order <= " + std::to_string(kMaxModuleOrder));
  HomSearch(src, dst, bijective_only).run(visit);
}

std::vector<ElemTable> hom_tables(const FiniteModule& src, const FiniteModule& dst) {
  std::vector<std::pair<std::vector<Elem>, ElemTable>> keyed;
  for_each_hom(src, dst, [&](const ElemTable& t) {
    keyed.emplace_back(generator_key(src, t), t);
    return true;
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ElemTable> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::vector<ModuleMorphism> hom_set(const ModulePtr& src, const ModulePtr& dst) {
  std::vector<ModuleMorphism> out;
  for (auto& t : hom_tables(*src, *dst)) out.emplace_back(src, dst, std::move(t));
  return out;
}

bool has_nonzero_hom(const FiniteModule& src, const FiniteModule& dst) {
  if (src.is_zero() || dst.is_zero()) return false;
  bool found = false;
  for_each_hom(src, dst, [&](const ElemTable& t) {
    found = std::any_of(t.begin(), t.end(), [](Elem e) { return e != 0; });
    return !found;
  });
  return found;
}

std::vector<long long> iso_profile(const FiniteModule& m) {
  std::vector<long long> p{static_cast<long long>(m.size())};
  auto f = m.invariant_factors();
  p.push_back(static_cast<long long>(f.size()));
  p.insert(p.end(), f.begin(), f.end());
  for (Elem r = 0; r < m.ring()->size(); ++r) {
    DynBitset img(m.size());
    for (Elem x = 0; x < m.size(); ++x) img.set(m.act(r, x));
    p.push_back(static_cast<long long>(img.count()));
  }
  return p;
}

std::optional<ModuleMorphism> find_isomorphism(const ModulePtr& src, const ModulePtr& dst) {
  if (!same_ring(src->ring(), dst->ring())) throw RingMismatch();
  if (src->size() != dst->size() || iso_profile(*src) != iso_profile(*dst)) return std::nullopt;
  std::optional<ElemTable> found;
  for_each_hom(
      *src, *dst,
      [&](const ElemTable& t) {
        if (!is_bijection(t)) return true;
        found = t;
        return false;
      },
      true);
  if (!found) return std::nullopt;
  return ModuleMorphism(src, dst, std::move(*found));
}

bool are_isomorphic(const ModulePtr& a, const ModulePtr& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace prerad
