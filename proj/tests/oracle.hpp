#pragma once

// Brute-force references used by the tests. Nothing here calls the library's
// search code: subsets are enumerated directly and maps are built from the
// additive basis, then checked element by element.

#include <algorithm>
#include <ostream>
#include <set>
#include <vector>

#include "prerad/module.hpp"

namespace oracle {

using prerad::DynBitset;
using prerad::Elem;
using prerad::ModulePtr;

inline bool closed_submodule(const prerad::FiniteModule& m, const DynBitset& s) {
  if (!s.test(0)) return false;
  const auto n = m.size();
  const auto& ring = *m.ring();
  for (Elem a = 0; a < n; ++a) {
    if (!s.test(a)) continue;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!s.test(m.act(r, a))) return false;
    for (Elem b = 0; b < n; ++b)
      if (s.test(b) && !s.test(m.add(a, b))) return false;
  }
  return true;
}

// Every subset closed under + and the action. Only for |M| <= 16.
inline std::vector<DynBitset> submodules(const ModulePtr& m) {
  const auto n = m->size();
  std::vector<DynBitset> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!(mask & 1U)) continue;
    DynBitset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    if (closed_submodule(*m, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All R-linear maps as element tables, built from images of the additive
// basis e_i and filtered by order and linearity checks.
inline std::vector<std::vector<Elem>> homs(const ModulePtr& src, const ModulePtr& dst) {
  const auto k = src->rank();
  const auto& orders = src->cyclic_orders();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(k, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = dst->times(orders[i], img[i]) == 0;
    if (ok) {
      std::vector<Elem> table(src->size());
      for (Elem x = 0; x < src->size(); ++x) {
        auto c = src->coordinates(x);
        Elem y = 0;
        for (std::size_t i = 0; i < k; ++i) y = dst->add(y, dst->times(c[i], img[i]));
        table[x] = y;
      }
      for (Elem r = 0; r < src->ring()->size() && ok; ++r)
        for (Elem x = 0; x < src->size() && ok; ++x) ok = table[src->act(r, x)] == dst->act(r, table[x]);
      if (ok) out.push_back(std::move(table));
    }
    std::size_t i = 0;
    while (i < k && ++img[i] == dst->size()) img[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline DynBitset additive_closure(const prerad::FiniteModule& m, DynBitset s) {
  s.set(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem a = 0; a < m.size(); ++a)
      for (Elem b = 0; b < m.size(); ++b)
        if (s.test(a) && s.test(b) && !s.test(m.add(a, b))) {
          s.set(m.add(a, b));
          grew = true;
        }
  }
  return s;
}

// Sum of images of every map M -> U.
inline DynBitset trace(const ModulePtr& m, const ModulePtr& u) {
  DynBitset s(u->size());
  for (const auto& f : homs(m, u))
    for (auto y : f) s.set(y);
  return additive_closure(*u, s);
}

// Meet of kernels of every map U -> M.
inline DynBitset reject(const ModulePtr& m, const ModulePtr& u) {
  DynBitset s(u->size());
  s.set_all();
  for (const auto& f : homs(u, m))
    for (Elem x = 0; x < u->size(); ++x)
      if (f[x] != 0) s.reset(x);
  return s;
}

inline bool superfluous(const ModulePtr& m, const DynBitset& n) {
  DynBitset all(m->size());
  all.set_all();
  for (const auto& k : submodules(m)) {
    if (k == all) continue;
    DynBitset sum(m->size());
    for (Elem a = 0; a < m->size(); ++a)
      for (Elem b = 0; b < m->size(); ++b)
        if (n.test(a) && k.test(b)) sum.set(m->add(a, b));
    if (sum == all) return false;
  }
  return true;
}

// Two-sided ideals of a ring with at most 16 elements, by subset scan.
inline std::vector<DynBitset> ideals(const prerad::FiniteRing& r) {
  std::vector<DynBitset> out;
  const auto n = r.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (!(mask >> r.zero() & 1U)) continue;
    DynBitset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!s.test(a)) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (s.test(b) && !s.test(r.add(a, b))) ok = false;
        if (!s.test(r.mul(a, b)) || !s.test(r.mul(b, a))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Largest nilpotent two-sided ideal; for a finite ring this is the
// Jacobson radical.
inline DynBitset nilpotent_radical(const prerad::FiniteRing& r) {
  DynBitset best(r.size());
  best.set(r.zero());
  for (const auto& i : ideals(r)) {
    DynBitset power = i;
    for (std::size_t step = 0; step <= r.size() && power.count() > 1; ++step) {
      DynBitset next(r.size());
      next.set(r.zero());
      for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = 0; b < r.size(); ++b)
          if (power.test(a) && i.test(b)) next.set(r.mul(a, b));
      // additive closure of products
      bool grew = true;
      while (grew) {
        grew = false;
        for (Elem a = 0; a < r.size(); ++a)
          for (Elem b = 0; b < r.size(); ++b)
            if (next.test(a) && next.test(b) && !next.test(r.add(a, b))) {
              next.set(r.add(a, b));
              grew = true;
            }
      }
      if (next == power) break;
      power = next;
    }
    if (power.count() == 1 && i.count() > best.count()) best = i;
  }
  return best;
}

}  // namespace oracle

namespace prerad {
// Readable gtest output for bitsets.
inline void PrintTo(const DynBitset& b, std::ostream* os) {
  *os << "{";
  bool first = true;
  b.for_each([&](std::size_t i) {
    *os << (first ? "" : ",") << i;
    first = false;
  });
  *os << "}";
}
}  // namespace prerad
