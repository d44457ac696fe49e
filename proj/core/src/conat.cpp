#include "prerad/conat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "prerad/error.hpp"

namespace prerad {

std::string class_label(const DynBitset& c, const ModuleUniverse& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!c.test(i)) continue;
    if (!first) out += ", ";
    out += u.name(i);
    first = false;
  }
  return out + "}";
}

nlohmann::json class_json(const DynBitset& c, const ModuleUniverse& u) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.test(i)) out.push_back(u.name(i));
  return out;
}

bool is_quotient_closed(const DynBitset& c, const ModuleUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.test(i) && !u.quotient_set(i).is_subset_of(c)) return false;
  return true;
}

DynBitset quotient_closure(const DynBitset& c, const ModuleUniverse& u) {
  DynBitset out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.test(i)) out |= u.quotient_set(i);
  return out;
}

namespace {

DynBitset perp_unchecked(const DynBitset& c, const ModuleUniverse& u) {
  DynBitset out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto q = u.quotient_set(i) & c;
    q.reset(u.zero_index());
    if (q.none()) out.set(i);
  }
  return out;
}

}  // namespace

DynBitset perp(const DynBitset& c, const ModuleUniverse& u) {
  if (!is_quotient_closed(c, u)) throw SpecError("perp: class " + class_label(c, u) + " is not closed under quotients");
  return perp_unchecked(c, u);
}

bool is_conatural(const DynBitset& c, const ModuleUniverse& u) {
  if (!is_quotient_closed(c, u)) return false;
  return perp_unchecked(perp_unchecked(c, u), u) == c;
}

bool satisfies_cn(const DynBitset& c, const ModuleUniverse& u) {
  // Nonzero quotients of members of c.
  DynBitset reach(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.test(i)) reach |= u.quotient_set(i);
  reach.reset(u.zero_index());
  for (std::size_t m = 0; m < u.size(); ++m) {
    if (c.test(m)) continue;
    bool premise = true;
    for (std::size_t q = 0; q < u.size() && premise; ++q) {
      if (q == u.zero_index() || !u.quotient_set(m).test(q)) continue;
      if ((u.quotient_set(q) & reach).none()) premise = false;
    }
    if (premise) return false;
  }
  return true;
}

DynBitset conatural_closure(const DynBitset& c, const ModuleUniverse& u) {
  return perp_unchecked(perp_unchecked(quotient_closure(c, u), u), u);
}

std::vector<DynBitset> quotient_closed_classes(const ModuleUniverse& u, std::size_t cap) {
  // Members are sorted by size, so every proper quotient of i has a smaller
  // index. Decide membership from the largest member down; including i
  // forces its quotients in.
  std::vector<DynBitset> out;
  DynBitset start(u.size());
  start.set(u.zero_index());
  auto rec = [&](auto&& self, std::size_t remaining, const DynBitset& cur) -> void {
    if (remaining == 0) {
      if (out.size() >= cap) throw BoundExceeded("more than " + std::to_string(cap) + " quotient-closed classes");
      out.push_back(cur);
      return;
    }
    const std::size_t i = remaining - 1;
    if (cur.test(i)) {
      self(self, i, cur);
      return;
    }
    self(self, i, cur);
    self(self, i, cur | u.quotient_set(i));
  };
  rec(rec, u.size(), start);
  std::sort(out.begin(), out.end(), [](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::vector<DynBitset> conatural_classes(const ModuleUniverse& u, std::size_t cap) {
  // perp(D) over quotient-closed D gives each conatural class.
  std::set<DynBitset> seen;
  for (const auto& d : quotient_closed_classes(u, cap)) seen.insert(perp_unchecked(d, u));
  std::vector<DynBitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

nlohmann::json LatticeCheck::to_json() const {
  return {{"has_bounds", has_bounds},
          {"meet_closed", meet_closed},
          {"join_closed", join_closed},
          {"complemented", complemented},
          {"distributive", distributive},
          {"boolean", boolean()}};
}

LatticeCheck check_boolean(const std::vector<DynBitset>& classes, const ModuleUniverse& u) {
  LatticeCheck r;
  const std::set<DynBitset> in(classes.begin(), classes.end());
  DynBitset bottom(u.size());
  bottom.set(u.zero_index());
  DynBitset top(u.size());
  top.set_all();
  r.has_bounds = in.count(bottom) && in.count(top);
  auto join = [&](const DynBitset& a, const DynBitset& b) { return conatural_closure(a | b, u); };
  r.meet_closed = r.join_closed = r.complemented = r.distributive = true;
  for (const auto& a : classes) {
    const auto pa = perp_unchecked(a, u);
    if (!in.count(pa) || (a & pa) != bottom || join(a, pa) != top) r.complemented = false;
    for (const auto& b : classes) {
      if (!in.count(a & b)) r.meet_closed = false;
      if (!in.count(join(a, b))) r.join_closed = false;
    }
  }
  if (classes.size() <= 64) {
    for (const auto& a : classes)
      for (const auto& b : classes)
        for (const auto& c : classes)
          if ((a & join(b, c)) != join(a & b, a & c)) r.distributive = false;
  } else {
    r.distributive = false;
  }
  return r;
}

std::string conat_dot(const std::vector<DynBitset>& classes, const ModuleUniverse& u) {
  std::ostringstream out;
  out << "digraph conat {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < classes.size(); ++i) out << "  c" << i << " [label=\"" << class_label(classes[i], u) << "\"];\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j || !classes[i].is_subset_of(classes[j]) || classes[i] == classes[j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < classes.size() && cover; ++k)
        if (k != i && k != j && classes[i].is_subset_of(classes[k]) && classes[k].is_subset_of(classes[j]) &&
            classes[k] != classes[i] && classes[k] != classes[j])
          cover = false;
      if (cover) out << "  c" << i << " -> c" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace prerad
