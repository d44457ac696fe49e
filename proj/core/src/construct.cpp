#include "prerad/construct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "prerad/error.hpp"
#include "prerad/homs.hpp"
#include "prerad/projective.hpp"

namespace prerad {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Splits at `sep` outside (), [], <> and {}.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '<' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '>' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<long long> parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (s.size() > 9) return std::nullopt;
  return std::stoll(s);
}

}  // namespace

Presented decompose(const RingPtr& ring, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                    const std::function<Elem(Elem, Elem)>& act) {
  if (n == 1) return {FiniteModule::zero(ring), {0}};

  // Tower of cyclic extensions H_0 < H_1 < ... with one relation per step.
  std::vector<std::vector<long long>> coeff(n);
  std::vector<bool> in_h(n, false);
  std::vector<Elem> members{0};
  in_h[0] = true;
  std::vector<Elem> gens;
  IntMatrix relations;
  Elem next_free = 1;
  while (members.size() < n) {
    while (in_h[next_free]) ++next_free;
    const Elem x = next_free;
    const std::size_t k = gens.size();
    long long m = 1;
    Elem y = x;
    while (!in_h[y]) {
      y = add(y, x);
      ++m;
    }
    std::vector<long long> row(k + 1, 0);
    for (std::size_t i = 0; i < coeff[y].size(); ++i) row[i] = -coeff[y][i];
    row[k] = m;
    relations.push_back(std::move(row));
    gens.push_back(x);

    const std::size_t old = members.size();
    for (std::size_t h = 0; h < old; ++h) {
      Elem e = members[h];
      for (long long j = 1; j < m; ++j) {
        e = add(e, x);
        auto c = coeff[members[h]];
        c.resize(k + 1, 0);
        c[k] = j;
        coeff[e] = std::move(c);
        in_h[e] = true;
        members.push_back(e);
      }
    }
  }
  const std::size_t kk = gens.size();
  for (auto& row : relations) row.resize(kk, 0);
  for (auto& c : coeff) c.resize(kk, 0);

  const SmithForm snf = smith_normal_form(relations, kk);
  std::vector<std::size_t> kept;
  std::vector<int> orders;
  for (std::size_t j = 0; j < kk; ++j)
    if (snf.diagonal[j] > 1) {
      kept.push_back(j);
      orders.push_back(static_cast<int>(snf.diagonal[j]));
    }

  // New coordinates of an abstract element: c * V reduced mod the diagonal.
  auto new_coords = [&](Elem a) {
    std::vector<long long> out;
    for (std::size_t j : kept) {
      long long s = 0;
      for (std::size_t i = 0; i < kk; ++i) s += coeff[a][i] * snf.v[i][j];
      out.push_back(mod(s, snf.diagonal[j]));
    }
    return out;
  };

  std::vector<std::vector<long long>> coords(n);
  for (Elem a = 0; a < n; ++a) coords[a] = new_coords(a);
  std::vector<std::size_t> strides(kept.size(), 1);
  for (std::size_t i = kept.size(); i-- > 1;) strides[i - 1] = strides[i] * static_cast<std::size_t>(orders[i]);
  auto index_of = [&](const std::vector<long long>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx += static_cast<std::size_t>(c[i]) * strides[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> map(n);
  std::vector<Elem> inverse(n);
  for (Elem a = 0; a < n; ++a) {
    map[a] = index_of(coords[a]);
    inverse[map[a]] = a;
  }

  std::vector<IntMatrix> action(ring->size(), IntMatrix(kept.size(), std::vector<long long>(kept.size(), 0)));
  for (Elem r = 0; r < ring->size(); ++r)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const Elem g = inverse[static_cast<Elem>(strides[j])];
      const auto& c = coords[act(r, g)];
      for (std::size_t i = 0; i < kept.size(); ++i) action[r][i][j] = c[i];
    }
  auto module = FiniteModule::create_trusted(ring, std::move(orders), std::move(action));
  return {std::move(module), std::move(map)};
}

std::pair<ModulePtr, ModuleMorphism> canonical(const ModulePtr& m) {
  auto p = decompose(
      m->ring(), m->size(), [&](Elem a, Elem b) { return m->add(a, b); }, [&](Elem r, Elem x) { return m->act(r, x); });
  ModuleMorphism iso(m, p.module, std::move(p.map));
  return {p.module, std::move(iso)};
}

QuotientResult quotient(const Submodule& n) {
  const auto& m = n.parent();
  std::vector<Elem> id(m->size(), 0);
  std::vector<bool> seen(m->size(), false);
  std::vector<Elem> reps;
  const auto members = n.elements().indices();
  for (Elem x = 0; x < m->size(); ++x) {
    if (seen[x]) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : members) {
      const Elem e = m->add(x, static_cast<Elem>(y));
      id[e] = c;
      seen[e] = true;
    }
  }
  auto p = decompose(
      m->ring(), reps.size(), [&](Elem a, Elem b) { return id[m->add(reps[a], reps[b])]; },
      [&](Elem r, Elem a) { return id[m->act(r, reps[a])]; });
  std::vector<Elem> table(m->size());
  for (Elem x = 0; x < m->size(); ++x) table[x] = p.map[id[x]];
  ModuleMorphism proj(m, p.module, std::move(table));
  return {p.module, std::move(proj)};
}

SubmoduleResult submodule_as_module(const Submodule& n) {
  const auto& m = n.parent();
  const auto members = n.elements().indices();
  std::vector<Elem> pos(m->size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<Elem>(i);
  auto p = decompose(
      m->ring(), members.size(),
      [&](Elem a, Elem b) { return pos[m->add(static_cast<Elem>(members[a]), static_cast<Elem>(members[b]))]; },
      [&](Elem r, Elem a) { return pos[m->act(r, static_cast<Elem>(members[a]))]; });
  std::vector<Elem> table(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) table[p.map[i]] = static_cast<Elem>(members[i]);
  ModuleMorphism emb(p.module, m, std::move(table));
  return {p.module, std::move(emb)};
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw Error("direct sum of no modules");
  const auto& ring = parts.front()->ring();
  for (const auto& p : parts)
    if (!same_ring(p->ring(), ring)) throw RingMismatch();
  std::vector<int> orders;
  std::vector<std::size_t> offset;
  for (const auto& p : parts) {
    offset.push_back(orders.size());
    orders.insert(orders.end(), p->cyclic_orders().begin(), p->cyclic_orders().end());
  }
  const std::size_t k = orders.size();
  std::vector<IntMatrix> action(ring->size(), IntMatrix(k, std::vector<long long>(k, 0)));
  for (Elem r = 0; r < ring->size(); ++r)
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto& a = parts[p]->action_matrix(r);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) action[r][offset[p] + i][offset[p] + j] = a[i][j];
    }
  DirectSum out{FiniteModule::create_trusted(ring, orders, std::move(action)), {}, {}};
  const auto& sum = out.module;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    std::vector<Elem> inj(part->size());
    std::vector<long long> buf(k);
    for (Elem x = 0; x < part->size(); ++x) {
      std::fill(buf.begin(), buf.end(), 0);
      auto c = part->coordinates(x);
      for (std::size_t i = 0; i < c.size(); ++i) buf[offset[p] + i] = c[i];
      inj[x] = sum->from_coordinates(buf);
    }
    std::vector<Elem> proj(sum->size());
    std::vector<long long> pc(part->rank());
    for (Elem x = 0; x < sum->size(); ++x) {
      auto c = sum->coordinates(x);
      for (std::size_t i = 0; i < pc.size(); ++i) pc[i] = c[offset[p] + i];
      proj[x] = part->from_coordinates(pc);
    }
    out.injections.emplace_back(part, sum, std::move(inj));
    out.projections.emplace_back(sum, part, std::move(proj));
  }
  return out;
}

ModulePtr direct_power(const ModulePtr& m, std::size_t k) {
  if (k == 0) return FiniteModule::zero(m->ring());
  return direct_sum(std::vector<ModulePtr>(k, m)).module;
}

Presented regular_presented(const RingPtr& ring) {
  // Relabel so that index 0 is the ring's zero.
  const std::size_t n = ring->size();
  std::vector<Elem> to_ring(n);
  std::iota(to_ring.begin(), to_ring.end(), Elem{0});
  std::swap(to_ring[0], to_ring[ring->zero()]);
  std::vector<Elem> from_ring(n);
  for (Elem i = 0; i < n; ++i) from_ring[to_ring[i]] = i;
  auto p = decompose(
      ring, n, [&](Elem a, Elem b) { return from_ring[ring->add(to_ring[a], to_ring[b])]; },
      [&](Elem r, Elem a) { return from_ring[ring->mul(r, to_ring[a])]; });
  std::vector<Elem> map(n);
  for (Elem r = 0; r < n; ++r) map[r] = p.map[from_ring[r]];
  return {p.module, std::move(map)};
}

ModulePtr regular_module(const RingPtr& ring) { return regular_presented(ring).module; }

ModulePtr cyclic_module(const RingPtr& ring, std::span<const Elem> gens) {
  auto reg = regular_presented(ring);
  std::vector<Elem> images;
  for (Elem g : gens) {
    if (g >= ring->size()) throw SpecError("ring element out of range");
    images.push_back(reg.map[g]);
  }
  return quotient(Submodule::generated_by(reg.module, images)).module;
}

std::vector<ModulePtr> simple_modules(const RingPtr& ring) {
  auto reg = regular_module(ring);
  std::vector<ModulePtr> out;
  for (const auto& max : maximal_submodules(reg)) {
    auto s = quotient(max).module;
    bool fresh = true;
    for (const auto& t : out)
      if (are_isomorphic(s, t)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const ModulePtr& a, const ModulePtr& b) { return a->size() < b->size(); });
  return out;
}

DynBitset jacobson_radical(const RingPtr& ring) {
  auto reg = regular_presented(ring);
  auto rad = radical_of(reg.module);
  DynBitset out(ring->size());
  for (Elem r = 0; r < ring->size(); ++r)
    if (rad.contains(reg.map[r])) out.set(r);
  return out;
}

ModulePtr parse_module(const RingPtr& ring, std::string_view spec_view) {
  const std::string spec = strip(spec_view);
  if (spec.empty()) throw SpecError("empty module specification");
  std::vector<ModulePtr> parts;
  for (const auto& term : split_top(spec, '+')) {
    if (term.empty()) throw SpecError("empty summand in module specification '" + spec + "'");
    std::string base = term;
    long long power = 1;
    if (auto caret = term.rfind('^'); caret != std::string::npos) {
      auto p = parse_int(term.substr(caret + 1));
      if (!p || *p > 16) throw SpecError("bad exponent in '" + term + "'");
      power = *p;
      base = term.substr(0, caret);
    }
    ModulePtr m;
    if (base == "0") {
      m = FiniteModule::zero(ring);
    } else if (base == "R") {
      m = regular_module(ring);
    } else if (base.size() > 2 && base.rfind("R/", 0) == 0) {
      std::string inner = base.substr(2);
      if (inner.size() < 2 || inner.front() != '<' || inner.back() != '>')
        throw SpecError("expected R/<a,b,...> in '" + base + "'");
      inner = inner.substr(1, inner.size() - 2);
      std::vector<Elem> gens;
      if (!inner.empty())
        for (const auto& g : split_top(inner, ',')) {
          auto e = ring->parse_element(g);
          if (!e) throw SpecError("unknown ring element '" + g + "'");
          gens.push_back(*e);
        }
      m = cyclic_module(ring, gens);
    } else if (base.size() > 1 && base[0] == 'Z') {
      auto d = parse_int(base.substr(1));
      if (!d || *d < 1) throw SpecError("bad cyclic order in '" + base + "'");
      const Elem g = ring->from_integer(*d);
      m = cyclic_module(ring, std::span<const Elem>(&g, 1));
      if (static_cast<long long>(m->size()) != *d)
        throw SpecError("Z" + std::to_string(*d) + " is not a module of order " + std::to_string(*d) + " over " +
                        ring->tag());
    } else if (base.size() > 1 && (base[0] == 'S' || base[0] == 'P')) {
      auto i = parse_int(base.substr(1));
      auto list = base[0] == 'S' ? simple_modules(ring) : indecomposable_projectives(ring);
      if (!i || *i < 1 || static_cast<std::size_t>(*i) > list.size())
        throw SpecError("'" + base + "' does not name one of the " + std::to_string(list.size()) +
                        " simple modules (numbered from 1)");
      m = list[static_cast<std::size_t>(*i - 1)];
    } else {
      throw SpecError("unknown module summand '" + base + "'");
    }
    for (long long k = 0; k < power; ++k) parts.push_back(m);
    if (power == 0) parts.push_back(FiniteModule::zero(ring));
  }
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts).module;
}

Submodule parse_submodule(const ModulePtr& m, std::string_view spec_view) {
  std::string spec = strip(spec_view);
  // Accept the "<g1; g2>" form printed by Submodule::label().
  if (spec.size() >= 2 && spec.front() == '<' && spec.back() == '>') spec = strip(std::string_view(spec).substr(1, spec.size() - 2));
  if (spec == "0") return Submodule::zero(m);
  if (spec == "all" || spec == "M") return Submodule::whole(m);
  std::vector<Elem> gens;
  for (const auto& g : split_top(spec, ';')) {
    auto e = m->parse_element(g);
    if (!e) throw SpecError("'" + g + "' is not an element of the module (coordinates: " + std::to_string(m->rank()) + ")");
    gens.push_back(*e);
  }
  return Submodule::generated_by(m, gens);
}

}  // namespace prerad
