#include "prerad/universe_preradical.hpp"

#include <algorithm>

#include "prerad/error.hpp"

namespace prerad {

namespace {

std::size_t index_of(const ModuleUniverse& u, std::size_t i, const DynBitset& set) {
  return u.member(i)->lattice_index(set);
}

std::size_t whole_index(const ModuleUniverse& u, std::size_t i) { return u.member(i)->lattice_sets().size() - 1; }

DynBitset ideal_times(const ModuleUniverse& u, std::size_t i, const DynBitset& ideal) {
  const auto& m = u.member(i);
  std::vector<Elem> gens;
  ideal.for_each([&](std::size_t r) {
    for (Elem x = 0; x < m->size(); ++x) gens.push_back(m->act(static_cast<Elem>(r), x));
  });
  return Submodule::generated_by(m, gens).elements();
}

}  // namespace

const DynBitset& assigned_set(const Assignment& a, const ModuleUniverse& u, std::size_t i) {
  return u.member(i)->lattice_sets()[a[i]];
}

Assignment assignment_of(const Preradical& sigma, const ModuleUniverse& u) {
  Assignment a(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) a[i] = index_of(u, i, eval(sigma, u.member(i)).elements());
  return a;
}

Assignment universe_alpha(const ModuleUniverse& u, std::size_t i, const DynBitset& n) {
  Assignment a(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto& target = *u.member(j);
    DynBitset acc(target.size());
    acc.set(0);
    for (const auto& f : u.homs(i, j)) {
      DynBitset image(target.size());
      n.for_each([&](std::size_t x) { image.set(f[x]); });
      acc = target.sum_sets(acc, image);
    }
    a[j] = index_of(u, j, acc);
  }
  return a;
}

Assignment universe_omega(const ModuleUniverse& u, std::size_t i, const DynBitset& n) {
  Assignment a(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto& source = *u.member(j);
    DynBitset acc(source.size());
    acc.set_all();
    for (const auto& f : u.homs(j, i))
      for (std::size_t x = 0; x < source.size(); ++x)
        if (acc.test(x) && !n.test(f[x])) acc.reset(x);
    a[j] = index_of(u, j, acc);
  }
  return a;
}

nlohmann::json PreradicalFlags::to_json() const {
  return {{"natural", natural},       {"idempotent", idempotent}, {"radical", radical},
          {"t_radical", t_radical},   {"left_exact", left_exact}, {"preserves_epis", preserves_epis}};
}

bool is_natural(const Assignment& a, const ModuleUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const auto& src = assigned_set(a, u, i);
      const auto& dst = assigned_set(a, u, j);
      for (const auto& f : u.homs(i, j)) {
        bool ok = true;
        src.for_each([&](std::size_t x) { ok = ok && dst.test(f[x]); });
        if (!ok) return false;
      }
    }
  return true;
}

Assignment compose(const Assignment& outer, const Assignment& inner, const ModuleUniverse& u) {
  Assignment out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t s = u.sub_class(i, inner[i]);
    out[i] = index_of(u, i, u.sub_embedding(i, inner[i]).image_set(assigned_set(outer, u, s)));
  }
  return out;
}

Assignment colon(const Assignment& outer, const Assignment& inner, const ModuleUniverse& u) {
  Assignment out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t q = u.quotient_class(i, inner[i]);
    out[i] = index_of(u, i, u.quotient_map(i, inner[i]).preimage_set(assigned_set(outer, u, q)));
  }
  return out;
}

Assignment meet(const Assignment& a, const Assignment& b, const ModuleUniverse& u) {
  Assignment out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = index_of(u, i, assigned_set(a, u, i) & assigned_set(b, u, i));
  return out;
}

Assignment join(const Assignment& a, const Assignment& b, const ModuleUniverse& u) {
  Assignment out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = index_of(u, i, u.member(i)->sum_sets(assigned_set(a, u, i), assigned_set(b, u, i)));
  return out;
}

Assignment hat(const Assignment& a, const ModuleUniverse& u) {
  Assignment cur = a;
  while (true) {
    Assignment next = compose(a, cur, u);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Assignment bar(const Assignment& a, const ModuleUniverse& u) {
  Assignment cur(u.size(), 0);
  while (true) {
    Assignment next = colon(a, cur, u);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_idempotent(const Assignment& a, const ModuleUniverse& u) { return compose(a, a, u) == a; }

bool is_radical(const Assignment& a, const ModuleUniverse& u) { return colon(a, a, u) == a; }

DynBitset ideal_at_regular(const Assignment& a, const ModuleUniverse& u) {
  const auto& elems = u.regular_ring_elements();
  DynBitset out(u.ring()->size());
  assigned_set(a, u, u.regular_index()).for_each([&](std::size_t x) { out.set(elems[x]); });
  return out;
}

bool is_t_radical(const Assignment& a, const ModuleUniverse& u) {
  const auto ideal = ideal_at_regular(a, u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (ideal_times(u, i, ideal) != assigned_set(a, u, i)) return false;
  return true;
}

bool is_left_exact(const Assignment& a, const ModuleUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& lat = u.member(i)->lattice_sets();
    for (std::size_t k = 0; k < lat.size(); ++k) {
      const auto image = u.sub_embedding(i, k).image_set(assigned_set(a, u, u.sub_class(i, k)));
      if (image != (assigned_set(a, u, i) & lat[k])) return false;
    }
  }
  return true;
}

bool preserves_epis(const Assignment& a, const ModuleUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& lat = u.member(i)->lattice_sets();
    for (std::size_t k = 0; k < lat.size(); ++k)
      if (u.quotient_map(i, k).image_set(assigned_set(a, u, i)) != assigned_set(a, u, u.quotient_class(i, k)))
        return false;
  }
  return true;
}

PreradicalFlags classify(const Assignment& a, const ModuleUniverse& u) {
  PreradicalFlags f;
  f.natural = is_natural(a, u);
  f.idempotent = is_idempotent(a, u);
  f.radical = is_radical(a, u);
  f.t_radical = is_t_radical(a, u);
  f.left_exact = is_left_exact(a, u);
  f.preserves_epis = preserves_epis(a, u);
  return f;
}

PreradicalFlags classify(const Preradical& sigma, const ModuleUniverse& u) { return classify(assignment_of(sigma, u), u); }

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<=";
    case Comparison::Greater: return ">=";
    case Comparison::Equal: return "=";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

bool leq(const Assignment& a, const Assignment& b, const ModuleUniverse& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!assigned_set(a, u, i).is_subset_of(assigned_set(b, u, i))) return false;
  return true;
}

Comparison compare(const Assignment& a, const Assignment& b, const ModuleUniverse& u) {
  const bool le = leq(a, b, u), ge = leq(b, a, u);
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  return Comparison::Incomparable;
}

DynBitset torsion_class(const Assignment& a, const ModuleUniverse& u) {
  DynBitset out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (a[i] == whole_index(u, i)) out.set(i);
  return out;
}

DynBitset torsion_free_class(const Assignment& a, const ModuleUniverse& u) {
  DynBitset out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (a[i] == 0) out.set(i);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class AssignmentSearch {
 public:
  AssignmentSearch(const ModuleUniverse& u, const EnumerationOptions& opt) : u_(u), opt_(opt), n_(u.size()) {
    domains_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& flags = u.member(i)->fully_invariant_flags();
      for (std::size_t k = 0; k < flags.size(); ++k)
        if (flags[k]) domains_[i].push_back(k);
    }
    for (auto [i, k] : opt.fixed) {
      if (i >= n_) throw Error("fixed member out of range");
      auto& d = domains_[i];
      d = std::find(d.begin(), d.end(), k) != d.end() ? std::vector<std::size_t>{k} : std::vector<std::size_t>{};
    }
    // reach_[i][j][k]: union of f(set_k) over f in Hom(member i, member j).
    reach_.assign(n_, std::vector<std::vector<DynBitset>>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& lat = u.member(i)->lattice_sets();
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        auto& r = reach_[i][j];
        r.assign(lat.size(), DynBitset());
        const auto& maps = u.homs(i, j);
        for (std::size_t k : domains_[i]) {
          DynBitset img(u.member(j)->size());
          for (const auto& f : maps) lat[k].for_each([&](std::size_t x) { img.set(f[x]); });
          r[k] = std::move(img);
        }
      }
    }
  }

  std::vector<Assignment> run() {
    std::vector<std::vector<std::size_t>> doms = domains_;
    Assignment cur(n_, 0);
    search(0, doms, cur);
    return std::move(found_);
  }

 private:
  bool compatible(std::size_t i, std::size_t ki, std::size_t j, std::size_t kj) const {
    const auto& li = u_.member(i)->lattice_sets();
    const auto& lj = u_.member(j)->lattice_sets();
    return reach_[i][j][ki].is_subset_of(lj[kj]) && reach_[j][i][kj].is_subset_of(li[ki]);
  }

  void search(std::size_t i, const std::vector<std::vector<std::size_t>>& doms, Assignment& cur) {
    if (i == n_) {
      if (++visited_ > opt_.cap)
        throw BoundExceeded("more than " + std::to_string(opt_.cap) + " universe preradicals");
      if (accept(cur)) found_.push_back(cur);
      return;
    }
    for (std::size_t k : doms[i]) {
      cur[i] = k;
      std::vector<std::vector<std::size_t>> next = doms;
      bool dead = false;
      for (std::size_t j = i + 1; j < n_ && !dead; ++j) {
        auto& d = next[j];
        d.erase(std::remove_if(d.begin(), d.end(), [&](std::size_t kj) { return !compatible(i, k, j, kj); }),
                d.end());
        dead = d.empty();
      }
      if (!dead) search(i + 1, next, cur);
    }
  }

  bool accept(const Assignment& a) const {
    const auto& f = opt_.filter;
    if (f.idempotent && !is_idempotent(a, u_)) return false;
    if (f.radical && !is_radical(a, u_)) return false;
    if (f.t_radical && !is_t_radical(a, u_)) return false;
    if (f.left_exact && !is_left_exact(a, u_)) return false;
    return true;
  }

  const ModuleUniverse& u_;
  const EnumerationOptions& opt_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> domains_;
  std::vector<std::vector<std::vector<DynBitset>>> reach_;
  std::vector<Assignment> found_;
  std::size_t visited_ = 0;
};

}  // namespace

std::vector<Assignment> enumerate_universe_preradicals(const ModuleUniverse& u, const EnumerationOptions& options) {
  return AssignmentSearch(u, options).run();
}

std::string assignment_label(const Assignment& a, const ModuleUniverse& u) {
  std::string s = "{";
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (i > 1) s += ", ";
    s += u.name(i) + ": " + Submodule(u.member(i), assigned_set(a, u, i)).label();
  }
  return s + "}";
}

nlohmann::json assignment_json(const Assignment& a, const ModuleUniverse& u) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < u.size(); ++i) j[u.name(i)] = Submodule(u.member(i), assigned_set(a, u, i)).label();
  return j;
}

}  // namespace prerad
