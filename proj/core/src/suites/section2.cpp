#include "common.hpp"
#include "prerad/construct.hpp"

namespace prerad::suites {

namespace {

const RegistryEntry& entry(const char* id);

constexpr std::size_t kTripleBound = 16;

// table[a][b] = lattice index of (A:B) in member i, from the universe's
// rejects: (A:B) is the preimage of Reject(M/A) evaluated on M/B.
std::vector<std::vector<std::size_t>> comult_table(SuiteContext& ctx, std::size_t i,
                                                   std::vector<Assignment>& rejects) {
  const auto& u = ctx.universe();
  if (rejects.empty())
    for (std::size_t q = 0; q < u.size(); ++q) rejects.push_back(universe_omega(u, q, u.member(q)->lattice_sets().front()));
  const auto& m = u.member(i);
  const auto& lat = m->lattice_sets();
  std::vector<std::vector<std::size_t>> t(lat.size(), std::vector<std::size_t>(lat.size()));
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b) {
      const auto qa = u.quotient_class(i, a);
      const auto qb = u.quotient_class(i, b);
      t[a][b] = m->lattice_index(u.quotient_map(i, b).preimage_set(assigned_set(rejects[qa], u, qb)));
    }
  return t;
}

std::vector<std::size_t> small_members(const ModuleUniverse& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u.member(i)->size() <= kTripleBound) out.push_back(i);
  return out;
}

PropositionResult example_z6(SuiteContext&) {
  auto& ex = example_context("zn:6");
  const auto& u = ex.universe();
  Outcome out;
  const auto z6 = *u.find_by_name("Z6");
  const auto z2 = *u.find_by_name("Z2");
  const auto rej = Preradical::reject(u.member(z6), "Z6");
  const auto value = eval(*rej, u.member(z2));
  auto w = ex.witness_base();
  w["kind"] = "eval";
  w["module"] = "Z2";
  w["sigma"] = rej->to_string();
  w["expected"] = "0";
  out.check(value.is_zero(), w);
  out.details["value"] = value.label();
  out.details["ring"] = "zn:6";
  return finish(entry("S2.example-z6"), Regime::Example, out);
}

PropositionResult note_mn(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> rejects;
  for (auto i : small_members(u)) {
    const auto t = comult_table(ctx, i, rejects);
    const auto whole = t.size() - 1;
    for (std::size_t n = 0; n < t.size(); ++n) {
      auto w = ctx.witness_base();
      w["kind"] = "comult";
      w["module"] = u.name(i);
      w["N"] = sub_label(u.member(i), u.member(i)->lattice_sets()[n]);
      out.check(t[whole][n] == whole, w);
    }
  }
  return finish(entry("S2.note-MN"), Regime::ExhaustiveUniverse, out);
}

PropositionResult prop_monotone(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> rejects;
  std::size_t cross = 0;
  for (auto i : small_members(u)) {
    const auto& m = u.member(i);
    const auto& lat = m->lattice_sets();
    const auto t = comult_table(ctx, i, rejects);
    // The table agrees with the direct construction on small members.
    if (m->size() <= 8)
      for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
          ++cross;
          out.check(comultiplication(Submodule(m, lat[a]), Submodule(m, lat[b])).elements() == lat[t[a][b]],
                    {{"kind", "comult-table"}, {"module", u.name(i)}});
        }
    for (std::size_t a = 0; a < lat.size(); ++a)
      for (std::size_t b = 0; b < lat.size(); ++b)
        for (std::size_t c = 0; c < lat.size(); ++c) {
          if (!lat[b].is_subset_of(lat[c])) continue;
          auto w = ctx.witness_base();
          w["kind"] = "monotone";
          w["module"] = u.name(i);
          w["A"] = sub_label(m, lat[a]);
          w["B"] = sub_label(m, lat[b]);
          w["C"] = sub_label(m, lat[c]);
          out.check(lat[t[a][b]].is_subset_of(lat[t[a][c]]), w);
        }
  }
  out.details["direct_cross_checks"] = cross;
  return finish(entry("S2.prop-monotone"), Regime::ExhaustiveUniverse, out);
}

PropositionResult cor_intersection(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> rejects;
  for (auto i : small_members(u)) {
    const auto& m = u.member(i);
    const auto& lat = m->lattice_sets();
    const auto t = comult_table(ctx, i, rejects);
    const std::size_t n = lat.size();
    // Meets and inclusions as index tables, so the triple loop stays cheap.
    std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
    std::vector<std::vector<char>> below(n, std::vector<char>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        meet[x][y] = m->lattice_index(lat[x] & lat[y]);
        below[x][y] = lat[x].is_subset_of(lat[y]);
      }
    auto witness = [&](std::size_t a, std::vector<std::size_t> ns) {
      nlohmann::json names = nlohmann::json::array();
      for (auto k : ns) names.push_back(sub_label(m, lat[k]));
      auto w = ctx.witness_base();
      w["kind"] = "intersection";
      w["module"] = u.name(i);
      w["A"] = sub_label(m, lat[a]);
      w["N"] = names;
      return w;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          const auto m2 = meet[x][y];
          const auto r2 = meet[t[a][x]][t[a][y]];
          if (!below[t[a][m2]][r2]) out.check(false, witness(a, {x, y}));
          for (std::size_t z = y + 1; z < n; ++z)
            if (!below[t[a][meet[m2][z]]][meet[r2][t[a][z]]]) out.check(false, witness(a, {x, y, z}));
          out.checked += n - y;
        }
  }
  return finish(entry("S2.cor-intersection"), Regime::ExhaustiveUniverse, out);
}

PropositionResult lemma_tot(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> rejects;
  for (auto i : small_members(u)) {
    const auto& m = u.member(i);
    const auto& lat = m->lattice_sets();
    const auto t = comult_table(ctx, i, rejects);
    const auto whole = lat.size() - 1;
    for (std::size_t n = 0; n < lat.size(); ++n) {
      const auto tot = totalizer(Submodule(m, lat[n]));
      const auto k = m->lattice_index(tot.elements());
      auto w = ctx.witness_base();
      w["kind"] = "totalizer";
      w["module"] = u.name(i);
      w["N"] = sub_label(m, lat[n]);
      w["Tot"] = tot.label();
      out.check(t[k][n] == whole, w);
      for (std::size_t b = 0; b < lat.size(); ++b)
        if (t[b][n] == whole) out.check(lat[k].is_subset_of(lat[b]), w);
    }
  }
  return finish(entry("S2.lemma-tot"), Regime::ExhaustiveUniverse, out);
}

nlohmann::json coprime_witness(SuiteContext& ctx, std::size_t i, const char* criterion, const SubmodulePair& p) {
  auto w = ctx.witness_base();
  w["kind"] = "coprime";
  w["module"] = ctx.universe().name(i);
  w["criterion"] = criterion;
  w["L"] = p.first.label();
  w["N"] = p.second.label();
  return w;
}

PropositionResult lemma_1v3(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& v = ctx.coprime(i);
    nlohmann::json w = {{"module", u.name(i)}, {"verdict", v.to_json()}};
    out.check(v.by_comult == v.by_hom, w);
  }
  return finish(entry("S2.lemma-BJKNco.1v3"), Regime::ExhaustiveUniverse, out);
}

PropositionResult box_xi(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& v = ctx.coprime(i);
    out.check(v.by_xi == v.by_box, {{"module", u.name(i)}, {"verdict", v.to_json()}});
  }
  return finish(entry("S2.box-xi"), Regime::ExhaustiveUniverse, out);
}

PropositionResult lemma_2v3(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::map<std::string, nlohmann::json> matrix;
  for (const char* h : {"true", "false"})
    for (const char* x : {"true", "false"}) matrix[std::string("by_hom=") + h + ",by_xi=" + x] = nlohmann::json::array();
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& v = ctx.coprime(i);
    matrix[std::string("by_hom=") + (v.by_hom ? "true" : "false") + ",by_xi=" + (v.by_xi ? "true" : "false")].push_back(
        u.name(i));
    if (v.by_hom == v.by_xi) {
      out.check(true);
      continue;
    }
    // The failing side carries the witness pair.
    if (!v.by_xi)
      out.check(false, coprime_witness(ctx, i, "xi", *v.xi_witness));
    else
      out.check(false, coprime_witness(ctx, i, "hom", *v.hom_witness));
  }
  out.details["matrix"] = matrix;
  return finish(entry("S2.lemma-BJKNco.2v3"), Regime::ExhaustiveUniverse, out);
}

const std::vector<RegistryEntry>& entries() {
  static const std::vector<RegistryEntry> list{
      {"S2.example-z6", "Example: the reject of Z6 in Z2 is 0 (finite half)", 2, EntryKind::Assert, example_z6},
      {"S2.note-MN", "(M:N) = M for every N", 2, EntryKind::Assert, note_mn},
      {"S2.prop-monotone", "Proposition: if B <= C then (A:B) <= (A:C)", 2, EntryKind::Assert, prop_monotone},
      {"S2.cor-intersection", "Corollary: (A: meet N_i) <= meet (A:N_i)", 2, EntryKind::Assert, cor_intersection},
      {"S2.lemma-tot", "Lemma: the totalizer is the smallest U with (U:N) = M", 2, EntryKind::Assert, lemma_tot},
      {"S2.lemma-BJKNco.1v3", "Lemma BJKNco (1)<=>(3)", 2, EntryKind::Assert, lemma_1v3},
      {"S2.lemma-BJKNco.2v3", "Lemma BJKNco (2)<=>(3)", 2, EntryKind::Report, lemma_2v3},
      {"S2.box-xi", "Coprime via xi agrees with coprime via the box product", 2, EntryKind::Assert, box_xi},
  };
  return list;
}

const RegistryEntry& entry(const char* id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(std::string("no registry entry ") + id);
}

}  // namespace

std::vector<RegistryEntry> section2_entries() { return entries(); }

}  // namespace prerad::suites
