#include "common.hpp"
#include "prerad/construct.hpp"

namespace prerad::suites {

namespace {

const RegistryEntry& entry(const char* id);

PropositionResult remark_interval(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::size_t pairs = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& m = u.member(i);
    const auto& lat = m->lattice_sets();
    const auto& fi = m->fully_invariant_flags();
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (!fi[k]) continue;
      ++pairs;
      const auto lo = universe_alpha(u, i, lat[k]);
      const auto hi = universe_omega(u, i, lat[k]);
      auto w = ctx.witness_base();
      w["kind"] = "interval";
      w["module"] = u.name(i);
      w["N"] = sub_label(m, lat[k]);
      out.check(lo[i] == k && hi[i] == k && is_natural(lo, u) && is_natural(hi, u), w);
      for (const auto& rho : ctx.preradicals()) {
        if (rho[i] != k) continue;
        auto wr = w;
        wr["sigma"] = sigma_json(ctx, rho);
        out.check(leq(lo, rho, u) && leq(rho, hi, u), wr);
      }
    }
  }
  out.details["fully_invariant_pairs"] = pairs;
  out.details["preradicals"] = ctx.preradicals().size();
  return finish(entry("S1.remark-interval"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult remark_tryrej(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& lat = u.member(i)->lattice_sets();
    const auto rej = universe_omega(u, i, lat.front());
    const auto tr = universe_alpha(u, i, lat.back());
    auto w = ctx.witness_base();
    w["kind"] = "trace-reject";
    w["module"] = u.name(i);
    out.check(is_radical(rej, u) && colon(rej, rej, u) == rej, w);
    out.check(is_idempotent(tr, u) && compose(tr, tr, u) == tr, w);
  }
  return finish(entry("S1.remark-tryrej"), Regime::ExhaustiveUniverse, out);
}

// eval(s, A+B) = s(A) + s(B) for the generated expressions and a few
// combinators, over every pair of members whose sum fits the order bound.
PropositionResult additivity(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<PreradicalPtr> exprs;
  for (const auto& r : ctx.generated()) exprs.push_back(r.expr);
  const std::size_t base = std::min<std::size_t>(exprs.size(), 4);
  for (std::size_t a = 0; a < base; ++a)
    for (std::size_t b = 0; b < base; ++b) {
      if (a == b) continue;
      exprs.push_back(Preradical::compose(exprs[a], exprs[b]));
      exprs.push_back(Preradical::colon(exprs[a], exprs[b]));
      exprs.push_back(Preradical::meet({exprs[a], exprs[b]}));
      exprs.push_back(Preradical::join({exprs[a], exprs[b]}));
    }
  for (std::size_t a = 0; a < base; ++a) {
    exprs.push_back(Preradical::hat(exprs[a]));
    exprs.push_back(Preradical::bar(exprs[a]));
  }
  const std::size_t bound = std::min<std::size_t>(u.options().max_order, 16);
  std::size_t sums = 0;
  for (std::size_t i = 1; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) {
      if (u.member(i)->size() * u.member(j)->size() > bound) continue;
      ++sums;
      auto ds = direct_sum({u.member(i), u.member(j)});
      for (const auto& e : exprs) {
        const auto whole = eval(*e, ds.module);
        const auto left = ds.injections[0].image(eval(*e, u.member(i)));
        const auto right = ds.injections[1].image(eval(*e, u.member(j)));
        auto w = ctx.witness_base();
        w["kind"] = "additivity";
        w["modules"] = {u.name(i), u.name(j)};
        w["sigma"] = e->to_string();
        out.check(whole == left + right, w);
      }
    }
  out.details["expressions"] = exprs.size();
  out.details["sums"] = sums;
  return finish(entry("S1.additivity"), Regime::GeneratedFamily, out);
}

PropositionResult trad_epi(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::size_t trads = 0;
  for (const auto& a : ctx.preradicals()) {
    const bool t = is_t_radical(a, u);
    trads += t;
    auto w = ctx.witness_base();
    w["kind"] = "trad-epi";
    w["sigma"] = sigma_json(ctx, a);
    out.check(t == preserves_epis(a, u), w);
  }
  // Every ideal-induced preradical is a t-radical.
  for (const auto& r : ctx.ideal_family()) out.check(is_t_radical(r.a, u), sigma_json(ctx, r.a));
  out.details["t_radicals"] = trads;
  return finish(entry("S1.trad-epi"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult closures(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto idem = ctx.idempotents();
  const auto rads = ctx.radicals();
  for (const auto& a : ctx.preradicals()) {
    const auto h = hat(a, u);
    const auto b = bar(a, u);
    auto w = ctx.witness_base();
    w["kind"] = "closure";
    w["sigma"] = sigma_json(ctx, a);
    out.check(is_idempotent(h, u) && leq(h, a, u) && torsion_class(h, u) == torsion_class(a, u), w);
    out.check(is_radical(b, u) && leq(a, b, u), w);
    for (const auto& t : idem)
      if (leq(t, a, u)) out.check(leq(t, h, u), w);
    for (const auto& t : rads)
      if (leq(a, t, u)) out.check(leq(b, t, u), w);
  }
  return finish(entry("S1.closures"), ctx.quantifier(), out, ctx.degraded());
}

const std::vector<RegistryEntry>& entries() {
  static const std::vector<RegistryEntry> list{
      {"S1.remark-interval", "Remark: alpha_N^M and omega_N^M bound the interval of preradicals with sigma(M)=N", 1,
       EntryKind::Assert, remark_interval},
      {"S1.remark-tryrej", "Remark tryrej: trace is idempotent, reject is a radical", 1, EntryKind::Assert,
       remark_tryrej},
      {"S1.additivity", "Preradicals commute with finite direct sums", 1, EntryKind::Assert, additivity},
      {"S1.trad-epi", "t-radicals are the preradicals preserving epimorphisms", 1, EntryKind::Assert, trad_epi},
      {"S1.closures", "Idempotent core and radical closure", 1, EntryKind::Assert, closures},
  };
  return list;
}

const RegistryEntry& entry(const char* id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(std::string("no registry entry ") + id);
}

}  // namespace

std::vector<RegistryEntry> section1_entries() { return entries(); }

}  // namespace prerad::suites
