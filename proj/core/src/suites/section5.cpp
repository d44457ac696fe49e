#include "common.hpp"

namespace prerad::suites {

namespace {

const RegistryEntry& entry(const char* id);

PropositionResult remark_8s(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& prs = ctx.preradicals();
  for (std::size_t x = 0; x < prs.size(); ++x) {
    const auto& tx = ctx.triple(prs[x]);
    out.check(tx.S == (tx.T | tx.F), {{"claim", "(2) S = T u F"}, {"sigma", sigma_json(ctx, prs[x])}});
    for (std::size_t y = x; y < prs.size(); ++y) {
      const auto& ty = ctx.triple(prs[y]);
      const std::vector<Assignment> fam{prs[x], prs[y]};
      DynBitset s(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        if (family_second(u, i, fam) != Verdict::False) s.set(i);
      nlohmann::json w{{"claim", "(1),(3),(4)"}, {"sigma", sigma_json(ctx, prs[x])}, {"other", sigma_json(ctx, prs[y])}};
      out.check(s == (tx.S & ty.S), w);
      out.check((tx.T & ty.T).is_subset_of(s) && (tx.F & ty.F).is_subset_of(s), w);
    }
  }
  return finish(entry("S5.remark-8s"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult tsvc1(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> fam;
  nlohmann::json strict = nlohmann::json::array();
  for (const auto& r : ctx.ideal_family()) {
    fam.push_back(r.a);
    const auto& t = ctx.triple(r.a);
    out.check(t.S.is_subset_of(t.P_bar), {{"claim", "S subset of P_bar"}, {"sigma", r.expr->to_string()}});
    for (std::size_t i = 1; i < u.size(); ++i)
      if (t.P_bar.test(i) && !t.S.test(i) && strict.size() < 8) {
        strict.push_back(predicate_witness(ctx, i, r.expr, "co_first", true));
        strict.push_back(predicate_witness(ctx, i, r.expr, "second", false));
      }
  }
  for (std::size_t i = 1; i < u.size(); ++i)
    if (family_second(u, i, fam) == Verdict::True)
      out.check(family_co_first(u, i, fam) == Verdict::True, {{"module", u.name(i)}, {"claim", "A-second => A-co-first"}});
  out.details["strict_instances"] = strict;
  out.details["ideals"] = fam.size();
  return finish(entry("S5.tsvc1"), Regime::IdealFamily, out);
}

// Z_{p^2} over Z_{p^2}: t-radical co-first, not t-radical second.
PropositionResult ejemsvc(SuiteContext&) {
  Outcome out;
  for (const std::string ring : {"zn:4", "zn:9"}) {
    auto& ex = example_context(ring);
    const auto& u = ex.universe();
    const auto i = *u.find_by_name(ring == "zn:4" ? "Z4" : "Z9");
    const auto p = Preradical::ideal(ex.ring(), ex.ring()->ideal_generated_by(std::vector<Elem>{
                                                    static_cast<Elem>(ring == "zn:4" ? 2 : 3)}));
    std::vector<Assignment> fam;
    for (const auto& r : ex.ideal_family()) fam.push_back(r.a);
    const bool cf = family_co_first(u, i, fam) == Verdict::True;
    const bool sec = family_second(u, i, fam) == Verdict::True;
    out.check(cf, {{"ring", ring}, {"trad_co_first", cf}});
    out.check(!sec && is_second(u.member(i), *p) == Verdict::False, predicate_witness(ex, i, p, "second", false));
    out.witnesses.push_back(predicate_witness(ex, i, p, "second", false));
    out.witnesses.push_back(predicate_witness(ex, i, p, "co_first", true));
  }
  return finish(entry("S5.example-ejemsvc"), Regime::Example, out);
}

// The strictness example for F_sigma inside P_sigma. Its class letter is
// undefined where it appears; it is read as the torsion-free class.
PropositionResult ejem417(SuiteContext&) {
  Outcome out;
  auto& ex = example_context("zn:4");
  const auto& u = ex.universe();
  const auto i = *u.find_by_name("Z4");
  const auto sigma = Preradical::ideal(ex.ring(), ex.ring()->ideal_generated_by(std::vector<Elem>{2}));
  const auto a = assignment_of(*sigma, u);
  const auto& t = ex.triple(a);
  out.check(t.P_bar.test(i) && t.P.test(i), predicate_witness(ex, i, sigma, "fully_co_first", true));
  out.check(!t.F.test(i), predicate_witness(ex, i, sigma, "torsion_free", false));
  out.witnesses = {predicate_witness(ex, i, sigma, "fully_co_first", true),
                   predicate_witness(ex, i, sigma, "torsion_free", false)};
  out.details["substitution"] = "undefined class L_sigma read as F_sigma";
  out.details["ring"] = "zn:4";
  return finish(entry("S5.example-ejem4.17"), Regime::Example, out);
}

PropositionResult psvc1(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::size_t antecedent = 0;
  for (const auto& a : ctx.radicals()) {
    const auto& t = ctx.triple(a);
    if (t.P_bar != t.S) continue;
    ++antecedent;
    out.check(is_t_radical(a, u), {{"claim", "P_bar = S implies t-radical"}, {"sigma", sigma_json(ctx, a)}});
  }
  out.details["radicals"] = ctx.radicals().size();
  out.details["antecedent_true"] = antecedent;
  return finish(entry("S5.prop-psvc1"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult radsec(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& t = ctx.triple(assignment_of(*Preradical::rad(), u));
  const bool eq = t.P_bar == t.S;
  const bool v = ctx.v_ring();
  out.check(eq == v, {{"P_bar_equals_S", eq}, {"v_ring", v}});
  out.details["P_bar_equals_S"] = eq;
  out.details["v_ring"] = v;
  return finish(entry("S5.prop-radsec"), Regime::ExhaustiveUniverse, out);
}

PropositionResult final_prop(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  bool all_equal = true;
  nlohmann::json violating;
  for (const auto& a : ctx.preradicals()) {
    const auto& t = ctx.triple(a);
    if (t.P_bar == t.S) continue;
    all_equal = false;
    if (!violating.is_null()) continue;
    // Prefer a violation carried by a real expression.
    if (auto e = ctx.realize(a)) {
      for (std::size_t i = 1; i < u.size(); ++i)
        if (t.P_bar.test(i) != t.S.test(i)) {
          violating = {predicate_witness(ctx, i, e, "co_first", t.P_bar.test(i)),
                       predicate_witness(ctx, i, e, "second", t.S.test(i))};
          break;
        }
    }
  }
  const bool ss = ctx.semisimple_ring();
  out.check(all_equal == ss, {{"all_P_bar_equal_S", all_equal}, {"semisimple", ss}});
  // The non-semisimple direction needs an expression realizing a violation.
  if (!ss) out.check(!violating.is_null(), {{"claim", "violation realized by an expression"}});
  out.details["semisimple"] = ss;
  out.details["all_P_bar_equal_S"] = all_equal;
  if (!violating.is_null()) out.details["violation"] = violating;
  return finish(entry("S5.final-prop"), ctx.quantifier(), out, ctx.degraded());
}

const std::vector<RegistryEntry>& entries() {
  static const std::vector<RegistryEntry> list{
      {"S5.remark-8s", "Remark 8s (1)-(4)", 5, EntryKind::Assert, remark_8s},
      {"S5.tsvc1", "Theorem tsvc1: every A-second module is A-co-first (A of t-radicals)", 5, EntryKind::Assert,
       tsvc1},
      {"S5.example-ejemsvc", "Example ejemsvc: Z_{p^2} is R-trad-co-first, not R-trad-second", 5, EntryKind::Assert,
       ejemsvc},
      {"S5.example-ejem4.17", "Example ejem4.17: F_sigma strictly inside P_sigma", 5, EntryKind::Assert, ejem417},
      {"S5.prop-psvc1", "Proposition psvc1: a radical with P_bar = S is a t-radical", 5, EntryKind::Assert, psvc1},
      {"S5.prop-radsec", "Proposition radsec=radcop: P_bar_rad = S_rad iff R is a V-ring", 5, EntryKind::Assert,
       radsec},
      {"S5.final-prop", "Proposition: P_bar_sigma = S_sigma for all sigma iff R is semisimple", 5, EntryKind::Assert,
       final_prop},
  };
  return list;
}

const RegistryEntry& entry(const char* id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(std::string("no registry entry ") + id);
}

}  // namespace

std::vector<RegistryEntry> section5_entries() { return entries(); }

}  // namespace prerad::suites
