#include "common.hpp"

namespace prerad::suites {

namespace {

const RegistryEntry& entry(const char* id);

nlohmann::json failing_sigma(SuiteContext& ctx, std::size_t i, const Assignment& a) {
  if (auto e = ctx.realize(a)) return predicate_witness(ctx, i, e, "co_first", false);
  auto w = assignment_witness(ctx, a);
  w["module"] = ctx.universe().name(i);
  return w;
}

// True when some generated expression already makes member i fail to be co-first.
bool realized_failure(SuiteContext& ctx, std::size_t i, PreradicalPtr* expr = nullptr) {
  for (const auto& r : ctx.generated())
    if (co_first(ctx.universe(), i, r.a) == Verdict::False) {
      if (expr) *expr = r.expr;
      return true;
    }
  return false;
}

PropositionResult fully_implies(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : ctx.preradicals())
    for (std::size_t i = 1; i < u.size(); ++i)
      if (fully_co_first(u, i, a) == Verdict::True)
        out.check(co_first(u, i, a) == Verdict::True, {{"module", u.name(i)}, {"sigma", sigma_json(ctx, a)}});
  return finish(entry("S3.note-fully-implies-cofirst"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult rad_cofirst(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto rads = ctx.radicals();
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t failing = 0;
    const bool rc = family_co_first(u, i, rads, &failing) == Verdict::True;
    const auto& v = ctx.coprime(i);
    table.push_back({{"module", u.name(i)}, {"rad_co_first", rc}, {"by_xi", v.by_xi}, {"by_hom", v.by_hom}});
    if (rc == v.by_xi) {
      out.check(true);
      continue;
    }
    nlohmann::json w;
    if (!v.by_xi) {
      // co-first for every radical, yet not coprime: the xi pair shows the
      // latter, the radicals with expressions the former.
      w = ctx.witness_base();
      w["kind"] = "coprime";
      w["module"] = u.name(i);
      w["criterion"] = "xi";
      w["L"] = v.xi_witness->first.label();
      w["N"] = v.xi_witness->second.label();
      nlohmann::json radicals = nlohmann::json::array();
      for (const auto& a : rads)
        if (auto e = ctx.realize(a)) radicals.push_back(predicate_witness(ctx, i, e, "co_first", true));
      w["radicals"] = radicals;
    } else {
      w = failing_sigma(ctx, i, rads[failing]);
    }
    out.check(false, w);
  }
  out.details["table"] = table;
  out.details["radicals"] = rads.size();
  return finish(entry("S3.P-rad-cofirst"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult lemma_simple(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (auto s : u.simple_indices())
    for (const auto& a : ctx.preradicals())
      out.check(co_first(u, s, a) == Verdict::True && second(u, s, a) == Verdict::True,
                {{"module", u.name(s)}, {"sigma", sigma_json(ctx, a)}});
  return finish(entry("S3.lemma-simple"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult prop_pf(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::size_t unrealized = 0;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t failing = 0;
    const bool pc = family_co_first(u, i, ctx.preradicals(), &failing) == Verdict::True;
    const auto& v = ctx.coprime(i);
    table.push_back({{"module", u.name(i)}, {"pr_co_first", pc}, {"by_xi", v.by_xi}});
    out.check(pc == v.by_xi, pc ? nlohmann::json{{"module", u.name(i)}, {"pr_co_first", true}, {"by_xi", false}}
                                : failing_sigma(ctx, i, ctx.preradicals()[failing]));
    if (!pc && !realized_failure(ctx, i)) ++unrealized;
  }
  // Every failure must be exhibited by an actual preradical expression.
  out.check(unrealized == 0, {{"unrealized_failures", unrealized}});
  out.details["table"] = table;
  return finish(entry("S3.prop-pf"), ctx.quantifier(), out, ctx.degraded());
}

bool isotypic(const ModuleUniverse& u, std::size_t i) {
  std::size_t kinds = 0;
  for (auto s : u.simple_indices()) kinds += u.nonzero_hom(s, i);
  return kinds == 1;
}

PropositionResult lemma5(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  nlohmann::json examples = nlohmann::json::array();
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (!is_semisimple(u.member(i))) continue;
    std::size_t failing = 0;
    const bool pc = family_co_first(u, i, ctx.preradicals(), &failing) == Verdict::True;
    const bool iso = isotypic(u, i);
    nlohmann::json row{{"module", u.name(i)}, {"isotypic", iso}, {"pr_co_first", pc}};
    PreradicalPtr expr;
    if (!pc && realized_failure(ctx, i, &expr)) row["sigma"] = expr->to_string();
    examples.push_back(row);
    out.check(pc == iso, row);
  }
  out.details["semisimple_members"] = examples;
  return finish(entry("S3.lemma5"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult prop6(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  nlohmann::json converse = nlohmann::json::array();
  for (std::size_t i = 1; i < u.size(); ++i) {
    const bool pc = family_co_first(u, i, ctx.preradicals()) == Verdict::True;
    const bool dh = is_dihollow(u.member(i));
    if (pc) out.check(dh, {{"module", u.name(i)}, {"pr_co_first", true}, {"dihollow", false}});
    if (dh && !pc) {
      PreradicalPtr expr;
      nlohmann::json row{{"module", u.name(i)}};
      if (realized_failure(ctx, i, &expr)) row["sigma"] = expr->to_string();
      converse.push_back(row);
    }
  }
  out.details["dihollow_not_pr_co_first"] = converse;
  return finish(entry("S3.prop6"), ctx.quantifier(), out, ctx.degraded());
}

// Finite analogue of the integer example: Z4 is dihollow, but trace(Z2) picks
// 2Z4 in Z4 while its quotient Z2 is torsion, so Z4 is not R-pr-co-first.
PropositionResult example_z(SuiteContext&) {
  auto& ex = example_context("zn:4");
  const auto& u = ex.universe();
  Outcome out;
  const auto z4 = *u.find_by_name("Z4");
  const auto z2 = *u.find_by_name("Z2");
  const auto sigma = Preradical::trace(u.member(z2), "Z2");
  auto dh = ex.witness_base();
  dh["kind"] = "dihollow";
  dh["module"] = "Z4";
  dh["expected"] = true;
  out.check(is_dihollow(u.member(z4)), dh);
  out.check(is_co_first(u.member(z4), *sigma) == Verdict::False, predicate_witness(ex, z4, sigma, "co_first", false));
  out.check(eval(*sigma, u.member(z2)).is_whole(), predicate_witness(ex, z2, sigma, "torsion", true));
  out.witnesses = {dh, predicate_witness(ex, z4, sigma, "co_first", false),
                   predicate_witness(ex, z2, sigma, "torsion", true)};
  out.details["ring"] = "zn:4";
  out.details["sigma_on_Z4"] = eval(*sigma, u.member(z4)).label();
  return finish(entry("S3.example-z"), Regime::Example, out);
}

// Z_{p^2} is co-first for every t-radical but not coprime.
PropositionResult example_zp2(SuiteContext&) {
  Outcome out;
  nlohmann::json rows = nlohmann::json::array();
  for (const std::string ring : {"zn:4", "zn:9"}) {
    auto& ex = example_context(ring);
    const auto& u = ex.universe();
    const std::string name = ring == "zn:4" ? "Z4" : "Z9";
    const auto i = *u.find_by_name(name);
    bool trad_cf = true;
    for (const auto& r : ex.ideal_family()) {
      const bool cf = co_first(u, i, r.a) == Verdict::True;
      trad_cf = trad_cf && cf;
      out.witnesses.push_back(predicate_witness(ex, i, r.expr, "co_first", true));
    }
    const auto& v = ex.coprime(i);
    out.check(trad_cf, {{"ring", ring}, {"module", name}, {"trad_co_first", false}});
    out.check(!v.by_xi, {{"ring", ring}, {"module", name}, {"by_xi", true}});
    rows.push_back({{"ring", ring}, {"module", name}, {"trad_co_first", trad_cf}, {"coprime", v.to_json()}});
  }
  out.details["instances"] = rows;
  return finish(entry("S3.example-zp2"), Regime::Example, out);
}

const std::vector<RegistryEntry>& entries() {
  static const std::vector<RegistryEntry> list{
      {"S3.note-fully-implies-cofirst", "Fully A-co-first modules are A-co-first", 3, EntryKind::Assert,
       fully_implies},
      {"S3.P-rad-cofirst", "Proposition: M is R-rad-co-first iff M is coprime", 3, EntryKind::Report, rad_cofirst},
      {"S3.lemma-simple", "Lemma: every simple module is R-pr-co-first", 3, EntryKind::Assert, lemma_simple},
      {"S3.lemma5", "Lemma 5: a semisimple M is R-pr-co-first iff M is isotypic", 3, EntryKind::Assert, lemma5},
      {"S3.prop6", "Proposition 6: R-pr-co-first modules are dihollow", 3, EntryKind::Assert, prop6},
      {"S3.prop-pf", "Proposition pf: M is R-pr-co-first iff M is coprime", 3, EntryKind::Assert, prop_pf},
      {"S3.example-z", "Example: a dihollow module that is not R-pr-co-first (finite analogue)", 3,
       EntryKind::Assert, example_z},
      {"S3.example-zp2", "Example ejemcovtcf: Z_{p^2} is R-trad-co-first but not coprime", 3, EntryKind::Assert,
       example_zp2},
  };
  return list;
}

const RegistryEntry& entry(const char* id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(std::string("no registry entry ") + id);
}

}  // namespace

std::vector<RegistryEntry> section3_entries() { return entries(); }

}  // namespace prerad::suites
