#include <set>

#include "common.hpp"
#include "prerad/construct.hpp"
#include "prerad/projective.hpp"

namespace prerad::suites {

namespace {

const RegistryEntry& entry(const char* id);

// Exhaustive preradicals, generated expressions and ideal-induced ones.
std::vector<Assignment> every_sigma(SuiteContext& ctx) {
  std::set<Assignment> all(ctx.preradicals().begin(), ctx.preradicals().end());
  for (const auto& r : ctx.generated()) all.insert(r.a);
  for (const auto& r : ctx.ideal_family()) all.insert(r.a);
  return {all.begin(), all.end()};
}

nlohmann::json class_witness(SuiteContext& ctx, const char* what, const DynBitset& c) {
  auto w = ctx.witness_base();
  w["kind"] = "class";
  w["claim"] = what;
  w["class"] = class_json(c, ctx.universe());
  return w;
}

nlohmann::json sigma_witness(SuiteContext& ctx, const char* what, const Assignment& a) {
  auto w = ctx.witness_base();
  w["kind"] = "sigma";
  w["claim"] = what;
  w["sigma"] = sigma_json(ctx, a);
  return w;
}

PropositionResult pseudocomplement(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& qc = ctx.quotient_closed();
  const auto zero = zero_class(u);
  for (const auto& c : qc) {
    const auto p = perp(c, u);
    out.check(is_quotient_closed(p, u) && (c & p) == zero, class_witness(ctx, "C meet perp(C) = {0}", c));
    for (const auto& d : qc)
      if ((c & d) == zero) out.check(d.is_subset_of(p), class_witness(ctx, "maximality of perp(C)", c));
    // perp is antitone and perp^3 = perp.
    out.check(perp(perp(p, u), u) == p, class_witness(ctx, "perp^3 = perp", c));
    for (const auto& d : qc)
      if (c.is_subset_of(d)) out.check(perp(d, u).is_subset_of(p), class_witness(ctx, "perp antitone", c));
  }
  out.details["quotient_closed_classes"] = qc.size();
  return finish(entry("S4.prop-pseudocomplement"), Regime::ExhaustiveUniverse, out);
}

PropositionResult cncnc(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& qc = ctx.quotient_closed();
  const auto zero = zero_class(u);
  // (1): pseudocomplements found by search over quotient-closed classes,
  // without the perp formula.
  std::set<DynBitset> skeleton;
  for (const auto& d : qc) {
    DynBitset best = zero;
    for (const auto& e : qc)
      if ((d & e) == zero) best |= e;
    skeleton.insert(best);
  }
  std::set<DynBitset> perps;
  for (const auto& d : qc) perps.insert(perp(d, u));
  auto test = [&](const DynBitset& c) {
    const bool c1 = skeleton.count(c) > 0;
    const bool c2 = satisfies_cn(c, u);
    const bool c3 = is_conatural(c, u);
    const bool c4 = perps.count(c) > 0;
    auto w = class_witness(ctx, "(1)<=>(2)<=>(3)<=>(4)", c);
    w["values"] = {c1, c2, c3, c4};
    out.check(c1 == c2 && c2 == c3 && c3 == c4, w);
  };
  for (const auto& c : qc) test(c);
  // Arbitrary classes too, when there are few enough members.
  std::size_t arbitrary = 0;
  if (u.size() <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
      DynBitset c(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        if (mask >> i & 1U) c.set(i);
      if (is_quotient_closed(c, u)) continue;
      ++arbitrary;
      test(c);
    }
  }
  out.details["quotient_closed_classes"] = qc.size();
  out.details["other_classes"] = arbitrary;
  out.details["conatural_classes"] = ctx.conatural().size();
  return finish(entry("S4.thm-CNCNC"), Regime::ExhaustiveUniverse, out);
}

PropositionResult remark_conat(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& cn = ctx.conatural();
  out.check(is_conatural(zero_class(u), u), class_witness(ctx, "{0} conatural", zero_class(u)));
  out.check(is_conatural(whole_class(u), u), class_witness(ctx, "universe conatural", whole_class(u)));
  for (const auto& c : ctx.quotient_closed()) {
    const auto pp = perp(perp(c, u), u);
    // Explicit description: every nonzero quotient has a nonzero quotient in C.
    DynBitset described(u.size());
    for (std::size_t m = 0; m < u.size(); ++m) {
      bool all = true;
      u.quotient_set(m).for_each([&](std::size_t q) {
        if (q == u.zero_index()) return;
        auto reach = u.quotient_set(q) & c;
        reach.reset(u.zero_index());
        all = all && reach.any();
      });
      if (all) described.set(m);
    }
    out.check(pp == described, class_witness(ctx, "perp^2 description", c));
    out.check(c.is_subset_of(pp) && is_conatural(pp, u), class_witness(ctx, "perp^2 conatural above C", c));
    for (const auto& d : cn)
      if (c.is_subset_of(d)) out.check(pp.is_subset_of(d), class_witness(ctx, "perp^2 smallest", c));
  }
  const auto lattice = check_boolean(cn, u);
  auto lw = ctx.witness_base();
  lw["kind"] = "lattice";
  lw["check"] = lattice.to_json();
  out.check(lattice.boolean(), lw);
  out.details["lattice"] = lattice.to_json();
  out.details["conatural_classes"] = cn.size();
  return finish(entry("S4.remark-conat"), Regime::ExhaustiveUniverse, out);
}

PropositionResult remark_cop8(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const auto& prs = ctx.preradicals();
  for (std::size_t x = 0; x < prs.size(); ++x) {
    const auto& tx = ctx.triple(prs[x]);
    out.check(tx.P_bar == (tx.P | tx.T), sigma_witness(ctx, "(2) P_bar = P u T", prs[x]));
    out.check(tx.P.is_subset_of(tx.P_bar) && tx.T.is_subset_of(tx.P_bar), sigma_witness(ctx, "(3)", prs[x]));
    for (std::size_t y = x; y < prs.size(); ++y) {
      const auto& ty = ctx.triple(prs[y]);
      const std::vector<Assignment> fam{prs[x], prs[y]};
      DynBitset p(u.size()), pb(u.size()), t(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (family_fully_co_first(u, i, fam) != Verdict::False) p.set(i);
        if (family_co_first(u, i, fam) != Verdict::False) pb.set(i);
      }
      t = tx.T & ty.T;
      auto w = sigma_witness(ctx, "(1) family classes are intersections", prs[x]);
      w["other"] = sigma_json(ctx, prs[y]);
      out.check(p == (tx.P & ty.P) && pb == (tx.P_bar & ty.P_bar), w);
      out.check(p.is_subset_of(pb) && t.is_subset_of(pb), w);
      if (leq(prs[x], prs[y], u)) out.check(ty.P.is_subset_of(tx.P), w);
      if (leq(prs[y], prs[x], u)) out.check(tx.P.is_subset_of(ty.P), w);
    }
  }
  // The whole family at once.
  DynBitset p = whole_class(u), pb = whole_class(u), pa(u.size()), pba(u.size());
  for (const auto& a : prs) {
    p &= ctx.triple(a).P;
    pb &= ctx.triple(a).P_bar;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (family_fully_co_first(u, i, prs) != Verdict::False) pa.set(i);
    if (family_co_first(u, i, prs) != Verdict::False) pba.set(i);
  }
  out.check(p == pa && pb == pba, class_witness(ctx, "(1) for the whole family", pa));
  return finish(entry("S4.remark-cop8"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult prop_psig(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : every_sigma(ctx)) {
    const auto& t = ctx.triple(a);
    out.check(t.P == perp(t.T, u), sigma_witness(ctx, "P = perp(T)", a));
  }
  return finish(entry("S4.prop-propPsig"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult remark_hat(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : every_sigma(ctx))
    out.check(ctx.triple(a).P == ctx.triple(hat(a, u)).P, sigma_witness(ctx, "P = P_hat", a));
  return finish(entry("S4.remark-hat"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult cor_conatp(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : every_sigma(ctx)) {
    const auto& p = ctx.triple(a).P;
    out.check(is_conatural(p, u) && satisfies_cn(p, u), sigma_witness(ctx, "P conatural", a));
  }
  return finish(entry("S4.cor-conatp"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult antimorphism(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const std::set<DynBitset> cn(ctx.conatural().begin(), ctx.conatural().end());
  const auto& prs = ctx.preradicals();
  for (const auto& a : prs) {
    out.check(cn.count(ctx.triple(a).P) > 0, sigma_witness(ctx, "P lands in the conatural classes", a));
    for (const auto& b : prs)
      if (leq(a, b, u)) {
        auto w = sigma_witness(ctx, "order reversing", a);
        w["other"] = sigma_json(ctx, b);
        out.check(ctx.triple(b).P.is_subset_of(ctx.triple(a).P), w);
      }
  }
  return finish(entry("S4.remark-antimorphism"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult alpha_superfluous(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::size_t antecedent = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& m = u.member(i);
    const auto& lat = m->lattice_sets();
    const auto& fi = m->fully_invariant_flags();
    for (std::size_t k = 0; k + 1 < lat.size(); ++k) {
      if (!fi[k]) continue;
      const auto a = universe_alpha(u, i, lat[k]);
      if (fully_co_first(u, i, a) != Verdict::True) continue;
      ++antecedent;
      out.check(superfluous(Submodule(m, lat[k])),
                {{"module", u.name(i)}, {"N", sub_label(m, lat[k])}, {"claim", "N superfluous"}});
    }
  }
  out.details["antecedent_true"] = antecedent;
  return finish(entry("S4.prop-alpha-superfluous"), Regime::ExhaustiveUniverse, out);
}

PropositionResult cor24(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const Assignment zero(u.size(), 0);
  std::size_t trivial = 0;
  for (const auto& a : every_sigma(ctx)) {
    const auto& t = ctx.triple(a);
    const bool c1 = t.P == whole_class(u);
    const bool c2 = hat(a, u) == zero;
    const bool c3 = is_zero_class(t.T, u);
    trivial += c1;
    auto w = sigma_witness(ctx, "(1)<=>(2)<=>(3)", a);
    w["values"] = {c1, c2, c3};
    out.check(c1 == c2 && c2 == c3, w);
  }
  out.details["sigma_with_P_everything"] = trivial;
  return finish(entry("S4.cor-24"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult prop_vring(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  const Assignment zero(u.size(), 0);
  bool c1 = true, c2 = true;
  nlohmann::json witness;
  for (const auto& a : ctx.preradicals()) {
    if (a == zero) continue;
    const auto& t = ctx.triple(a);
    if (t.P == whole_class(u)) c1 = false;
    if (is_zero_class(t.T, u)) {
      c2 = false;
      if (witness.is_null()) witness = sigma_json(ctx, a);
    }
  }
  const bool c3 = ctx.v_ring();
  out.check(c1 == c2 && c2 == c3, {{"values", {c1, c2, c3}}});
  out.details["values"] = {c1, c2, c3};
  out.details["v_ring"] = c3;
  if (!witness.is_null()) out.details["nonzero_sigma_with_trivial_torsion"] = witness;
  return finish(entry("S4.prop-vring"), ctx.quantifier(), out, ctx.degraded());
}

// t-radicals: the ideal family plus any exhaustive t-radicals.
std::vector<Assignment> t_radicals(SuiteContext& ctx) {
  std::set<Assignment> out;
  for (const auto& r : ctx.ideal_family()) out.insert(r.a);
  for (const auto& a : ctx.preradicals())
    if (ctx.flags(a).t_radical) out.insert(a);
  return {out.begin(), out.end()};
}

PropositionResult prop83(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : t_radicals(ctx)) {
    DynBitset small(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      if (superfluous(Submodule(u.member(i), assigned_set(a, u, i)))) small.set(i);
    out.check(ctx.triple(a).P == small, sigma_witness(ctx, "P = {M | sigma(M) << M}", a));
  }
  return finish(entry("S4.prop-8.3"), Regime::IdealFamily, out);
}

PropositionResult cftrad(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : t_radicals(ctx)) {
    const auto& t = ctx.triple(a);
    out.check(is_conatural(t.T, u) && perp(t.P, u) == t.T, sigma_witness(ctx, "T conatural, perp(P) = T", a));
  }
  return finish(entry("S4.prop-cftrad"), Regime::IdealFamily, out);
}

PropositionResult coro_l(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  nlohmann::json strict = nlohmann::json::array();
  for (const auto& r : ctx.ideal_family()) {
    const auto& t = ctx.triple(r.a);
    out.check(t.F.is_subset_of(t.P), sigma_witness(ctx, "F subset of P", r.a));
    for (std::size_t i = 1; i < u.size(); ++i)
      if (t.P.test(i) && !t.F.test(i) && strict.size() < 8) {
        strict.push_back(predicate_witness(ctx, i, r.expr, "fully_co_first", true));
        strict.push_back(predicate_witness(ctx, i, r.expr, "torsion_free", false));
      }
  }
  for (const auto& a : t_radicals(ctx)) out.check(ctx.triple(a).F.is_subset_of(ctx.triple(a).P));
  out.details["strict_instances"] = strict;
  return finish(entry("S4.lemma-coroL"), Regime::IdealFamily, out);
}

PropositionResult rid_trad(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  for (const auto& a : ctx.idempotent_radicals()) {
    const auto& t = ctx.triple(a);
    out.check(is_t_radical(a, u) == t.F.is_subset_of(t.P), sigma_witness(ctx, "t-radical iff F subset of P", a));
  }
  out.details["idempotent_radicals"] = ctx.idempotent_radicals().size();
  return finish(entry("S4.prop-rid-trad"), ctx.quantifier(), out, ctx.degraded());
}

// Member isomorphic to the direct sum of members a and b, if the universe has it.
std::optional<std::size_t> sum_member(const ModuleUniverse& u, std::size_t a, std::size_t b) {
  if (u.member(a)->size() * u.member(b)->size() > u.options().max_order) return std::nullopt;
  return u.find(direct_sum({u.member(a), u.member(b)}).module);
}

PropositionResult propseudo(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  std::vector<Assignment> idem_trads;
  for (const auto& a : t_radicals(ctx))
    if (is_idempotent(a, u)) idem_trads.push_back(a);
  std::size_t sums = 0, outside = 0, hypotheses = 0;
  for (const auto& c : ctx.conatural()) {
    const auto pc = perp(c, u);
    const bool hyp = std::any_of(idem_trads.begin(), idem_trads.end(),
                                 [&](const Assignment& a) { return ctx.triple(a).P == pc; });
    if (!hyp) continue;
    ++hypotheses;
    for (std::size_t a = 1; a < u.size(); ++a)
      for (std::size_t b = a; b < u.size(); ++b) {
        if (!c.test(a) || !c.test(b)) continue;
        auto d = sum_member(u, a, b);
        if (!d) {
          ++outside;
          continue;
        }
        ++sums;
        auto w = class_witness(ctx, "closed under bounded direct sums", c);
        w["summands"] = {u.name(a), u.name(b)};
        out.check(c.test(*d), w);
      }
  }
  out.details["classes_meeting_hypothesis"] = hypotheses;
  out.details["sums_checked"] = sums;
  out.details["sums_beyond_bound"] = outside;
  out.details["bound"] = {{"max_order", u.options().max_order}, {"arity", 2}};
  return finish(entry("S4.prop-propseudo"), Regime::BoundedCoproduct, out);
}

PropositionResult ecncuc(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  // Supporting data only: conatural classes closed under bounded sums and
  // extensions inside the universe.
  bool sums = true, extensions = true;
  for (const auto& c : ctx.conatural()) {
    for (std::size_t a = 1; a < u.size(); ++a)
      for (std::size_t b = a; b < u.size(); ++b)
        if (c.test(a) && c.test(b))
          if (auto d = sum_member(u, a, b); d && !c.test(*d)) sums = false;
    for (std::size_t m = 0; m < u.size(); ++m) {
      if (c.test(m)) continue;
      const auto& lat = u.member(m)->lattice_sets();
      for (std::size_t k = 0; k < lat.size(); ++k)
        if (c.test(u.sub_class(m, k)) && c.test(u.quotient_class(m, k))) extensions = false;
    }
  }
  return vacuous(entry("S4.thm-ECNCUC"),
                 {{"reason", "every finite ring is a left MAX ring"},
                  {"conatural_closed_under_bounded_sums", sums},
                  {"conatural_closed_under_extensions", extensions}});
}

std::set<DynBitset> cn_trad(SuiteContext& ctx) {
  std::set<DynBitset> out;
  for (const auto& a : t_radicals(ctx)) out.insert(ctx.triple(a).P);
  return out;
}

PropositionResult max_ring(SuiteContext& ctx) {
  const std::set<DynBitset> cn(ctx.conatural().begin(), ctx.conatural().end());
  return vacuous(entry("S4.thm-MAXRing"), {{"reason", "every finite ring is a left MAX ring"},
                                           {"cn_trad_equals_conat", cn_trad(ctx) == cn}});
}

PropositionResult tpcfq(SuiteContext& ctx) {
  const auto& u = ctx.universe();
  Outcome out;
  // Cover of each nonzero member, located in the universe when it fits.
  std::vector<std::optional<std::size_t>> cover(u.size());
  std::size_t missing = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto p = projective_cover(u.member(i)).cover;
    if (p->size() <= u.options().max_order) cover[i] = u.find(p);
    if (!cover[i]) ++missing;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& a : ctx.idempotent_radicals()) {
    const auto& t = ctx.triple(a);
    bool covers = true;
    for (std::size_t i = 1; i < u.size(); ++i)
      if (t.T.test(i) && cover[i] && !t.T.test(*cover[i])) covers = false;
    const bool fq = is_quotient_closed(t.F, u);
    rows.push_back({{"sigma", sigma_json(ctx, a)}, {"T_closed_under_covers", covers}, {"F_quotient_closed", fq}});
    out.check(covers == fq, sigma_witness(ctx, "T closed under covers iff F closed under quotients", a));
  }
  out.details["idempotent_radicals"] = rows;
  out.details["covers_outside_universe"] = missing;
  return finish(entry("S4.lemma-tpcfq"), ctx.quantifier(), out, ctx.degraded());
}

PropositionResult conatperfect1(SuiteContext& ctx) {
  Outcome out;
  const std::set<DynBitset> cn(ctx.conatural().begin(), ctx.conatural().end());
  std::set<DynBitset> torsion;
  for (const auto& r : ctx.ideal_family()) torsion.insert(ctx.triple(r.a).T);
  std::set<DynBitset> exhaustive;
  for (const auto& a : ctx.preradicals())
    if (ctx.flags(a).t_radical) exhaustive.insert(ctx.triple(a).T);
  auto list = [&](const std::set<DynBitset>& s) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : s) j.push_back(class_json(c, ctx.universe()));
    return j;
  };
  out.check(cn == torsion, {{"conatural", list(cn)}, {"ideal_torsion_classes", list(torsion)}});
  out.check(exhaustive == torsion, {{"exhaustive_t_radical_torsion", list(exhaustive)}});
  out.details["conatural"] = list(cn);
  return finish(entry("S4.thm-conatperfect1"), Regime::IdealFamily, out);
}

PropositionResult conatforleftperfect(SuiteContext& ctx) {
  Outcome out;
  const std::set<DynBitset> cn(ctx.conatural().begin(), ctx.conatural().end());
  const auto cnt = cn_trad(ctx);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cnt) j.push_back(class_json(c, ctx.universe()));
  out.check(cnt == cn, {{"cn_trad", j}});
  out.details["cn_trad"] = j;
  return finish(entry("S4.cor-conatforleftperfect"), Regime::IdealFamily, out);
}

PropositionResult semilocal(SuiteContext&) {
  return vacuous(entry("S4.cor-semilocal"),
                 {{"reason", "every finite ring is semilocal and left perfect, so both sides always hold"}});
}

const std::vector<RegistryEntry>& entries() {
  static const std::vector<RegistryEntry> list{
      {"S4.prop-pseudocomplement", "Proposition: perp(Q) is the pseudocomplement of Q in R-quot", 4,
       EntryKind::Assert, pseudocomplement},
      {"S4.thm-CNCNC", "Theorem CNCNC (1)<=>(2)<=>(3)<=>(4)", 4, EntryKind::Assert, cncnc},
      {"S4.remark-conat", "Remark remarkconat: {0}, R-Mod conatural; perp^2 closure; R-conat Boolean", 4,
       EntryKind::Assert, remark_conat},
      {"S4.remark-cop8", "Remark cop8 (1)-(4)", 4, EntryKind::Assert, remark_cop8},
      {"S4.prop-propPsig", "Proposition propPsig: P_sigma = perp(T_sigma)", 4, EntryKind::Assert, prop_psig},
      {"S4.remark-hat", "Remark: P_sigma = P_hat(sigma)", 4, EntryKind::Assert, remark_hat},
      {"S4.cor-conatp", "Corollary conatp: P_sigma is conatural", 4, EntryKind::Assert, cor_conatp},
      {"S4.remark-antimorphism", "Remark: P_(-) is an antimorphism into R-conat", 4, EntryKind::Assert,
       antimorphism},
      {"S4.prop-alpha-superfluous", "Proposition: M in P_alpha_N^M with N proper f.i. implies N << M", 4,
       EntryKind::Assert, alpha_superfluous},
      {"S4.cor-24", "Corollary 24: P_sigma = R-Mod iff hat(sigma) = 0 iff T_sigma = {0}", 4, EntryKind::Assert,
       cor24},
      {"S4.prop-vring", "Proposition: R-Mod not in CN_{R-pr*} iff T_sigma != {0} for sigma != 0 iff R is a V-ring",
       4, EntryKind::Assert, prop_vring},
      {"S4.prop-8.3", "Proposition 8.3: P_sigma = {M | sigma(M) << M} for t-radicals", 4, EntryKind::Assert, prop83},
      {"S4.prop-cftrad", "Proposition cftrad: T_sigma is conatural for t-radicals", 4, EntryKind::Assert, cftrad},
      {"S4.lemma-coroL", "Lemma coroL: F_sigma is contained in P_sigma for t-radicals", 4, EntryKind::Assert,
       coro_l},
      {"S4.prop-rid-trad", "Proposition: an idempotent radical is a t-radical iff F_sigma is in P_sigma", 4,
       EntryKind::Assert, rid_trad},
      {"S4.prop-propseudo", "Proposition propseudo: C is closed under coproducts", 4, EntryKind::Assert, propseudo},
      {"S4.thm-ECNCUC", "Theorem ECNCUC: R-conat in R-TORS iff R is left MAX", 4, EntryKind::Assert, ecncuc},
      {"S4.thm-MAXRing", "Theorem MAXRing: CN_{R-trad} = R-conat implies R left MAX", 4, EntryKind::Assert,
       max_ring},
      {"S4.lemma-tpcfq", "Lemma tpcfq: T closed under projective covers iff F closed under quotients", 4,
       EntryKind::Assert, tpcfq},
      {"S4.thm-conatperfect1", "Theorem conatperfect1: R-conat = {T_sigma | sigma t-radical}", 4,
       EntryKind::Assert, conatperfect1},
      {"S4.cor-conatforleftperfect", "Corollary conatforleftperfect: CN_{R-trad} = R-conat", 4, EntryKind::Assert,
       conatforleftperfect},
      {"S4.cor-semilocal", "Corollary: for semilocal R, left perfect iff CN_{R-trad} = R-conat", 4,
       EntryKind::Assert, semilocal},
  };
  return list;
}

const RegistryEntry& entry(const char* id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw Error(std::string("no registry entry ") + id);
}

}  // namespace

std::vector<RegistryEntry> section4_entries() { return entries(); }

}  // namespace prerad::suites
