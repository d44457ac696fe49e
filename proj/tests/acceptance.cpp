// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reports come from the library; the values they are compared against are
// rebuilt here by brute force wherever the check is not a plain status read.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "prerad/construct.hpp"
#include "prerad/preradical.hpp"
#include "prerad/products.hpp"
#include "prerad/ring.hpp"
#include "prerad/suites.hpp"
#include "registry_list.hpp"

using namespace prerad;
using nlohmann::json;

namespace {

const std::vector<std::string> kPresets = {"zn:2", "zn:4", "zn:6", "zn:8", "product(zn:2,zn:3)",
                                           "triangular:2:2", "matrix:2:2"};

// Time limits in seconds.
constexpr double kSection1Limit = 60;
constexpr double kSection4Limit = 300;
constexpr double kFullRunLimit = 300;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

UniverseOptions preset_options(const std::string& ring) {
  UniverseOptions o;
  o.max_order = ring == "zn:6" ? 36 : 16;
  o.sum_arity = 2;
  return o;
}

SuiteReport run_preset(const std::string& ring, const std::vector<std::string>& selection) {
  return run_suites(make_ring(std::string_view(ring)), preset_options(ring), selection);
}

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

const PropositionResult& entry(const SuiteReport& r, const std::string& id) {
  for (const auto& p : r.propositions)
    if (p.id == id) return p;
  throw std::runtime_error("missing entry " + id);
}

// Entry holds with zero recorded violations, in the expected regime when one is given.
void require_holds(Criterion& c, const std::string& ring, const SuiteReport& r, const std::string& id,
                   std::optional<Regime> regime = std::nullopt) {
  const auto& p = entry(r, id);
  c.require(p.status == Status::Holds, ring + " " + id + " is " + to_string(p.status));
  c.require(p.details.value("violations", 0) == 0, ring + " " + id + " records violations");
  if (regime) c.require(p.regime == *regime, ring + " " + id + " regime " + to_string(p.regime));
}

bool has_predicate(const json& list, const std::string& module, const std::string& predicate, bool expected) {
  for (const auto& w : list)
    if (w.value("module", "") == module && w.value("predicate", "") == predicate &&
        w.value("expected", !expected) == expected)
      return true;
  return false;
}

// by_xi and by_hom decided from scratch: the trace of M/N in M by direct
// image sums, and Hom(M/L, M/N) by generator-image search.
struct BruteCoprime {
  bool xi = true;
  bool hom = true;
};

BruteCoprime brute_coprime(const ModulePtr& m) {
  BruteCoprime b;
  DynBitset all(m->size());
  all.set_all();
  std::vector<ModulePtr> quotients;
  for (const auto& n : m->lattice_sets())
    if (n != all) quotients.push_back(quotient(Submodule(m, n)).module);
  for (const auto& q : quotients) b.xi = b.xi && oracle::trace(q, m) == all;
  for (const auto& ql : quotients)
    for (const auto& qn : quotients)
      if (b.hom && oracle::homs(ql, qn).size() <= 1) b.hom = false;
  return b;
}

// I*M = M for a two-sided ideal I, by additive closure of products.
bool ideal_torsion(const ModulePtr& m, const DynBitset& ideal) {
  DynBitset prod(m->size());
  prod.set(0);
  ideal.for_each([&](std::size_t r) {
    for (Elem x = 0; x < m->size(); ++x) prod.set(m->act(static_cast<Elem>(r), x));
  });
  return oracle::additive_closure(*m, prod).count() == m->size();
}

}  // namespace

int main() {
  std::deque<Criterion> crit;
  auto add = [&](int n, std::string title) -> Criterion& {
    crit.push_back(Criterion{n, std::move(title), true, {}});
    return crit.back();
  };

  // One full default run; its reports back most criteria.
  std::map<std::string, SuiteReport> reports;
  auto t_full = Clock::now();
  for (const auto& ring : kPresets) reports.emplace(ring, run_preset(ring, {"all"}));
  const double full_seconds = seconds_since(t_full);

  {
    auto& c = add(1, "reject is a radical; alpha/omega bound the interval (all presets, < 60 s)");
    auto t0 = Clock::now();
    for (const auto& ring : kPresets) {
      auto r = run_preset(ring, {"section1"});
      require_holds(c, ring, r, "S1.remark-tryrej", Regime::ExhaustiveUniverse);
      require_holds(c, ring, r, "S1.remark-interval", Regime::ExhaustiveUniverse);
      c.require(entry(r, "S1.remark-interval").details.value("fully_invariant_pairs", 0) > 0,
                ring + " no fully invariant pairs checked");
    }
    double s = seconds_since(t0);
    c.require(s < kSection1Limit, "section 1 took " + std::to_string(s) + " s");
    c.notes.push_back("section1 " + std::to_string(s) + " s");
  }

  {
    auto& c = add(2, "eval(reject(Z6), Z2) = 0 over zn:6");
    auto ring = make_ring(std::string_view("zn:6"));
    auto sigma = parse_preradical(ring, "reject(Z6)");
    auto z2 = parse_module(ring, "Z2");
    c.require(eval(*sigma, z2).is_zero(), "reject(Z6)(Z2) is nonzero");
    // Direct kernel intersection over Hom(Z2, Z6).
    c.require(oracle::reject(parse_module(ring, "Z6"), z2).count() == 1, "brute-force reject is nonzero");
    require_holds(c, "zn:6", reports.at("zn:6"), "S2.example-z6");
  }

  {
    auto& c = add(3, "comultiplication monotonicity and intersection law (all presets)");
    for (const auto& ring : kPresets) {
      const auto& r = reports.at(ring);
      require_holds(c, ring, r, "S2.prop-monotone", Regime::ExhaustiveUniverse);
      require_holds(c, ring, r, "S2.cor-intersection", Regime::ExhaustiveUniverse);
      c.require(entry(r, "S2.prop-monotone").details.value("checked", 0) > 0, ring + " monotone checked nothing");
    }
  }

  {
    auto& c = add(4, "totalizer: (Tot:N) = M and minimality (all presets)");
    for (const auto& ring : kPresets) require_holds(c, ring, reports.at(ring), "S2.lemma-tot", Regime::ExhaustiveUniverse);
  }

  {
    auto& c = add(5, "by_comult = by_hom, by_xi = by_box; Z4 disagreement reported with (2Z4, 2Z4)");
    std::size_t members = 0;
    for (const auto& ring : kPresets) {
      const auto& r = reports.at(ring);
      require_holds(c, ring, r, "S2.lemma-BJKNco.1v3", Regime::ExhaustiveUniverse);
      require_holds(c, ring, r, "S2.box-xi", Regime::ExhaustiveUniverse);
      const auto& cross = entry(r, "S2.lemma-BJKNco.2v3");
      c.require(cross.details.contains("matrix"), ring + " no disagreement matrix");
      const json& matrix = cross.details["matrix"];
      auto u = ModuleUniverse::build(make_ring(std::string_view(ring)), preset_options(ring));
      for (std::size_t i = 0; i < u->size(); ++i) {
        const auto& m = u->member(i);
        if (m->is_zero()) continue;
        ++members;
        auto v = coprime_verdict(m);
        auto b = brute_coprime(m);
        c.require(v.by_comult == v.by_hom, ring + " " + u->name(i) + ": by_comult != by_hom");
        c.require(v.by_xi == v.by_box, ring + " " + u->name(i) + ": by_xi != by_box");
        c.require(v.by_xi == b.xi && v.by_hom == b.hom, ring + " " + u->name(i) + ": verdict differs from brute force");
        std::string cell = std::string("by_hom=") + (b.hom ? "true" : "false") + ",by_xi=" + (b.xi ? "true" : "false");
        bool listed = false;
        for (const auto& name : matrix.value(cell, json::array())) listed = listed || name == u->name(i);
        c.require(listed, ring + " " + u->name(i) + " not in matrix cell " + cell);
      }
      bool disagree = !matrix.value("by_hom=true,by_xi=false", json::array()).empty() ||
                      !matrix.value("by_hom=false,by_xi=true", json::array()).empty();
      c.require(cross.status == (disagree ? Status::Reported : Status::Holds),
                ring + " cross pair status " + to_string(cross.status));
    }
    const auto& cross = entry(reports.at("zn:4"), "S2.lemma-BJKNco.2v3");
    c.require(cross.status == Status::Reported, "zn:4 cross pair not reported");
    bool witness = false;
    for (const auto& w : cross.witnesses)
      if (w.value("module", "") == "Z4" && w.value("L", "") == "<2>" && w.value("N", "") == "<2>")
        witness = recheck_witness(w);
    c.require(witness, "zn:4 witness (2Z4, 2Z4) missing or not re-checkable");
    // The pair itself, from scratch: M/2M does not generate M, yet every pair of quotients has a nonzero map.
    auto ring = make_ring(std::string_view("zn:4"));
    auto z4 = parse_module(ring, "Z4");
    auto two = Submodule::generated_by(z4, std::vector<Elem>{z4->from_coordinates(std::vector<long long>{2})});
    auto q = quotient(two).module;
    c.require(oracle::trace(q, z4).count() == 2, "trace of Z4/2Z4 in Z4 is not 2Z4");
    c.require(brute_coprime(z4).hom && !brute_coprime(z4).xi, "Z4 is not by_hom-true, by_xi-false");
    c.notes.push_back(std::to_string(members) + " members cross-checked");
  }

  {
    auto& c = add(6, "R-pr-co-first iff coprime (by_xi), every member of every preset");
    for (const auto& ring : kPresets) {
      const auto& p = entry(reports.at(ring), "S3.prop-pf");
      require_holds(c, ring, reports.at(ring), "S3.prop-pf", Regime::ExhaustiveUniverse);
      for (const auto& row : p.details.value("table", json::array()))
        c.require(row["by_xi"] == row["pr_co_first"], ring + " " + row.value("module", "") + " disagrees");
    }
  }

  {
    auto& c = add(7, "semisimple member is R-pr-co-first iff isotypic");
    for (const auto& ring : kPresets) {
      require_holds(c, ring, reports.at(ring), "S3.lemma5", Regime::ExhaustiveUniverse);
      for (const auto& row : entry(reports.at(ring), "S3.lemma5").details.value("semisimple_members", json::array()))
        c.require(row["isotypic"] == row["pr_co_first"], ring + " " + row.value("module", "") + " disagrees");
    }
  }

  {
    auto& c = add(8, "R-pr-co-first implies dihollow; Z4 dihollow but not R-pr-co-first");
    for (const auto& ring : kPresets) require_holds(c, ring, reports.at(ring), "S3.prop6", Regime::ExhaustiveUniverse);
    const auto& r = reports.at("zn:4");
    bool listed = false;
    for (const auto& row : entry(r, "S3.prop6").details.value("dihollow_not_pr_co_first", json::array()))
      listed = listed || row.value("module", "") == "Z4";
    c.require(listed, "Z4 not recorded as dihollow and not R-pr-co-first");
    const auto& ex = entry(r, "S3.example-z");
    require_holds(c, "zn:4", r, "S3.example-z");
    bool dihollow = false, not_cofirst = false;
    for (const auto& w : ex.witnesses) {
      if (w.value("kind", "") == "dihollow" && w.value("module", "") == "Z4" && w["expected"] == true)
        dihollow = recheck_witness(w);
      if (w.value("kind", "") == "predicate" && w.value("module", "") == "Z4" && w["expected"] == false)
        not_cofirst = not_cofirst || recheck_witness(w);
    }
    c.require(dihollow && not_cofirst, "Z4 witnesses missing or not re-checkable");
  }

  {
    auto& c = add(9, "P = perp(T), P = P_hat, Cor 24, Prop 8.3 on zn:4, zn:6, triangular:2:2 (< 5 min)");
    auto t0 = Clock::now();
    for (const auto& ring : {"zn:4", "zn:6", "triangular:2:2"}) {
      auto r = run_preset(ring, {"S4.prop-propPsig", "S4.remark-hat", "S4.cor-24", "S4.prop-8.3"});
      for (const auto& id : {"S4.prop-propPsig", "S4.remark-hat", "S4.cor-24"})
        require_holds(c, ring, r, id, Regime::ExhaustiveUniverse);
      require_holds(c, ring, r, "S4.prop-8.3", Regime::IdealFamily);
    }
    double s = seconds_since(t0);
    c.require(s < kSection4Limit, "took " + std::to_string(s) + " s");
    c.notes.push_back(std::to_string(s) + " s");
  }

  {
    auto& c = add(10, "perp(P) = T and F inside P for ideal t-radicals; Z4 strictness; rid t-radical iff F inside P");
    for (const auto& ring : kPresets) {
      const auto& r = reports.at(ring);
      require_holds(c, ring, r, "S4.prop-cftrad", Regime::IdealFamily);
      require_holds(c, ring, r, "S4.lemma-coroL", Regime::IdealFamily);
      require_holds(c, ring, r, "S4.prop-rid-trad", Regime::ExhaustiveUniverse);
    }
    const auto& strict = entry(reports.at("zn:4"), "S4.lemma-coroL").details.value("strict_instances", json::array());
    bool in_p = has_predicate(strict, "Z4", "fully_co_first", true);
    bool not_f = has_predicate(strict, "Z4", "torsion_free", false);
    c.require(in_p && not_f, "zn:4 strictness witness for Z4 missing");
    for (const auto& w : strict) c.require(recheck_witness(w), "strict instance fails re-check: " + w.dump());
  }

  {
    auto& c = add(11, "conatural classes = ideal torsion classes on zn:4, zn:6; projective-cover lemma");
    for (const auto& ring_spec : {"zn:4", "zn:6"}) {
      auto ring = make_ring(std::string_view(ring_spec));
      SuiteContext ctx(ring, preset_options(ring_spec));
      const auto& u = ctx.universe();
      std::set<std::vector<bool>> conat, torsion;
      for (const auto& cls : ctx.conatural()) {
        std::vector<bool> bits(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) bits[i] = cls.test(i);
        conat.insert(bits);
      }
      for (const auto& ideal : oracle::ideals(*ring)) {
        std::vector<bool> bits(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) bits[i] = ideal_torsion(u.member(i), ideal);
        torsion.insert(bits);
      }
      c.require(conat == torsion, std::string(ring_spec) + " conatural classes differ from ideal torsion classes");
      std::size_t expected = std::string(ring_spec) == "zn:4" ? 2 : 4;
      c.require(conat.size() == expected, std::string(ring_spec) + " has " + std::to_string(conat.size()) + " classes");
      if (std::string(ring_spec) == "zn:4") {
        std::vector<bool> zero(u.size()), everything(u.size(), true);
        zero[u.zero_index()] = true;
        c.require(conat == std::set<std::vector<bool>>{zero, everything}, "zn:4 classes are not {0} and everything");
      }
      require_holds(c, ring_spec, reports.at(ring_spec), "S4.thm-conatperfect1");
    }
    for (const auto& ring : {"zn:4", "triangular:2:2"}) {
      const auto& p = entry(reports.at(ring), "S4.lemma-tpcfq");
      require_holds(c, ring, reports.at(ring), "S4.lemma-tpcfq", Regime::ExhaustiveUniverse);
      for (const auto& row : p.details.value("idempotent_radicals", json::array()))
        c.require(row["F_quotient_closed"] == row["T_closed_under_covers"],
                  std::string(ring) + " " + row.value("sigma", "") + " breaks the equivalence");
    }
  }

  {
    auto& c = add(12, "S inside P_bar for ideal t-radicals; P_bar = S on semisimple presets; zn:4 violation; psvc1");
    for (const auto& ring : kPresets) {
      require_holds(c, ring, reports.at(ring), "S5.tsvc1", Regime::IdealFamily);
      require_holds(c, ring, reports.at(ring), "S5.prop-psvc1", Regime::ExhaustiveUniverse);
    }
    const auto& strict = entry(reports.at("zn:4"), "S5.tsvc1").details.value("strict_instances", json::array());
    c.require(has_predicate(strict, "Z4", "co_first", true) && has_predicate(strict, "Z4", "second", false),
              "zn:4 strict inclusion witness missing");
    for (const auto& w : strict) c.require(recheck_witness(w), "strict instance fails re-check: " + w.dump());
    for (const auto& ring : {"product(zn:2,zn:3)", "matrix:2:2"}) {
      const auto& p = entry(reports.at(ring), "S5.final-prop");
      require_holds(c, ring, reports.at(ring), "S5.final-prop", Regime::ExhaustiveUniverse);
      c.require(p.details.value("all_P_bar_equal_S", false), std::string(ring) + " has sigma with P_bar != S");
    }
    const auto& z4 = entry(reports.at("zn:4"), "S5.final-prop");
    require_holds(c, "zn:4", reports.at("zn:4"), "S5.final-prop", Regime::ExhaustiveUniverse);
    c.require(!z4.details.value("all_P_bar_equal_S", true), "zn:4 has no violating sigma");
    bool rechecked = z4.details.contains("violation") && !z4.details["violation"].empty();
    for (const auto& w : z4.details.value("violation", json::array())) rechecked = rechecked && recheck_witness(w);
    c.require(rechecked, "zn:4 violating sigma not re-checkable");
  }

  {
    auto& c = add(13, "deterministic reports, complete registry, full default run < 5 min");
    for (const auto& ring : kPresets) {
      auto again = run_preset(ring, {"all"});
      c.require(again.to_json().dump(2) == reports.at(ring).to_json().dump(2), ring + " rerun differs");
      std::multiset<std::string> ids;
      for (const auto& p : reports.at(ring).propositions) ids.insert(p.id);
      for (const auto& id : registry_list::kIds) c.require(ids.count(id) == 1, ring + " " + id + " not exactly once");
      c.require(ids.size() == registry_list::kIds.size(), ring + " unexpected ids");
      c.require(!reports.at(ring).assert_failed(), ring + " has failing asserts");
    }
    std::vector<std::string> reg;
    for (const auto& e : registry()) reg.push_back(e.id);
    c.require(reg == registry_list::kIds, "registry ids differ from the expected list");
    for (const auto& key : registry_list::kAnchorKeys) {
      int hits = 0;
      for (const auto& e : registry()) hits += e.anchor.find(key) != std::string::npos;
      c.require(hits == 1, "anchor '" + key + "' matched " + std::to_string(hits) + " entries");
    }
    c.require(full_seconds < kFullRunLimit, "full run took " + std::to_string(full_seconds) + " s");
    c.notes.push_back("full run " + std::to_string(full_seconds) + " s");
  }

  int failed = 0;
  for (const auto& c : crit) {
    std::printf("%s [%2d] %s\n", c.pass ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
    failed += !c.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed ? 1 : 0;
}
