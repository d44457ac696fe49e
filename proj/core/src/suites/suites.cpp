#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>

#include "common.hpp"
#include "prerad/construct.hpp"
#include "prerad/error.hpp"

namespace prerad {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Reported: return "reported";
    case Status::Vacuous: return "vacuous";
    case Status::Degraded: return "degraded";
  }
  return "?";
}

std::string to_string(EntryKind k) { return k == EntryKind::Assert ? "assert" : "report"; }

std::string to_string(Regime r) {
  switch (r) {
    case Regime::ExhaustiveUniverse: return "exhaustive-universe";
    case Regime::GeneratedFamily: return "generated-family";
    case Regime::IdealFamily: return "ideal-family";
    case Regime::BoundedCoproduct: return "bounded-coproduct";
    case Regime::Example: return "example";
    case Regime::None: return "none";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SuiteContext

SuiteContext::SuiteContext(RingPtr ring, UniverseOptions universe_options, SuiteOptions options)
    : ring_(std::move(ring)), ring_spec_(ring_->tag()), options_(options) {
  if (options_.enumeration_cap == 0 || options_.class_cap == 0) throw SpecError("caps must be positive");
  universe_ = ModuleUniverse::build(ring_, universe_options);
}

SuiteContext::SuiteContext(RingPtr ring, const std::vector<ModulePtr>& seeds, UniverseOptions universe_options,
                           SuiteOptions options)
    : ring_(std::move(ring)), ring_spec_(ring_->tag()), options_(options) {
  if (options_.enumeration_cap == 0 || options_.class_cap == 0) throw SpecError("caps must be positive");
  universe_ = ModuleUniverse::build(ring_, seeds, universe_options);
  auto defaults = ModuleUniverse::build(ring_, universe_options);
  if (defaults->size() != universe_->size())
    for (const auto& m : seeds) seed_names_.push_back(universe_->name(*universe_->find(m)));
}

const std::vector<Assignment>& SuiteContext::preradicals() {
  if (!preradicals_) {
    EnumerationOptions eo;
    eo.cap = options_.enumeration_cap;
    try {
      preradicals_ = enumerate_universe_preradicals(*universe_, eo);
    } catch (const BoundExceeded&) {
      degraded_ = true;
      std::vector<Assignment> fam;
      for (const auto& r : generated()) fam.push_back(r.a);
      std::sort(fam.begin(), fam.end());
      preradicals_ = std::move(fam);
    }
  }
  return *preradicals_;
}

bool SuiteContext::degraded() {
  preradicals();
  return degraded_;
}

Regime SuiteContext::quantifier() { return degraded() ? Regime::GeneratedFamily : Regime::ExhaustiveUniverse; }

const PreradicalFlags& SuiteContext::flags(const Assignment& a) {
  auto it = flags_.find(a);
  if (it == flags_.end()) it = flags_.emplace(a, classify(a, *universe_)).first;
  return it->second;
}

std::vector<Assignment> SuiteContext::idempotents() {
  std::vector<Assignment> out;
  for (const auto& a : preradicals())
    if (flags(a).idempotent) out.push_back(a);
  return out;
}

std::vector<Assignment> SuiteContext::radicals() {
  std::vector<Assignment> out;
  for (const auto& a : preradicals())
    if (flags(a).radical) out.push_back(a);
  return out;
}

std::vector<Assignment> SuiteContext::idempotent_radicals() {
  std::vector<Assignment> out;
  for (const auto& a : preradicals())
    if (flags(a).radical && flags(a).idempotent) out.push_back(a);
  return out;
}

const std::vector<Realized>& SuiteContext::ideal_family() {
  if (!ideals_) {
    std::vector<Realized> out;
    for (const auto& ideal : ring_->two_sided_ideals()) {
      auto expr = Preradical::ideal(ring_, ideal);
      out.push_back({assignment_of(*expr, *universe_), expr});
    }
    ideals_ = std::move(out);
  }
  return *ideals_;
}

const std::vector<Realized>& SuiteContext::generated() {
  if (!generated_) {
    const auto& u = *universe_;
    std::vector<Realized> out;
    std::set<Assignment> seen;
    auto add = [&](Assignment a, PreradicalPtr expr) {
      if (seen.insert(a).second) out.push_back({std::move(a), std::move(expr)});
    };
    add(assignment_of(*Preradical::zero(), u), Preradical::zero());
    add(assignment_of(*Preradical::one(), u), Preradical::one());
    for (const auto& r : ideal_family()) add(r.a, r.expr);
    add(assignment_of(*Preradical::rad(), u), Preradical::rad());
    add(assignment_of(*Preradical::soc(), u), Preradical::soc());
    for (std::size_t i = 1; i < u.size(); ++i) {
      const auto& m = u.member(i);
      const auto& lat = m->lattice_sets();
      add(universe_alpha(u, i, lat.back()), Preradical::trace(m, u.name(i)));
      add(universe_omega(u, i, lat.front()), Preradical::reject(m, u.name(i)));
    }
    for (std::size_t i = 1; i < u.size(); ++i) {
      const auto& m = u.member(i);
      const auto& lat = m->lattice_sets();
      const auto& fi = m->fully_invariant_flags();
      for (std::size_t k = 0; k < lat.size(); ++k) {
        Submodule n(m, lat[k]);
        if (fi[k]) {
          add(universe_alpha(u, i, lat[k]), Preradical::alpha(n, u.name(i)));
          add(universe_omega(u, i, lat[k]), Preradical::omega(n, u.name(i)));
        }
      }
    }
    for (std::size_t i = 1; i < u.size(); ++i) {
      const auto& m = u.member(i);
      const auto& lat = m->lattice_sets();
      const auto& fi = m->fully_invariant_flags();
      for (std::size_t k = 0; k < lat.size(); ++k)
        if (!fi[k]) add(universe_omega(u, i, lat[k]), Preradical::gamma(Submodule(m, lat[k]), u.name(i)));
    }
    generated_ = std::move(out);
  }
  return *generated_;
}

PreradicalPtr SuiteContext::realize(const Assignment& a) {
  for (const auto& r : generated())
    if (r.a == a) return r.expr;
  return nullptr;
}

const CoprimeVerdict& SuiteContext::coprime(std::size_t member) {
  auto it = coprime_.find(member);
  if (it == coprime_.end()) it = coprime_.emplace(member, coprime_verdict(universe_->member(member))).first;
  return it->second;
}

const ClassTriple& SuiteContext::triple(const Assignment& a) {
  auto it = triples_.find(a);
  if (it == triples_.end()) it = triples_.emplace(a, class_triple(a, *universe_)).first;
  return it->second;
}

const std::vector<DynBitset>& SuiteContext::quotient_closed() {
  if (!quotient_closed_) quotient_closed_ = quotient_closed_classes(*universe_, options_.class_cap);
  return *quotient_closed_;
}

const std::vector<DynBitset>& SuiteContext::conatural() {
  if (!conatural_) {
    std::vector<DynBitset> out;
    for (const auto& c : quotient_closed())
      if (is_conatural(c, *universe_)) out.push_back(c);
    conatural_ = std::move(out);
  }
  return *conatural_;
}

bool SuiteContext::v_ring() {
  for (std::size_t i = 0; i < universe_->size(); ++i)
    if (!radical_of(universe_->member(i)).is_zero()) return false;
  return true;
}

bool SuiteContext::semisimple_ring() { return radical_of(universe_->member(universe_->regular_index())).is_zero(); }

nlohmann::json SuiteContext::witness_base() const {
  nlohmann::json w{{"ring", ring_spec_},
                   {"max_order", universe_->options().max_order},
                   {"sum_arity", universe_->options().sum_arity}};
  // Rings given by explicit tables carry them so the witness stands alone.
  try {
    make_ring(std::string_view(ring_spec_));
  } catch (const Error&) {
    w["ring_tables"] = {{"add", ring_->add_table()}, {"mul", ring_->mul_table()}, {"tag", ring_spec_}};
  }
  if (!seed_names_.empty()) w["seeds"] = seed_names_;
  return w;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace suites {

PropositionResult finish(const RegistryEntry& e, Regime regime, Outcome out, bool degraded) {
  PropositionResult r;
  r.id = e.id;
  r.anchor = e.anchor;
  r.kind = e.kind;
  r.regime = degraded && regime == Regime::ExhaustiveUniverse ? Regime::GeneratedFamily : regime;
  r.details = std::move(out.details);
  r.details["checked"] = out.checked;
  r.details["violations"] = out.violations;
  r.witnesses = std::move(out.witnesses);
  for (auto& w : r.witnesses) w["entry"] = e.id;
  if (e.kind == EntryKind::Report)
    r.status = out.ok ? Status::Holds : Status::Reported;
  else if (!out.ok)
    r.status = Status::Fails;
  else
    r.status = degraded ? Status::Degraded : Status::Holds;
  return r;
}

PropositionResult vacuous(const RegistryEntry& e, nlohmann::json details) {
  PropositionResult r;
  r.id = e.id;
  r.anchor = e.anchor;
  r.kind = e.kind;
  r.regime = Regime::None;
  r.status = Status::Vacuous;
  r.details = std::move(details);
  return r;
}

std::string sub_label(const ModulePtr& m, const DynBitset& set) { return Submodule(m, set).label(); }

nlohmann::json predicate_witness(SuiteContext& ctx, std::size_t member, const PreradicalPtr& sigma,
                                 const std::string& predicate, bool expected) {
  auto w = ctx.witness_base();
  w["kind"] = "predicate";
  w["module"] = ctx.universe().name(member);
  w["sigma"] = sigma->to_string();
  w["predicate"] = predicate;
  w["expected"] = expected;
  return w;
}

nlohmann::json sigma_json(SuiteContext& ctx, const Assignment& a) {
  if (auto e = ctx.realize(a)) return e->to_string();
  return assignment_label(a, ctx.universe());
}

nlohmann::json assignment_witness(SuiteContext& ctx, const Assignment& a) {
  auto w = ctx.witness_base();
  w["kind"] = "assignment";
  w["sigma"] = assignment_json(a, ctx.universe());
  return w;
}

nlohmann::json members_json(const ModuleUniverse& u, const DynBitset& c) { return class_json(c, u); }

bool is_zero_class(const DynBitset& c, const ModuleUniverse& u) { return c == zero_class(u); }

DynBitset whole_class(const ModuleUniverse& u) {
  DynBitset c(u.size());
  c.set_all();
  return c;
}

DynBitset zero_class(const ModuleUniverse& u) {
  DynBitset c(u.size());
  c.set(u.zero_index());
  return c;
}

SuiteContext& example_context(const std::string& ring_spec) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<SuiteContext>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[ring_spec];
  if (!slot) {
    auto ring = make_ring(std::string_view(ring_spec));
    UniverseOptions uo;
    uo.max_order = std::max<std::size_t>(16, ring->size());
    slot = std::make_unique<SuiteContext>(ring, uo);
  }
  return *slot;
}

}  // namespace suites

// ---------------------------------------------------------------------------
// Registry and reports

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> all;
    for (auto part : {suites::section1_entries(), suites::section2_entries(), suites::section3_entries(),
                      suites::section4_entries(), suites::section5_entries()})
      all.insert(all.end(), part.begin(), part.end());
    return all;
  }();
  return entries;
}

std::vector<const RegistryEntry*> select_entries(const std::vector<std::string>& selection) {
  std::set<std::string> wanted_ids;
  std::set<int> wanted_sections;
  for (const auto& s : selection) {
    if (s == "all") {
      for (int k = 1; k <= 5; ++k) wanted_sections.insert(k);
      continue;
    }
    if (s.size() == 8 && s.rfind("section", 0) == 0 && s[7] >= '1' && s[7] <= '5') {
      wanted_sections.insert(s[7] - '0');
      continue;
    }
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const RegistryEntry& e) { return e.id == s; }))
      throw SpecError("unknown suite or proposition '" + s + "'");
    wanted_ids.insert(s);
  }
  std::vector<const RegistryEntry*> out;
  for (const auto& e : registry())
    if (wanted_sections.count(e.section) || wanted_ids.count(e.id)) out.push_back(&e);
  return out;
}

SuiteReport run_entries(SuiteContext& ctx, const std::vector<const RegistryEntry*>& entries) {
  SuiteReport report;
  report.ring = ctx.ring_spec();
  report.universe = ctx.universe().parameters();
  report.options = {{"enumeration_cap", ctx.options().enumeration_cap}, {"class_cap", ctx.options().class_cap}};
  for (const auto* e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = e->run(ctx);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.propositions.push_back(std::move(r));
  }
  return report;
}

SuiteReport run_suites(const RingPtr& ring, const UniverseOptions& universe_options,
                       const std::vector<std::string>& selection, const SuiteOptions& options) {
  const auto entries = select_entries(selection);
  SuiteContext ctx(ring, universe_options, options);
  return run_entries(ctx, entries);
}

namespace {

SuiteReport run_section(SuiteContext& ctx, int section) {
  return run_entries(ctx, select_entries({"section" + std::to_string(section)}));
}

}  // namespace

SuiteReport run_section1_suite(SuiteContext& ctx) { return run_section(ctx, 1); }
SuiteReport run_section2_suite(SuiteContext& ctx) { return run_section(ctx, 2); }
SuiteReport run_section3_suite(SuiteContext& ctx) { return run_section(ctx, 3); }
SuiteReport run_section4_suite(SuiteContext& ctx) { return run_section(ctx, 4); }
SuiteReport run_section5_suite(SuiteContext& ctx) { return run_section(ctx, 5); }

nlohmann::json SuiteReport::to_json(bool include_timing) const {
  nlohmann::json props = nlohmann::json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& p : propositions) {
    nlohmann::json j{{"id", p.id},
                     {"anchor", p.anchor},
                     {"kind", to_string(p.kind)},
                     {"regime", to_string(p.regime)},
                     {"status", to_string(p.status)},
                     {"witnesses", p.witnesses},
                     {"details", p.details}};
    if (include_timing) j["runtime_ms"] = p.runtime_ms;
    props.push_back(std::move(j));
    ++counts[to_string(p.status)];
  }
  nlohmann::json summary = nlohmann::json::object();
  for (const char* s : {"holds", "fails", "reported", "vacuous", "degraded"}) summary[s] = counts[s];
  return {{"schema_version", kReportSchemaVersion},
          {"ring", ring},
          {"universe", universe},
          {"options", options},
          {"propositions", props},
          {"summary", summary},
          {"assert_failed", assert_failed()}};
}

std::string SuiteReport::to_text() const {
  const auto j = to_json(false);
  std::ostringstream out;
  out << "ring " << j["ring"].get<std::string>() << "  universe " << j["universe"].dump() << "\n";
  for (const auto& p : j["propositions"]) {
    out << p["status"].get<std::string>() << "\t" << p["id"].get<std::string>() << "\t[" << p["regime"].get<std::string>()
        << "]\t" << p["anchor"].get<std::string>() << "\n";
    for (const auto& w : p["witnesses"]) out << "\t  witness " << w.dump() << "\n";
  }
  out << "summary " << j["summary"].dump() << "\n";
  return out.str();
}

bool SuiteReport::assert_failed() const {
  return std::any_of(propositions.begin(), propositions.end(),
                     [](const PropositionResult& p) { return p.kind == EntryKind::Assert && p.status == Status::Fails; });
}

// ---------------------------------------------------------------------------
// Witness re-checks

bool recheck_witness(const nlohmann::json& w) {
  const auto kind = w.at("kind").get<std::string>();
  auto ring = w.contains("ring_tables") ? make_ring_from_json(w.at("ring_tables"))
                                        : make_ring(std::string_view(w.at("ring").get<std::string>()));
  UniverseOptions uo;
  uo.max_order = w.at("max_order").get<std::size_t>();
  uo.sum_arity = w.at("sum_arity").get<std::size_t>();
  UniversePtr u;
  if (w.contains("seeds")) {
    std::vector<ModulePtr> seeds;
    for (const auto& s : w.at("seeds")) seeds.push_back(parse_module(ring, s.get<std::string>()));
    u = ModuleUniverse::build(ring, seeds, uo);
  } else {
    u = ModuleUniverse::build(ring, uo);
  }
  auto member = [&](const std::string& name) {
    auto i = u->find_by_name(name);
    if (!i) throw SpecError("witness names unknown member '" + name + "'");
    return *i;
  };
  ModuleResolver resolve = [&](const std::string& spec) {
    if (auto i = u->find_by_name(spec)) return u->member(*i);
    return parse_module(ring, spec);
  };
  auto submodule = [&](const ModulePtr& m, const std::string& label) { return parse_submodule(m, label); };
  if (kind == "coprime") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    SubmodulePair pair{submodule(m, w.at("L").get<std::string>()), submodule(m, w.at("N").get<std::string>())};
    const auto crit = w.at("criterion").get<std::string>();
    if (crit == "xi") return xi_witness_holds(pair);
    if (crit == "box") return box_witness_holds(pair);
    if (crit == "comult") return comult_witness_holds(pair);
    if (crit == "hom") return hom_witness_holds(pair);
    throw SpecError("unknown criterion '" + crit + "'");
  }
  if (kind == "predicate") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    auto sigma = parse_preradical(ring, w.at("sigma").get<std::string>(), resolve);
    const auto pred = w.at("predicate").get<std::string>();
    const bool expected = w.at("expected").get<bool>();
    const auto s = eval(*sigma, m);
    bool value;
    if (pred == "co_first")
      value = is_co_first(m, *sigma) == Verdict::True;
    else if (pred == "fully_co_first")
      value = is_fully_co_first(m, *sigma) == Verdict::True;
    else if (pred == "second")
      value = is_second(m, *sigma) == Verdict::True;
    else if (pred == "torsion")
      value = s.is_whole();
    else if (pred == "torsion_free")
      value = s.is_zero();
    else
      throw SpecError("unknown predicate '" + pred + "'");
    return value == expected;
  }
  if (kind == "dihollow") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    return is_dihollow(m) == w.at("expected").get<bool>();
  }
  if (kind == "eval") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    auto sigma = parse_preradical(ring, w.at("sigma").get<std::string>(), resolve);
    return eval(*sigma, m) == submodule(m, w.at("expected").get<std::string>());
  }
  // Violation records for the comultiplication laws: true when the recorded
  // instance really breaks the law.
  if (kind == "comult") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    return !comultiplication(Submodule::whole(m), submodule(m, w.at("N").get<std::string>())).is_whole();
  }
  if (kind == "monotone") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    auto a = submodule(m, w.at("A").get<std::string>());
    return !comultiplication(a, submodule(m, w.at("B").get<std::string>()))
                .is_subset_of(comultiplication(a, submodule(m, w.at("C").get<std::string>())));
  }
  if (kind == "intersection") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    auto a = submodule(m, w.at("A").get<std::string>());
    auto meet_n = Submodule::whole(m), meet_q = Submodule::whole(m);
    for (const auto& n : w.at("N")) {
      auto ni = submodule(m, n.get<std::string>());
      meet_n = meet_n & ni;
      meet_q = meet_q & comultiplication(a, ni);
    }
    return !comultiplication(a, meet_n).is_subset_of(meet_q);
  }
  if (kind == "totalizer") {
    const auto& m = u->member(member(w.at("module").get<std::string>()));
    auto n = submodule(m, w.at("N").get<std::string>());
    auto t = totalizer(n);
    if (!comultiplication(t, n).is_whole()) return true;
    for (const auto& b : m->lattice_sets())
      if (comultiplication(Submodule(m, b), n).is_whole() && !t.elements().is_subset_of(b)) return true;
    return false;
  }
  if (kind == "additivity") {
    const auto& names = w.at("modules");
    auto a = u->member(member(names.at(0).get<std::string>()));
    auto b = u->member(member(names.at(1).get<std::string>()));
    auto sigma = parse_preradical(ring, w.at("sigma").get<std::string>(), resolve);
    auto ds = direct_sum({a, b});
    return eval(*sigma, ds.module) != ds.injections[0].image(eval(*sigma, a)) + ds.injections[1].image(eval(*sigma, b));
  }
  // Universe-level claims: re-run the entry that produced the witness and
  // look for the same record.
  if (w.contains("entry")) {
    std::vector<ModulePtr> seeds{regular_module(ring)};
    if (w.contains("seeds"))
      for (const auto& s : w.at("seeds")) seeds.push_back(parse_module(ring, s.get<std::string>()));
    SuiteContext ctx(ring, seeds, uo);
    auto report = run_entries(ctx, select_entries({w.at("entry").get<std::string>()}));
    for (const auto& p : report.propositions)
      for (const auto& x : p.witnesses)
        if (x == w) return true;
    return false;
  }
  throw SpecError("witness kind '" + kind + "' carries no re-checkable claim");
}

}  // namespace prerad
