#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prerad/cofirst.hpp"
#include "prerad/conat.hpp"
#include "prerad/config.hpp"
#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/homs.hpp"
#include "prerad/preradical.hpp"
#include "prerad/products.hpp"
#include "prerad/suites.hpp"

using namespace prerad;
using nlohmann::json;

namespace {

constexpr int kExitAssertFailed = 1;
constexpr int kExitError = 2;

bool looks_like_ring(const std::string& s) {
  return s.rfind("zn:", 0) == 0 || s.rfind("product(", 0) == 0 || s.rfind("triangular:", 0) == 0 ||
         s.rfind("matrix:", 0) == 0;
}

// Ring named by the first argument, or zn:lcm of every Zd mentioned.
RingPtr ring_from_args(std::vector<std::string>& args) {
  if (!args.empty() && looks_like_ring(args.front())) {
    auto r = make_ring(std::string_view(args.front()));
    args.erase(args.begin());
    return r;
  }
  long long l = 1;
  static const std::regex zd(R"(Z(\d+))");
  for (const auto& a : args)
    for (std::sregex_iterator it(a.begin(), a.end(), zd), end; it != end; ++it) l = std::lcm(l, std::stoll((*it)[1]));
  if (l < 2) throw SpecError("cannot infer the ring; give a ring spec first");
  return make_ring("zn:" + std::to_string(l));
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw SpecError("usage: " + usage);
}

std::string lattice_text(const ModulePtr& m) {
  const auto& sets = m->lattice_sets();
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i)
    os << "L" << i << " = " << Submodule(m, sets[i]).label() << "  (" << sets[i].count() << " elements"
       << (m->fully_invariant_flags()[i] ? ", fully invariant" : "") << ")\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || !sets[i].is_subset_of(sets[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < sets.size() && cover; ++k)
        if (k != i && k != j && sets[i].is_subset_of(sets[k]) && sets[k].is_subset_of(sets[j])) cover = false;
      if (cover) os << "L" << i << " < L" << j << "\n";
    }
  return os.str();
}

std::string morphism_text(const ModuleMorphism& f) {
  std::string s;
  for (auto x : f.source()->ring_generators()) {
    if (!s.empty()) s += ", ";
    s += f.source()->element_label(x) + " -> " + f.target()->element_label(f(x));
  }
  return s.empty() ? "(zero module)" : s;
}

std::string ring_text(const RingPtr& r) {
  std::ostringstream os;
  os << "ring " << r->tag() << "\n"
     << "order " << r->size() << ", characteristic " << r->characteristic()
     << (r->commutative() ? ", commutative" : ", noncommutative") << "\n";
  os << "two-sided ideals:";
  for (const auto& i : r->two_sided_ideals()) os << " " << r->ideal_label(i);
  os << "\njacobson radical: " << r->ideal_label(jacobson_radical(r)) << "\n";
  auto simples = simple_modules(r);
  for (std::size_t i = 0; i < simples.size(); ++i)
    os << "S" << i + 1 << ": order " << simples[i]->size() << ", type " << simples[i]->abelian_type() << "\n";
  return os.str();
}

std::string module_text(const ModulePtr& m) {
  std::ostringstream os;
  os << "order " << m->size() << ", type " << m->abelian_type() << "\n";
  os << "generators:";
  for (auto g : m->ring_generators()) os << " " << m->element_label(g);
  os << "\nsubmodules: " << m->lattice_sets().size() << "\n"
     << "radical: " << radical_of(m).label() << "\n"
     << "socle: " << socle_of(m).label() << "\n"
     << "simple: " << (is_simple(m) ? "yes" : "no") << ", semisimple: " << (is_semisimple(m) ? "yes" : "no")
     << ", dihollow: " << (is_dihollow(m) ? "yes" : "no") << "\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path);
  out << body;
}

struct CheckArgs {
  std::string config_path;
  std::string ring;
  std::vector<std::string> suites;
  std::optional<std::size_t> max_order, sum_arity;
  std::string out;
  bool text = false;
  bool timing = false;
};

int run_check(const CheckArgs& a) {
  WorkbenchConfig config;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw SpecError("cannot read " + a.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    config = parse_config(ss.str());
  } else {
    if (a.ring.empty()) throw SpecError("check needs --config or --ring");
    json doc{{"ring", a.ring}};
    if (!a.suites.empty()) doc["suites"] = a.suites;
    config = config_from_json(doc);
  }
  if (a.max_order) config.universe.max_order = *a.max_order;
  if (a.sum_arity) config.universe.sum_arity = *a.sum_arity;
  if (!a.out.empty()) config.json_out = a.out;
  if (a.timing) config.timing = true;

  auto report = run(config);
  const auto doc = report.to_json(config.timing).dump(2) + "\n";
  if (config.json_out) write_file(*config.json_out, doc);
  if (config.text_out) write_file(*config.text_out, report.to_text());
  if (a.text)
    std::cout << report.to_text();
  else if (!config.json_out)
    std::cout << doc;
  return report.assert_failed() ? kExitAssertFailed : 0;
}

int run_compute(const std::string& what, std::vector<std::string> args) {
  auto ring = ring_from_args(args);
  if (what == "box" || what == "comult") {
    need(args, 3, "compute " + what + " [ring] <module> <A> <B>");
    auto m = parse_module(ring, args[0]);
    auto a = parse_submodule(m, args[1]), b = parse_submodule(m, args[2]);
    std::cout << (what == "box" ? box_product(a, b) : comultiplication(a, b)).label() << "\n";
  } else if (what == "tot") {
    need(args, 2, "compute tot [ring] <module> <N>");
    auto m = parse_module(ring, args[0]);
    std::cout << totalizer(parse_submodule(m, args[1])).label() << "\n";
  } else if (what == "eval") {
    need(args, 2, "compute eval [ring] <preradical> <module>");
    auto sigma = parse_preradical(ring, args[0]);
    std::cout << eval(*sigma, parse_module(ring, args[1])).label() << "\n";
  } else {
    throw SpecError("unknown computation '" + what + "'");
  }
  return 0;
}

int run_conat(const std::string& ring_spec, std::optional<std::size_t> max_order, bool dot) {
  auto ring = make_ring(std::string_view(ring_spec));
  UniverseOptions uo;
  uo.max_order = max_order ? *max_order : default_max_order(ring_spec);
  auto u = ModuleUniverse::build(ring, uo);
  auto classes = conatural_classes(*u);
  if (dot) {
    std::cout << conat_dot(classes, *u);
    return 0;
  }
  json j{{"ring", ring->tag()}, {"universe", u->parameters()}, {"classes", json::array()}};
  for (const auto& c : classes) j["classes"].push_back(class_json(c, *u));
  j["lattice"] = check_boolean(classes, *u).to_json();
  std::cout << j.dump(2) << "\n";
  return 0;
}

// check coprime|cofirst|second|dihollow on a single module.
int run_predicate(const std::string& what, std::vector<std::string> args) {
  auto ring = ring_from_args(args);
  if (what == "coprime") {
    need(args, 1, "check coprime [ring] <module>");
    auto m = parse_module(ring, args[0]);
    auto j = coprime_verdict(m).to_json();
    j["module"] = args[0];
    j["ring"] = ring->tag();
    std::cout << j.dump(2) << "\n";
  } else if (what == "cofirst" || what == "second") {
    need(args, 2, "check " + what + " [ring] <preradical> <module>");
    auto sigma = parse_preradical(ring, args[0]);
    auto m = parse_module(ring, args[1]);
    json j{{"ring", ring->tag()}, {"module", args[1]}, {"sigma", sigma->to_string()}};
    if (what == "cofirst") {
      j["co_first"] = to_json(is_co_first(m, *sigma));
      j["fully_co_first"] = to_json(is_fully_co_first(m, *sigma));
    } else {
      j["second"] = to_json(is_second(m, *sigma));
    }
    std::cout << j.dump(2) << "\n";
  } else if (what == "dihollow") {
    need(args, 1, "check dihollow [ring] <module>");
    json j{{"ring", ring->tag()}, {"module", args[0]}, {"dihollow", is_dihollow(parse_module(ring, args[0]))}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_inspect(const std::string& what, std::vector<std::string> args) {
  if (what == "ring") {
    need(args, 1, "inspect ring <ring>");
    std::cout << ring_text(make_ring(std::string_view(args[0])));
    return 0;
  }
  auto ring = ring_from_args(args);
  if (what == "module") {
    need(args, 1, "inspect module [ring] <module>");
    std::cout << module_text(parse_module(ring, args[0]));
  } else if (what == "lattice") {
    need(args, 1, "inspect lattice [ring] <module>");
    std::cout << lattice_text(parse_module(ring, args[0]));
  } else if (what == "hom") {
    need(args, 2, "inspect hom [ring] <source> <target>");
    auto homs = hom_set(parse_module(ring, args[0]), parse_module(ring, args[1]));
    std::cout << homs.size() << " morphisms\n";
    for (std::size_t i = 0; i < homs.size(); ++i) std::cout << "f" << i << ": " << morphism_text(homs[i]) << "\n";
  } else if (what == "eval") {
    need(args, 2, "inspect eval [ring] <preradical> <module>");
    auto sigma = parse_preradical(ring, args[0]);
    std::cout << eval(*sigma, parse_module(ring, args[1])).label() << "\n";
  } else {
    throw SpecError("unknown object '" + what + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preradical workbench for finite rings and modules"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "run proposition suites and emit a report");
  auto* cfg = check->add_option("--config", ca.config_path, "config JSON file")->check(CLI::ExistingFile);
  check->add_option("--ring", ca.ring, "ring preset")->excludes(cfg);
  check->add_option("--suite", ca.suites, "suite id, section name or all (repeatable)")->excludes(cfg);
  check->add_option("--max-order", ca.max_order, "largest universe member");
  check->add_option("--sum-arity", ca.sum_arity, "largest direct sum in the universe seeds");
  check->add_option("--out", ca.out, "write the JSON report here");
  check->add_flag("--text", ca.text, "print the text rendering");
  check->add_flag("--timing", ca.timing, "include runtime_ms in the report");

  // check <verb> ... for single-module predicates and the conatural lattice.
  std::string pverb;
  std::vector<std::string> pargs;
  for (const char* verb : {"coprime", "cofirst", "second", "dihollow"}) {
    auto* sub = check->add_subcommand(verb, std::string("decide ") + verb + " for one module");
    sub->add_option("args", pargs, "[ring] [preradical] <module>");
    sub->callback([&pverb, verb] { pverb = verb; });
  }
  std::string conat_ring;
  std::optional<std::size_t> conat_order;
  bool dot = false;
  auto* conat = check->add_subcommand("conat", "enumerate conatural classes of a ring's universe");
  conat->add_option("--ring", conat_ring)->required();
  conat->add_option("--max-order", conat_order);
  conat->add_flag("--dot", dot, "Graphviz output");
  check->require_subcommand(0, 1);

  std::string what;
  std::vector<std::string> rest;
  auto* compute = app.add_subcommand("compute", "box, comult, tot or eval");
  compute->add_option("what", what)->required();
  compute->add_option("args", rest);

  std::string iwhat;
  std::vector<std::string> irest;
  auto* inspect = app.add_subcommand("inspect", "ring, module, lattice, hom, eval");
  inspect->add_option("what", iwhat)->required();
  inspect->add_option("args", irest);

  std::string uring;
  UniverseOptions uo;
  std::optional<std::size_t> umax;
  auto* universe = app.add_subcommand("universe", "describe the module universe of a ring");
  universe->add_option("--ring", uring)->required();
  universe->add_option("--max-order", umax);
  universe->add_option("--sum-arity", uo.sum_arity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the bad-input code.
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*conat) return run_conat(conat_ring, conat_order, dot);
    if (!pverb.empty()) return run_predicate(pverb, pargs);
    if (*check) return run_check(ca);
    if (*compute) return run_compute(what, rest);
    if (*inspect) return run_inspect(iwhat, irest);
    if (*universe) {
      auto ring = make_ring(std::string_view(uring));
      uo.max_order = umax ? *umax : default_max_order(uring);
      std::cout << ModuleUniverse::build(ring, uo)->describe().dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "prerad-lab: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
