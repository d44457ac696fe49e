#include "prerad/preradical.hpp"

#include <algorithm>
#include <cctype>

#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/homs.hpp"

namespace prerad {

namespace {

const char* op_name(PrOp op) {
  switch (op) {
    case PrOp::Zero: return "zero";
    case PrOp::One: return "one";
    case PrOp::Alpha: return "alpha";
    case PrOp::Omega: return "omega";
    case PrOp::Gamma: return "gamma";
    case PrOp::Trace: return "trace";
    case PrOp::Reject: return "reject";
    case PrOp::Ideal: return "ideal";
    case PrOp::Rad: return "rad";
    case PrOp::Soc: return "soc";
    case PrOp::Meet: return "meet";
    case PrOp::Join: return "join";
    case PrOp::Compose: return "compose";
    case PrOp::Colon: return "colon";
    case PrOp::Hat: return "hat";
    case PrOp::Bar: return "bar";
  }
  return "?";
}

std::string submodule_spec(const Submodule& n) {
  if (n.is_zero()) return "0";
  if (n.is_whole()) return "all";
  std::string s;
  for (Elem g : n.generators()) s += (s.empty() ? "" : ";") + n.parent()->element_label(g);
  return s;
}

std::vector<Elem> ideal_generators(const RingPtr& ring, const DynBitset& ideal) {
  std::vector<Elem> gens;
  DynBitset span = ring->ideal_generated_by(gens);
  ideal.for_each([&](std::size_t x) {
    if (span.test(x)) return;
    gens.push_back(static_cast<Elem>(x));
    span = ring->ideal_generated_by(gens);
  });
  return gens;
}

DynBitset image_union(const FiniteModule& u, const std::vector<ElemTable>& maps, const DynBitset& source) {
  DynBitset out(u.size());
  out.set(0);
  for (const auto& f : maps) source.for_each([&](std::size_t x) { out.set(f[x]); });
  return out;
}

void check_ring(const Preradical& s, const ModulePtr& u) {
  if (auto r = s.ring(); r && !same_ring(r, u->ring())) throw RingMismatch();
}

}  // namespace

PreradicalPtr Preradical::zero() {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Zero;
  return p;
}

PreradicalPtr Preradical::one() {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::One;
  return p;
}

PreradicalPtr Preradical::rad() {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Rad;
  return p;
}

PreradicalPtr Preradical::soc() {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Soc;
  return p;
}

PreradicalPtr Preradical::leaf(PrOp op, ModulePtr m, std::optional<Submodule> sub, std::string spec) {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = op;
  p->ring_ = m->ring();
  p->module_ = std::move(m);
  p->sub_ = std::move(sub);
  p->spec_ = spec.empty() ? p->module_->abelian_type() : std::move(spec);
  return p;
}

PreradicalPtr Preradical::alpha(const Submodule& n, std::string spec) {
  if (!is_fully_invariant(n)) throw SpecError("alpha needs a fully invariant submodule");
  return leaf(PrOp::Alpha, n.parent(), n, std::move(spec));
}

PreradicalPtr Preradical::omega(const Submodule& n, std::string spec) {
  if (!is_fully_invariant(n)) throw SpecError("omega needs a fully invariant submodule");
  return leaf(PrOp::Omega, n.parent(), n, std::move(spec));
}

PreradicalPtr Preradical::gamma(const Submodule& n, std::string spec) {
  return leaf(PrOp::Gamma, n.parent(), n, std::move(spec));
}

PreradicalPtr Preradical::trace(const ModulePtr& m, std::string spec) {
  return leaf(PrOp::Trace, m, std::nullopt, std::move(spec));
}

PreradicalPtr Preradical::reject(const ModulePtr& m, std::string spec) {
  return leaf(PrOp::Reject, m, std::nullopt, std::move(spec));
}

PreradicalPtr Preradical::ideal(const RingPtr& ring, const DynBitset& ideal) {
  if (!ring->is_two_sided_ideal(ideal)) throw SpecError("ideal t-radical needs a two-sided ideal");
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Ideal;
  p->ring_ = ring;
  p->ideal_ = ideal;
  return p;
}

PreradicalPtr Preradical::meet(std::vector<PreradicalPtr> args) {
  if (args.empty()) throw SpecError("meet needs at least one argument");
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Meet;
  p->args_ = std::move(args);
  return p;
}

PreradicalPtr Preradical::join(std::vector<PreradicalPtr> args) {
  if (args.empty()) throw SpecError("join needs at least one argument");
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Join;
  p->args_ = std::move(args);
  return p;
}

PreradicalPtr Preradical::compose(PreradicalPtr outer, PreradicalPtr inner) {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Compose;
  p->args_ = {std::move(outer), std::move(inner)};
  return p;
}

PreradicalPtr Preradical::colon(PreradicalPtr outer, PreradicalPtr inner) {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Colon;
  p->args_ = {std::move(outer), std::move(inner)};
  return p;
}

PreradicalPtr Preradical::hat(PreradicalPtr arg) {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Hat;
  p->args_ = {std::move(arg)};
  return p;
}

PreradicalPtr Preradical::bar(PreradicalPtr arg) {
  auto p = std::shared_ptr<Preradical>(new Preradical());
  p->op_ = PrOp::Bar;
  p->args_ = {std::move(arg)};
  return p;
}

RingPtr Preradical::ring() const {
  if (ring_) return ring_;
  RingPtr found;
  for (const auto& a : args_) {
    auto r = a->ring();
    if (!r) continue;
    if (found && !same_ring(found, r)) throw RingMismatch();
    found = r;
  }
  return found;
}

std::string Preradical::to_string() const {
  std::string s = op_name(op_);
  switch (op_) {
    case PrOp::Zero:
    case PrOp::One:
    case PrOp::Rad:
    case PrOp::Soc:
      return s;
    case PrOp::Trace:
    case PrOp::Reject:
      return s + "(" + spec_ + ")";
    case PrOp::Alpha:
    case PrOp::Omega:
    case PrOp::Gamma:
      return s + "(" + spec_ + ", " + submodule_spec(*sub_) + ")";
    case PrOp::Ideal: {
      std::string g;
      for (Elem e : ideal_generators(ring_, ideal_)) g += (g.empty() ? "" : ",") + ring_->label(e);
      return s + "(" + (g.empty() ? "0" : g) + ")";
    }
    default: {
      s += "(";
      for (std::size_t i = 0; i < args_.size(); ++i) s += (i ? ", " : "") + args_[i]->to_string();
      return s + ")";
    }
  }
}

nlohmann::json Preradical::to_json() const {
  nlohmann::json j{{"op", op_name(op_)}};
  switch (op_) {
    case PrOp::Zero:
    case PrOp::One:
    case PrOp::Rad:
    case PrOp::Soc:
      break;
    case PrOp::Trace:
    case PrOp::Reject:
      j["module"] = spec_;
      break;
    case PrOp::Alpha:
    case PrOp::Omega:
    case PrOp::Gamma:
      j["module"] = spec_;
      j["submodule"] = submodule_spec(*sub_);
      break;
    case PrOp::Ideal: {
      auto gens = nlohmann::json::array();
      for (Elem e : ideal_generators(ring_, ideal_)) gens.push_back(ring_->label(e));
      j["generators"] = gens;
      break;
    }
    default: {
      auto args = nlohmann::json::array();
      for (const auto& a : args_) args.push_back(a->to_json());
      j["args"] = args;
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Evaluation

Submodule eval(const Preradical& sigma, const ModulePtr& u) {
  check_ring(sigma, u);
  switch (sigma.op()) {
    case PrOp::Zero:
      return Submodule::zero(u);
    case PrOp::One:
      return Submodule::whole(u);
    case PrOp::Rad:
      return radical_of(u);
    case PrOp::Soc:
      return socle_of(u);
    case PrOp::Trace:
    case PrOp::Alpha: {
      const auto& m = sigma.module();
      const DynBitset src = sigma.op() == PrOp::Alpha ? sigma.submodule()->elements() : Submodule::whole(m).elements();
      const auto img = image_union(*u, hom_tables(*m, *u), src);
      // A union of images of a fully invariant submodule; close under sums.
      std::vector<Elem> gens;
      img.for_each([&](std::size_t x) { gens.push_back(static_cast<Elem>(x)); });
      return Submodule::generated_by(u, gens);
    }
    case PrOp::Reject:
    case PrOp::Omega:
    case PrOp::Gamma: {
      const auto& m = sigma.module();
      const DynBitset target =
          sigma.op() == PrOp::Reject ? Submodule::zero(m).elements() : sigma.submodule()->elements();
      DynBitset acc(u->size());
      acc.set_all();
      for (const auto& f : hom_tables(*u, *m))
        for (Elem x = 0; x < u->size(); ++x)
          if (!target.test(f[x])) acc.reset(x);
      return Submodule(u, std::move(acc));
    }
    case PrOp::Ideal: {
      const auto& ideal = sigma.ideal_set();
      std::vector<Elem> gens;
      ideal.for_each([&](std::size_t a) {
        for (Elem x = 0; x < u->size(); ++x) gens.push_back(u->act(static_cast<Elem>(a), x));
      });
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      return Submodule::generated_by(u, gens);
    }
    case PrOp::Meet: {
      Submodule acc = Submodule::whole(u);
      for (const auto& a : sigma.args()) acc = acc & eval(*a, u);
      return acc;
    }
    case PrOp::Join: {
      Submodule acc = Submodule::zero(u);
      for (const auto& a : sigma.args()) acc = acc + eval(*a, u);
      return acc;
    }
    case PrOp::Compose: {
      const auto inner = eval(*sigma.args()[1], u);
      auto sub = submodule_as_module(inner);
      return sub.embedding.image(eval(*sigma.args()[0], sub.module));
    }
    case PrOp::Colon: {
      const auto inner = eval(*sigma.args()[1], u);
      auto q = quotient(inner);
      return q.projection.preimage(eval(*sigma.args()[0], q.module));
    }
    case PrOp::Hat: {
      Submodule cur = Submodule::whole(u);
      while (true) {
        auto sub = submodule_as_module(cur);
        auto next = sub.embedding.image(eval(*sigma.args()[0], sub.module));
        if (next == cur) return cur;
        cur = next;
      }
    }
    case PrOp::Bar: {
      Submodule cur = Submodule::zero(u);
      while (true) {
        auto q = quotient(cur);
        auto next = q.projection.preimage(eval(*sigma.args()[0], q.module));
        if (next == cur) return cur;
        cur = next;
      }
    }
  }
  throw Error("unknown preradical constructor");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '<' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '>' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
  return parts;
}

DynBitset parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Elem> elems;
  for (const auto& g : gens) {
    auto e = ring->parse_element(g);
    if (!e) throw SpecError("unknown ring element '" + g + "'");
    elems.push_back(*e);
  }
  return ring->ideal_generated_by(elems);
}

ModulePtr resolve_module(const RingPtr& ring, const ModuleResolver& resolve, const std::string& spec) {
  if (resolve) return resolve(spec);
  return parse_module(ring, spec);
}

PreradicalPtr parse_expr(const RingPtr& ring, const std::string& text, const ModuleResolver& resolve) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  const std::string head = trim(t.substr(0, open));
  if (open == std::string::npos) {
    if (head == "zero" || head == "0") return Preradical::zero();
    if (head == "one" || head == "1") return Preradical::one();
    if (head == "rad") return Preradical::rad();
    if (head == "soc") return Preradical::soc();
    throw SpecError("unknown preradical '" + head + "'");
  }
  if (t.back() != ')') throw SpecError("unbalanced parentheses in '" + t + "'");
  const auto args = split_args(t.substr(open + 1, t.size() - open - 2));
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw SpecError(head + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
  };
  if (head == "trace" || head == "reject") {
    need(1);
    auto m = resolve_module(ring, resolve, args[0]);
    return head == "trace" ? Preradical::trace(m, args[0]) : Preradical::reject(m, args[0]);
  }
  if (head == "alpha" || head == "omega" || head == "gamma") {
    need(2);
    auto m = resolve_module(ring, resolve, args[0]);
    auto n = parse_submodule(m, args[1]);
    if (head == "alpha") return Preradical::alpha(n, args[0]);
    if (head == "omega") return Preradical::omega(n, args[0]);
    return Preradical::gamma(n, args[0]);
  }
  if (head == "ideal") {
    if (args.empty()) throw SpecError("ideal needs generators");
    return Preradical::ideal(ring, parse_ideal(ring, args));
  }
  if (head == "meet" || head == "join") {
    std::vector<PreradicalPtr> ps;
    for (const auto& a : args) ps.push_back(parse_expr(ring, a, resolve));
    return head == "meet" ? Preradical::meet(std::move(ps)) : Preradical::join(std::move(ps));
  }
  if (head == "compose" || head == "colon") {
    need(2);
    auto o = parse_expr(ring, args[0], resolve);
    auto i = parse_expr(ring, args[1], resolve);
    return head == "compose" ? Preradical::compose(o, i) : Preradical::colon(o, i);
  }
  if (head == "hat" || head == "bar") {
    need(1);
    auto a = parse_expr(ring, args[0], resolve);
    return head == "hat" ? Preradical::hat(a) : Preradical::bar(a);
  }
  throw SpecError("unknown preradical constructor '" + head + "'");
}

}  // namespace

PreradicalPtr parse_preradical(const RingPtr& ring, std::string_view text, const ModuleResolver& resolve) {
  return parse_expr(ring, std::string(text), resolve);
}

PreradicalPtr preradical_from_json(const RingPtr& ring, const nlohmann::json& j, const ModuleResolver& resolve) {
  if (j.is_string()) return parse_preradical(ring, j.get<std::string>(), resolve);
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw SpecError("preradical JSON needs an 'op' string");
  const auto op = j["op"].get<std::string>();
  auto str = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw SpecError("preradical '" + op + "' needs string field '" + key + "'");
    return j[key].get<std::string>();
  };
  auto sub_args = [&] {
    if (!j.contains("args") || !j["args"].is_array()) throw SpecError("preradical '" + op + "' needs an 'args' array");
    std::vector<PreradicalPtr> out;
    for (const auto& a : j["args"]) out.push_back(preradical_from_json(ring, a, resolve));
    return out;
  };
  if (op == "zero") return Preradical::zero();
  if (op == "one") return Preradical::one();
  if (op == "rad") return Preradical::rad();
  if (op == "soc") return Preradical::soc();
  if (op == "trace" || op == "reject") {
    const auto spec = str("module");
    auto m = resolve_module(ring, resolve, spec);
    return op == "trace" ? Preradical::trace(m, spec) : Preradical::reject(m, spec);
  }
  if (op == "alpha" || op == "omega" || op == "gamma") {
    const auto spec = str("module");
    auto m = resolve_module(ring, resolve, spec);
    auto n = parse_submodule(m, str("submodule"));
    if (op == "alpha") return Preradical::alpha(n, spec);
    if (op == "omega") return Preradical::omega(n, spec);
    return Preradical::gamma(n, spec);
  }
  if (op == "ideal") {
    if (!j.contains("generators") || !j["generators"].is_array())
      throw SpecError("preradical 'ideal' needs a 'generators' array");
    std::vector<std::string> gens;
    for (const auto& g : j["generators"]) gens.push_back(g.is_string() ? g.get<std::string>() : g.dump());
    return Preradical::ideal(ring, parse_ideal(ring, gens));
  }
  if (op == "meet") return Preradical::meet(sub_args());
  if (op == "join") return Preradical::join(sub_args());
  if (op == "compose" || op == "colon") {
    auto a = sub_args();
    if (a.size() != 2) throw SpecError(op + " needs exactly two args");
    return op == "compose" ? Preradical::compose(a[0], a[1]) : Preradical::colon(a[0], a[1]);
  }
  if (op == "hat" || op == "bar") {
    auto a = sub_args();
    if (a.size() != 1) throw SpecError(op + " needs exactly one arg");
    return op == "hat" ? Preradical::hat(a[0]) : Preradical::bar(a[0]);
  }
  throw SpecError("unknown preradical op '" + op + "'");
}

}  // namespace prerad
