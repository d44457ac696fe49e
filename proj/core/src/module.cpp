#include "prerad/module.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "prerad/error.hpp"
#include "prerad/homs.hpp"

namespace prerad {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

bool lattice_less(const DynBitset& a, const DynBitset& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule::FiniteModule(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action)
    : ring_(std::move(ring)), orders_(std::move(orders)), action_(std::move(action)) {
  const std::size_t k = orders_.size();
  for (int d : orders_)
    if (d < 2) throw Error("cyclic orders must be >= 2");
  double total = 1;
  for (int d : orders_) total *= d;
  if (total > 4096) throw BoundExceeded("module with " + std::to_string(static_cast<long long>(total)) +
                                        " elements exceeds the supported 4096");
  size_ = static_cast<std::size_t>(total);
  strides_.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders_[i]);

  if (action_.size() != ring_->size()) throw Error("one action matrix per ring element is required");
  for (auto& mat : action_) {
    if (mat.size() != k) throw Error("action matrix has wrong row count");
    for (std::size_t j = 0; j < k; ++j) {
      if (mat[j].size() != k) throw Error("action matrix has wrong column count");
      for (auto& e : mat[j]) e = mod(e, orders_[j]);
    }
  }

  std::vector<std::vector<int>> coords(size_);
  for (Elem x = 0; x < size_; ++x) coords[x] = coordinates(x);

  add_.resize(size_ * size_);
  neg_.resize(size_);
  std::vector<long long> buf(k);
  for (Elem a = 0; a < size_; ++a) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = -coords[a][i];
    neg_[a] = from_coordinates(buf);
    for (Elem b = 0; b < size_; ++b) {
      for (std::size_t i = 0; i < k; ++i) buf[i] = coords[a][i] + coords[b][i];
      add_[a * size_ + b] = from_coordinates(buf);
    }
  }
  act_.resize(ring_->size() * size_);
  for (Elem r = 0; r < ring_->size(); ++r)
    for (Elem x = 0; x < size_; ++x) {
      for (std::size_t j = 0; j < k; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += action_[r][j][i] * coords[x][i];
        buf[j] = s;
      }
      act_[r * size_ + x] = from_coordinates(buf);
    }
}

ModulePtr FiniteModule::create(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action) {
  auto m = std::shared_ptr<FiniteModule>(new FiniteModule(std::move(ring), std::move(orders), std::move(action)));
  m->validate();
  return m;
}

ModulePtr FiniteModule::create_trusted(RingPtr ring, std::vector<int> orders, std::vector<IntMatrix> action) {
  return std::shared_ptr<FiniteModule>(new FiniteModule(std::move(ring), std::move(orders), std::move(action)));
}

ModulePtr FiniteModule::zero(RingPtr ring) {
  const std::size_t n = ring->size();
  return create_trusted(std::move(ring), {}, std::vector<IntMatrix>(n));
}

void FiniteModule::validate() const {
  const std::size_t k = rank();
  for (std::size_t r = 0; r < action_.size(); ++r)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (mod(static_cast<long long>(orders_[i]) * action_[r][j][i], orders_[j]) != 0)
          throw Error("action of ring element " + std::to_string(r) + " is not well defined on generator " +
                      std::to_string(i));
  const Elem one = ring_->one();
  for (Elem x = 0; x < size_; ++x)
    if (act(one, x) != x) throw Error("unity does not act as the identity");
  for (Elem r = 0; r < ring_->size(); ++r)
    for (Elem s = 0; s < ring_->size(); ++s) {
      const Elem rs = ring_->mul(r, s), rps = ring_->add(r, s);
      for (Elem x = 0; x < size_; ++x) {
        if (act(rps, x) != add(act(r, x), act(s, x)))
          throw Error("action does not respect ring addition");
        if (act(rs, x) != act(r, act(s, x))) throw Error("action does not respect ring multiplication");
      }
    }
}

Elem FiniteModule::times(long long k, Elem x) const noexcept {
  auto c = coordinates(x);
  std::vector<long long> buf(c.begin(), c.end());
  for (auto& e : buf) e *= k;
  return from_coordinates(buf);
}

std::vector<int> FiniteModule::coordinates(Elem x) const {
  std::vector<int> c(rank());
  std::size_t rest = x;
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = static_cast<int>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return c;
}

Elem FiniteModule::from_coordinates(std::span<const long long> coords) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += static_cast<std::size_t>(mod(coords[i], orders_[i])) * strides_[i];
  return static_cast<Elem>(idx);
}

Elem FiniteModule::generator(std::size_t i) const { return static_cast<Elem>(strides_[i]); }

std::string FiniteModule::element_label(Elem x) const {
  auto c = coordinates(x);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

std::optional<Elem> FiniteModule::parse_element(std::string_view text) const {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t == "0") return Elem{0};
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<long long> vals;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoll(part, &used));
      if (used != part.size()) return std::nullopt;
    } catch (...) {
      return std::nullopt;
    }
  }
  if (vals.size() != rank()) return std::nullopt;
  return from_coordinates(vals);
}

std::vector<long long> FiniteModule::invariant_factors() const {
  const std::size_t k = rank();
  IntMatrix rel(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = orders_[i];
  auto snf = smith_normal_form(std::move(rel), k);
  std::vector<long long> out;
  for (auto d : snf.diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

std::string FiniteModule::abelian_type() const {
  auto f = invariant_factors();
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!s.empty()) s += "+";
    s += "Z" + std::to_string(f[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

DynBitset FiniteModule::cyclic_span(Elem x) const {
  DynBitset s(size_);
  for (Elem r = 0; r < ring_->size(); ++r) s.set(act(r, x));
  return s;
}

DynBitset FiniteModule::sum_sets(const DynBitset& a, const DynBitset& b) const {
  DynBitset s(size_);
  a.for_each([&](std::size_t x) { b.for_each([&](std::size_t y) { s.set(add(static_cast<Elem>(x), static_cast<Elem>(y))); }); });
  return s;
}

DynBitset FiniteModule::join_cyclic(const DynBitset& base, Elem x) const {
  if (base.test(x)) return base;
  return sum_sets(base, cyclic_span(x));
}

const std::vector<Elem>& FiniteModule::ring_generators() const {
  std::call_once(gens_once_, [this] {
    DynBitset span(size_);
    span.set(0);
    while (span.count() < size_) {
      Elem best = 0;
      std::size_t best_size = 0;
      for (Elem x = 0; x < size_; ++x) {
        if (span.test(x)) continue;
        const std::size_t s = join_cyclic(span, x).count();
        if (s > best_size) {
          best_size = s;
          best = x;
        }
      }
      ring_generators_.push_back(best);
      span = join_cyclic(span, best);
    }
  });
  return ring_generators_;
}

const std::vector<DynBitset>& FiniteModule::lattice_sets() const {
  if (size_ > kMaxModuleOrder)
    throw BoundExceeded("submodule enumeration limited to modules of order <= " + std::to_string(kMaxModuleOrder));
  std::call_once(lattice_once_, [this] {
    std::vector<DynBitset> cyclics;
    {
      std::unordered_set<DynBitset, DynBitsetHash> seen;
      for (Elem x = 1; x < size_; ++x) {
        auto c = cyclic_span(x);
        if (seen.insert(c).second) cyclics.push_back(std::move(c));
      }
    }
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    std::vector<DynBitset> all;
    DynBitset z(size_);
    z.set(0);
    seen.insert(z);
    all.push_back(z);
    for (std::size_t head = 0; head < all.size(); ++head) {
      for (const auto& c : cyclics) {
        if (c.is_subset_of(all[head])) continue;
        auto next = sum_sets(all[head], c);
        if (seen.insert(next).second) all.push_back(std::move(next));
      }
    }
    std::sort(all.begin(), all.end(), lattice_less);
    lattice_ = std::move(all);
  });
  return lattice_;
}

std::size_t FiniteModule::lattice_index(const DynBitset& set) const {
  const auto& lat = lattice_sets();
  auto it = std::lower_bound(lat.begin(), lat.end(), set, lattice_less);
  if (it == lat.end() || *it != set) throw Error("set is not a submodule");
  return static_cast<std::size_t>(it - lat.begin());
}

const std::vector<std::vector<Elem>>& FiniteModule::endomorphism_tables() const {
  std::call_once(endo_once_, [this] { endos_ = hom_tables(*this, *this); });
  return endos_;
}

const std::vector<bool>& FiniteModule::fully_invariant_flags() const {
  std::call_once(fi_once_, [this] {
    const auto& lat = lattice_sets();
    const auto& endos = endomorphism_tables();
    fully_invariant_.assign(lat.size(), true);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (const auto& f : endos) {
        bool inside = true;
        lat[i].for_each([&](std::size_t x) { inside = inside && lat[i].test(f[x]); });
        if (!inside) {
          fully_invariant_[i] = false;
          break;
        }
      }
    }
  });
  return fully_invariant_;
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(ModulePtr parent, DynBitset elements) : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (elements_.size() != parent_->size() || !elements_.test(0)) throw Error("invalid submodule element set");
}

Submodule Submodule::zero(const ModulePtr& parent) {
  DynBitset s(parent->size());
  s.set(0);
  return Submodule(parent, std::move(s));
}

Submodule Submodule::whole(const ModulePtr& parent) {
  DynBitset s(parent->size());
  s.set_all();
  return Submodule(parent, std::move(s));
}

Submodule Submodule::generated_by(const ModulePtr& parent, std::span<const Elem> gens) {
  DynBitset s(parent->size());
  s.set(0);
  for (Elem g : gens) {
    if (g >= parent->size()) throw Error("generator outside the module");
    s = parent->join_cyclic(s, g);
  }
  return Submodule(parent, std::move(s));
}

bool Submodule::is_whole() const noexcept { return size() == parent_->size(); }

std::vector<Elem> Submodule::generators() const {
  std::vector<Elem> gens;
  DynBitset span(parent_->size());
  span.set(0);
  elements_.for_each([&](std::size_t x) {
    if (span.test(x)) return;
    gens.push_back(static_cast<Elem>(x));
    span = parent_->join_cyclic(span, static_cast<Elem>(x));
  });
  // Drop generators made redundant by later ones.
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Elem> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (Submodule::generated_by(parent_, rest).elements_ == elements_) gens = std::move(rest);
  }
  return gens;
}

std::string Submodule::label() const {
  if (is_zero()) return "0";
  auto gens = generators();
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "; " : "") + parent_->element_label(gens[i]);
  return s + ">";
}

Submodule Submodule::operator+(const Submodule& o) const {
  if (parent_ != o.parent_) throw Error("submodules of different modules");
  return Submodule(parent_, parent_->sum_sets(elements_, o.elements_));
}

Submodule Submodule::operator&(const Submodule& o) const {
  if (parent_ != o.parent_) throw Error("submodules of different modules");
  return Submodule(parent_, elements_ & o.elements_);
}

// ---------------------------------------------------------------------------
// ModuleMorphism

ModuleMorphism::ModuleMorphism(ModulePtr source, ModulePtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->size()) throw Error("morphism table has wrong length");
}

ModuleMorphism ModuleMorphism::from_generator_images(ModulePtr source, ModulePtr target, std::span<const Elem> images) {
  if (!same_ring(source->ring(), target->ring())) throw RingMismatch();
  const std::size_t k = source->rank();
  if (images.size() != k) throw Error("one image per source generator is required");
  for (std::size_t i = 0; i < k; ++i) {
    if (images[i] >= target->size()) throw Error("generator image outside the target");
    if (target->times(source->cyclic_orders()[i], images[i]) != 0)
      throw Error("image of generator " + std::to_string(i) + " is not killed by its order");
  }
  std::vector<Elem> table(source->size());
  for (Elem x = 0; x < source->size(); ++x) {
    auto c = source->coordinates(x);
    Elem acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = target->add(acc, target->times(c[i], images[i]));
    table[x] = acc;
  }
  for (Elem r = 0; r < source->ring()->size(); ++r)
    for (std::size_t i = 0; i < k; ++i)
      if (table[source->act(r, source->generator(i))] != target->act(r, images[i]))
        throw Error("generator images do not commute with the ring action");
  return ModuleMorphism(std::move(source), std::move(target), std::move(table));
}

ModuleMorphism ModuleMorphism::identity(const ModulePtr& m) {
  std::vector<Elem> t(m->size());
  std::iota(t.begin(), t.end(), Elem{0});
  return ModuleMorphism(m, m, std::move(t));
}

ModuleMorphism ModuleMorphism::zero(const ModulePtr& source, const ModulePtr& target) {
  return ModuleMorphism(source, target, std::vector<Elem>(source->size(), 0));
}

std::vector<Elem> ModuleMorphism::generator_images() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < source_->rank(); ++i) out.push_back(table_[source_->generator(i)]);
  return out;
}

bool ModuleMorphism::is_zero() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](Elem e) { return e == 0; });
}

bool ModuleMorphism::is_injective() const noexcept {
  return std::count(table_.begin(), table_.end(), Elem{0}) == 1;
}

bool ModuleMorphism::is_surjective() const noexcept { return image_set(Submodule::whole(source_).elements()).count() == target_->size(); }

bool ModuleMorphism::is_linear() const noexcept {
  for (Elem x = 0; x < source_->size(); ++x) {
    for (Elem y = 0; y < source_->size(); ++y)
      if (table_[source_->add(x, y)] != target_->add(table_[x], table_[y])) return false;
    for (Elem r = 0; r < source_->ring()->size(); ++r)
      if (table_[source_->act(r, x)] != target_->act(r, table_[x])) return false;
  }
  return true;
}

DynBitset ModuleMorphism::image_set(const DynBitset& sub) const {
  DynBitset s(target_->size());
  sub.for_each([&](std::size_t x) { s.set(table_[x]); });
  return s;
}

DynBitset ModuleMorphism::preimage_set(const DynBitset& sub) const {
  DynBitset s(source_->size());
  for (Elem x = 0; x < source_->size(); ++x)
    if (sub.test(table_[x])) s.set(x);
  return s;
}

Submodule ModuleMorphism::image() const { return Submodule(target_, image_set(Submodule::whole(source_).elements())); }
Submodule ModuleMorphism::image(const Submodule& sub) const { return Submodule(target_, image_set(sub.elements())); }
Submodule ModuleMorphism::kernel() const { return Submodule(source_, preimage_set(Submodule::zero(target_).elements())); }
Submodule ModuleMorphism::preimage(const Submodule& sub) const { return Submodule(source_, preimage_set(sub.elements())); }

ModuleMorphism ModuleMorphism::then(const ModuleMorphism& next) const {
  if (next.source_ != target_) throw Error("morphisms are not composable");
  std::vector<Elem> t(table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = next.table_[table_[x]];
  return ModuleMorphism(source_, next.target_, std::move(t));
}

// ---------------------------------------------------------------------------
// Lattice queries

std::vector<Submodule> enumerate_submodules(const ModulePtr& m) {
  std::vector<Submodule> out;
  for (const auto& s : m->lattice_sets()) out.emplace_back(m, s);
  return out;
}

bool is_fully_invariant(const Submodule& n) {
  const auto& m = n.parent();
  return m->fully_invariant_flags()[m->lattice_index(n.elements())];
}

bool superfluous(const Submodule& n) {
  const auto& m = n.parent();
  for (const auto& k : m->lattice_sets()) {
    if (k.count() == m->size()) continue;
    if (m->sum_sets(n.elements(), k).count() == m->size()) return false;
  }
  return true;
}

std::vector<Submodule> maximal_submodules(const ModulePtr& m) {
  const auto& lat = m->lattice_sets();
  std::vector<Submodule> out;
  for (const auto& s : lat) {
    if (s.count() == m->size()) continue;
    bool maximal = true;
    for (const auto& t : lat)
      if (t != s && t.count() != m->size() && s.is_subset_of(t)) {
        maximal = false;
        break;
      }
    if (maximal) out.emplace_back(m, s);
  }
  return out;
}

std::vector<Submodule> minimal_submodules(const ModulePtr& m) {
  const auto& lat = m->lattice_sets();
  std::vector<Submodule> out;
  for (const auto& s : lat) {
    if (s.count() == 1) continue;
    bool minimal = true;
    for (const auto& t : lat)
      if (t != s && t.count() != 1 && t.is_subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace_back(m, s);
  }
  return out;
}

Submodule radical_of(const ModulePtr& m) {
  Submodule acc = Submodule::whole(m);
  for (const auto& s : maximal_submodules(m)) acc = acc & s;
  return acc;
}

Submodule socle_of(const ModulePtr& m) {
  Submodule acc = Submodule::zero(m);
  for (const auto& s : minimal_submodules(m)) acc = acc + s;
  return acc;
}

bool is_simple(const ModulePtr& m) { return !m->is_zero() && m->lattice_sets().size() == 2; }

bool is_semisimple(const ModulePtr& m) { return socle_of(m).is_whole(); }

}  // namespace prerad
