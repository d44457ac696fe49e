#include "prerad/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "prerad/error.hpp"

namespace prerad {

RingAxiomError::RingAxiomError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "ring axioms violated:";
        for (const auto& v : violations) msg += "\n  " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n') out.push_back(c);
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Caps the number of reported violations per axiom so a badly broken table
// still produces a readable message.
class ViolationLog {
 public:
  void add(const std::string& axiom, const std::string& detail) {
    auto& n = counts_[axiom];
    if (++n <= 3) entries_.push_back(axiom + ": " + detail);
  }
  bool empty() const { return entries_.empty(); }
  std::vector<std::string> take() { return std::move(entries_); }

 private:
  std::vector<std::string> entries_;
  std::map<std::string, int> counts_;
};

}  // namespace

RingPtr FiniteRing::from_tables(Table add, Table mul, std::string tag, std::vector<std::string> labels) {
  const std::size_t n = add.size();
  std::vector<std::string> shape;
  if (n == 0) shape.push_back("ring must have at least one element");
  if (n > kMaxRingOrder) shape.push_back("ring has " + std::to_string(n) + " elements; at most 64 supported");
  if (mul.size() != n) shape.push_back("add and mul tables differ in size");
  for (std::size_t i = 0; i < n && shape.empty(); ++i) {
    if (add[i].size() != n || mul[i].size() != n) shape.push_back("tables must be square");
    for (std::size_t j = 0; j < n && shape.empty(); ++j)
      if (add[i][j] >= n || mul[i][j] >= n) shape.push_back("table entry out of range");
  }
  if (!shape.empty()) throw RingAxiomError(std::move(shape));

  ViolationLog log;
  auto idx = [](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };

  std::optional<Elem> zero;
  for (Elem z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = add[z][x] == x && add[x][z] == x;
    if (ok) zero = z;
  }
  if (!zero) log.add("additive identity", "no element e with e+x = x+e = x");

  std::optional<Elem> one;
  for (Elem u = 0; u < n && !one; ++u) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = mul[u][x] == x && mul[x][u] == x;
    if (ok) one = u;
  }
  if (!one) log.add("unity", "no element u with u*x = x*u = x");

  std::vector<Elem> neg(n, 0);
  if (zero) {
    for (Elem x = 0; x < n; ++x) {
      bool found = false;
      for (Elem y = 0; y < n && !found; ++y)
        if (add[x][y] == *zero) {
          neg[x] = y;
          found = true;
        }
      if (!found) log.add("additive inverse", "element " + std::to_string(x) + " has none");
    }
  }

  bool commutative = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) log.add("additive commutativity", idx(a, b, 0));
      if (mul[a][b] != mul[b][a]) commutative = false;
      for (Elem c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) log.add("additive associativity", idx(a, b, c));
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) log.add("multiplicative associativity", idx(a, b, c));
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) log.add("left distributivity", idx(a, b, c));
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) log.add("right distributivity", idx(a, b, c));
      }
    }
  if (!log.empty()) throw RingAxiomError(log.take());

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->neg_ = std::move(neg);
  ring->zero_ = *zero;
  ring->one_ = *one;
  ring->commutative_ = commutative;
  ring->tag_ = std::move(tag);
  if (labels.size() != n) {
    labels.clear();
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  ring->labels_ = std::move(labels);

  std::size_t ch = 1;
  for (Elem x = ring->one_; x != ring->zero_; x = ring->add_[x][ring->one_]) ++ch;
  ring->characteristic_ = ch;

  // Ideal enumeration: close {0} under joining one more generator until no
  // new ideals appear.
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::vector<DynBitset> frontier;
  DynBitset z(n);
  z.set(ring->zero_);
  seen.insert(z);
  frontier.push_back(z);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const DynBitset cur = frontier[head];
    for (Elem x = 0; x < n; ++x) {
      if (cur.test(x)) continue;
      std::vector<Elem> gens;
      cur.for_each([&](std::size_t e) { gens.push_back(static_cast<Elem>(e)); });
      gens.push_back(x);
      DynBitset next = ring->ideal_generated_by(gens);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::sort(frontier.begin(), frontier.end(), [](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  ring->ideals_ = std::move(frontier);
  return ring;
}

Elem FiniteRing::from_integer(long long k) const noexcept {
  const long long ch = static_cast<long long>(characteristic_);
  long long m = ((k % ch) + ch) % ch;
  Elem acc = zero_;
  for (long long i = 0; i < m; ++i) acc = add_[acc][one_];
  return acc;
}

DynBitset FiniteRing::additive_closure(DynBitset set) const {
  set.set(zero_);
  std::vector<Elem> members;
  set.for_each([&](std::size_t e) { members.push_back(static_cast<Elem>(e)); });
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Elem s = add_[members[i]][members[j]];
      if (!set.test(s)) {
        set.set(s);
        members.push_back(s);
      }
    }
  return set;
}

DynBitset FiniteRing::ideal_generated_by(std::span<const Elem> gens) const {
  const std::size_t n = size();
  DynBitset set(n);
  set.set(zero_);
  for (Elem g : gens)
    for (Elem r = 0; r < n; ++r)
      for (Elem s = 0; s < n; ++s) set.set(mul_[mul_[r][g]][s]);
  return additive_closure(std::move(set));
}

bool FiniteRing::is_two_sided_ideal(const DynBitset& set) const {
  if (set.size() != size() || !set.test(zero_)) return false;
  bool ok = true;
  set.for_each([&](std::size_t a) {
    set.for_each([&](std::size_t b) { ok = ok && set.test(add_[a][b]); });
    for (Elem r = 0; r < size(); ++r) ok = ok && set.test(mul_[r][a]) && set.test(mul_[a][r]);
  });
  return ok;
}

DynBitset FiniteRing::ideal_product(const DynBitset& a, const DynBitset& b) const {
  DynBitset set(size());
  a.for_each([&](std::size_t x) { b.for_each([&](std::size_t y) { set.set(mul_[x][y]); }); });
  return additive_closure(std::move(set));
}

std::string FiniteRing::ideal_label(const DynBitset& ideal) const {
  if (ideal.count() == 1) return "0";
  if (ideal.count() == size()) return "R";
  // Smallest generating set found greedily, in element order.
  std::vector<Elem> gens;
  DynBitset span(size());
  span.set(zero_);
  ideal.for_each([&](std::size_t e) {
    if (span.test(e)) return;
    gens.push_back(static_cast<Elem>(e));
    span = ideal_generated_by(gens);
  });
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + labels_[gens[i]];
  return out + ")";
}

std::optional<Elem> FiniteRing::parse_element(std::string_view text) const {
  const std::string key = strip_spaces(text);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (strip_spaces(labels_[i]) == key) return static_cast<Elem>(i);
  if (auto v = parse_int(key)) {
    if (additively_cyclic()) return from_integer(*v);
    if (*v >= 0 && static_cast<std::size_t>(*v) < size()) return static_cast<Elem>(*v);
  }
  return std::nullopt;
}

bool FiniteRing::same_as(const FiniteRing& o) const noexcept {
  return this == &o || (add_ == o.add_ && mul_ == o.mul_);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

namespace {

RingPtr make_zn(long long n) {
  if (n < 2) throw SpecError("zn:N requires N >= 2, got " + std::to_string(n));
  if (n > static_cast<long long>(kMaxRingOrder)) throw SpecError("zn:N supports N <= 64");
  const auto sz = static_cast<std::size_t>(n);
  FiniteRing::Table add(sz, std::vector<Elem>(sz)), mul(sz, std::vector<Elem>(sz));
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) {
      add[a][b] = static_cast<Elem>((a + b) % sz);
      mul[a][b] = static_cast<Elem>((a * b) % sz);
    }
  return FiniteRing::from_tables(std::move(add), std::move(mul), "zn:" + std::to_string(n));
}

// Matrices over F_p whose entries outside `pattern` are forced to zero.
RingPtr make_matrix_ring(long long dim, long long p, bool triangular, std::string tag) {
  if (dim < 1) throw SpecError(tag + ": matrix size must be >= 1");
  if (!is_prime(p)) throw SpecError(tag + ": p must be prime");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!triangular || i <= j) slots.emplace_back(i, j);
  double order = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) order *= static_cast<double>(p);
  if (order > static_cast<double>(kMaxRingOrder))
    throw SpecError(tag + ": ring would have more than 64 elements");
  const std::size_t n = static_cast<std::size_t>(order);
  const auto d = static_cast<std::size_t>(dim);

  using Mat = std::vector<long long>;
  auto decode = [&](std::size_t idx) {
    Mat m(d * d, 0);
    for (std::size_t s = slots.size(); s-- > 0;) {
      m[static_cast<std::size_t>(slots[s].first) * d + static_cast<std::size_t>(slots[s].second)] =
          static_cast<long long>(idx % static_cast<std::size_t>(p));
      idx /= static_cast<std::size_t>(p);
    }
    return m;
  };
  auto encode = [&](const Mat& m) {
    std::size_t idx = 0;
    for (auto [i, j] : slots)
      idx = idx * static_cast<std::size_t>(p) +
            static_cast<std::size_t>(((m[static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)] % p) + p) % p);
    return static_cast<Elem>(idx);
  };

  std::vector<Mat> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    mats.push_back(decode(i));
    std::string l = "[";
    for (std::size_t r = 0; r < d; ++r) {
      l += (r ? ",[" : "[");
      for (std::size_t c = 0; c < d; ++c) l += (c ? "," : "") + std::to_string(mats.back()[r * d + c]);
      l += "]";
    }
    labels.push_back(l + "]");
  }
  FiniteRing::Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat s(d * d), t(d * d, 0);
      for (std::size_t k = 0; k < d * d; ++k) s[k] = mats[a][k] + mats[b][k];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t k = 0; k < d; ++k) t[r * d + c] += mats[a][r * d + k] * mats[b][k * d + c];
      add[a][b] = encode(s);
      mul[a][b] = encode(t);
    }
  return FiniteRing::from_tables(std::move(add), std::move(mul), std::move(tag), std::move(labels));
}

RingPtr make_product(const std::vector<RingPtr>& factors, std::string tag) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->size();
    if (n > kMaxRingOrder) throw SpecError(tag + ": ring would have more than 64 elements");
  }
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> parts(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      parts[k] = static_cast<Elem>(idx % factors[k]->size());
      idx /= factors[k]->size();
    }
    return parts;
  };
  auto encode = [&](const std::vector<Elem>& parts) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k]->size() + parts[k];
    return static_cast<Elem>(idx);
  };
  FiniteRing::Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    auto pa = decode(a);
    std::string l = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) l += (k ? "," : "") + factors[k]->label(pa[k]);
    labels.push_back(l + ")");
    for (std::size_t b = 0; b < n; ++b) {
      auto pb = decode(b);
      std::vector<Elem> s(factors.size()), t(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) {
        s[k] = factors[k]->add(pa[k], pb[k]);
        t[k] = factors[k]->mul(pa[k], pb[k]);
      }
      add[a][b] = encode(s);
      mul[a][b] = encode(t);
    }
  }
  return FiniteRing::from_tables(std::move(add), std::move(mul), std::move(tag), std::move(labels));
}

class RingSpecParser {
 public:
  explicit RingSpecParser(std::string text) : text_(std::move(text)) {}

  RingPtr parse() {
    RingPtr r = ring();
    if (pos_ != text_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SpecError("ring spec '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  RingPtr ring() {
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) word += text_[pos_++];
    if (word == "product") {
      expect('(');
      std::vector<RingPtr> factors{ring()};
      while (peek() == ',') {
        ++pos_;
        factors.push_back(ring());
      }
      expect(')');
      if (factors.size() < 2) fail("product needs at least two factors");
      return make_product(factors, text_.substr(start, pos_ - start));
    }
    std::vector<long long> args;
    while (peek() == ':') {
      ++pos_;
      args.push_back(number());
    }
    const std::string tag = text_.substr(start, pos_ - start);
    if (word == "zn" && args.size() == 1) return make_zn(args[0]);
    if (word == "triangular" && args.size() == 2) return make_matrix_ring(args[0], args[1], true, tag);
    if (word == "matrix" && args.size() == 2) return make_matrix_ring(args[0], args[1], false, tag);
    fail("unknown preset '" + tag + "'");
  }

  long long number() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto v = parse_int(std::string_view(text_).substr(start, pos_ - start));
    if (!v) fail("expected integer");
    return *v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr make_ring(std::string_view spec) { return RingSpecParser(strip_spaces(spec)).parse(); }

RingPtr make_ring_from_json(const nlohmann::json& spec) {
  if (spec.is_string()) return make_ring(std::string_view(spec.get<std::string>()));
  if (!spec.is_object() || !spec.contains("add") || !spec.contains("mul"))
    throw SpecError("explicit ring spec needs 'add' and 'mul' tables");
  FiniteRing::Table add, mul;
  try {
    add = spec.at("add").get<FiniteRing::Table>();
    mul = spec.at("mul").get<FiniteRing::Table>();
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("explicit ring tables: ") + e.what());
  }
  std::vector<std::string> labels;
  if (spec.contains("labels")) labels = spec.at("labels").get<std::vector<std::string>>();
  std::string tag = spec.value("tag", std::string("explicit"));
  return FiniteRing::from_tables(std::move(add), std::move(mul), std::move(tag), std::move(labels));
}

}  // namespace prerad
