#include <gtest/gtest.h>

#include "prerad/conat.hpp"
#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/universe_preradical.hpp"

using namespace prerad;

namespace {

UniversePtr universe(const std::string& s, std::size_t max_order = 16) {
  UniverseOptions o;
  o.max_order = max_order;
  return ModuleUniverse::build(make_ring(std::string_view(s)), o);
}

DynBitset where(const ModuleUniverse& u, const std::function<bool(const FiniteModule&)>& pred) {
  DynBitset c(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (pred(*u.member(i))) c.set(i);
  return c;
}

bool killed_by(const FiniteModule& m, long long k) {
  for (Elem x = 0; x < m.size(); ++x)
    if (m.times(k, x) != 0) return false;
  return true;
}

// Quotient-closed classes containing 0, by scanning every subset.
std::vector<DynBitset> brute_quotient_closed(const ModuleUniverse& u) {
  std::vector<DynBitset> out;
  const auto n = u.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    DynBitset c(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) c.set(i);
    if (!c.test(u.zero_index())) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!c.test(i)) continue;
      for (std::size_t k = 0; k < u.member(i)->lattice_sets().size(); ++k) closed = closed && c.test(u.quotient_class(i, k));
    }
    if (closed) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DynBitset brute_perp(const DynBitset& c, const ModuleUniverse& u) {
  DynBitset out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < u.member(i)->lattice_sets().size(); ++k) {
      auto q = u.quotient_class(i, k);
      if (q != u.zero_index() && c.test(q)) ok = false;
    }
    if (ok) out.set(i);
  }
  return out;
}

}  // namespace

TEST(Perp, Examples) {
  auto u = universe("zn:6");
  DynBitset all(u->size()), zero(u->size());
  all.set_all();
  zero.set(u->zero_index());
  EXPECT_EQ(perp(all, *u), zero);
  EXPECT_EQ(perp(zero, *u), all);
  auto twos = where(*u, [](const FiniteModule& m) { return killed_by(m, 2); });
  auto threes = where(*u, [](const FiniteModule& m) { return killed_by(m, 3); });
  EXPECT_EQ(perp(twos, *u), threes);

  auto u4 = universe("zn:4");
  auto semisimple = where(*u4, [](const FiniteModule& m) { return killed_by(m, 2); });
  DynBitset zero4(u4->size());
  zero4.set(u4->zero_index());
  EXPECT_EQ(perp(semisimple, *u4), zero4);
}

TEST(Perp, RejectsNonQuotientClosed) {
  auto u = universe("zn:4");
  DynBitset c(u->size());
  c.set(u->zero_index());
  c.set(*u->find_by_name("Z4"));
  EXPECT_THROW(perp(c, *u), SpecError);
}

TEST(Conatural, Examples) {
  auto u4 = universe("zn:4");
  auto semisimple = where(*u4, [](const FiniteModule& m) { return killed_by(m, 2); });
  EXPECT_FALSE(is_conatural(semisimple, *u4));
  auto u6 = universe("zn:6");
  EXPECT_TRUE(is_conatural(where(*u6, [](const FiniteModule& m) { return killed_by(m, 3); }), *u6));
  for (const auto& u : {u4, u6}) {
    DynBitset all(u->size()), zero(u->size());
    all.set_all();
    zero.set(u->zero_index());
    EXPECT_TRUE(is_conatural(all, *u));
    EXPECT_TRUE(is_conatural(zero, *u));
  }
}

TEST(Conatural, ClassesOfSmallRings) {
  EXPECT_EQ(conatural_classes(*universe("zn:4")).size(), 2u);
  EXPECT_EQ(conatural_classes(*universe("zn:2")).size(), 2u);
  auto u6 = universe("zn:6", 36);
  auto classes = conatural_classes(*u6);
  ASSERT_EQ(classes.size(), 4u);
  std::set<DynBitset> torsion;
  for (const auto& i : u6->ring()->two_sided_ideals())
    torsion.insert(torsion_class(assignment_of(*Preradical::ideal(u6->ring(), i), *u6), *u6));
  EXPECT_EQ(std::set<DynBitset>(classes.begin(), classes.end()), torsion);
  EXPECT_TRUE(check_boolean(classes, *u6).boolean());
}

TEST(QuotientClosed, MatchesSubsetScan) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "product(zn:2,zn:3)"}) {
    auto u = universe(rs);
    ASSERT_LE(u->size(), 16u);
    auto lib = quotient_closed_classes(*u);
    auto brute = brute_quotient_closed(*u);
    EXPECT_EQ(std::set<DynBitset>(lib.begin(), lib.end()), std::set<DynBitset>(brute.begin(), brute.end())) << rs;
    EXPECT_EQ(lib.size(), brute.size());
  }
  EXPECT_THROW(quotient_closed_classes(*universe("triangular:2:2"), 10), BoundExceeded);
}

TEST(Properties, PerpAntitoneAndTriple) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    auto u = universe(rs);
    auto qc = quotient_closed_classes(*u);
    for (const auto& c : qc) {
      auto p = perp(c, *u);
      EXPECT_EQ(p, brute_perp(c, *u));
      EXPECT_TRUE(is_quotient_closed(p, *u));
      EXPECT_EQ(perp(perp(p, *u), *u), p);
      EXPECT_EQ((c & p).count(), 1u);
    }
    if (qc.size() <= 40)
      for (const auto& a : qc)
        for (const auto& b : qc)
          if (a.is_subset_of(b)) EXPECT_TRUE(perp(b, *u).is_subset_of(perp(a, *u)));
  }
}

TEST(Properties, CNIffConatural) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2", "product(zn:2,zn:3)"}) {
    auto u = universe(rs);
    for (const auto& c : quotient_closed_classes(*u)) EXPECT_EQ(satisfies_cn(c, *u), is_conatural(c, *u)) << rs;
  }
}

TEST(Properties, ConaturalLatticeIsBoolean) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2", "matrix:2:2", "product(zn:2,zn:3)"}) {
    auto u = universe(rs);
    auto classes = conatural_classes(*u);
    EXPECT_TRUE(check_boolean(classes, *u).boolean()) << rs;
    for (const auto& c : classes) EXPECT_EQ(conatural_closure(c, *u), c);
  }
}

TEST(Dot, HasseDiagram) {
  auto u = universe("zn:6");
  auto dot = conat_dot(conatural_classes(*u), *u);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("c0 -> c1"), std::string::npos);
}
