#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prerad/cofirst.hpp"
#include "prerad/construct.hpp"
#include "prerad/products.hpp"

using namespace prerad;

namespace {

RingPtr ring(const std::string& s) { return make_ring(std::string_view(s)); }

UniversePtr universe(const std::string& s, std::size_t max_order = 16) {
  UniverseOptions o;
  o.max_order = max_order;
  return ModuleUniverse::build(ring(s), o);
}

const std::vector<std::string> kSigmas{"zero", "one", "rad", "soc", "trace(Z2)", "reject(Z2)", "ideal(2)", "ideal(3)",
                                       "trace(Z3)", "hat(rad)", "bar(soc)"};

// Fully invariant by the oracle's endomorphisms, superfluous by subset scan.
bool brute_dihollow(const ModulePtr& m) {
  DynBitset all(m->size());
  all.set_all();
  auto endos = oracle::homs(m, m);
  for (const auto& n : oracle::submodules(m)) {
    if (n == all) continue;
    bool fi = true;
    for (const auto& f : endos)
      for (Elem x = 0; x < m->size(); ++x) fi = fi && (!n.test(x) || n.test(f[x]));
    if (fi && !oracle::superfluous(m, n)) return false;
  }
  return true;
}

}  // namespace

TEST(CoFirst, SimpleModulesAreCoFirstAndSecond) {
  auto r = ring("zn:6");
  for (const auto& s : simple_modules(r))
    for (const auto& e : kSigmas) {
      auto sigma = parse_preradical(r, e);
      EXPECT_EQ(is_co_first(s, *sigma), Verdict::True) << e;
      EXPECT_EQ(is_second(s, *sigma), Verdict::True) << e;
    }
}

TEST(CoFirst, Z4Examples) {
  auto r = ring("zn:4");
  auto z4 = parse_module(r, "Z4");
  EXPECT_EQ(is_fully_co_first(z4, *parse_preradical(r, "ideal(2)")), Verdict::True);
  EXPECT_EQ(is_co_first(z4, *parse_preradical(r, "trace(Z2)")), Verdict::False);
  EXPECT_EQ(is_second(z4, *parse_preradical(r, "ideal(2)")), Verdict::False);
  EXPECT_EQ(is_second(parse_module(r, "Z2+Z4"), *Preradical::one()), Verdict::True);
}

TEST(CoFirst, ZeroModuleVerdict) {
  auto z = FiniteModule::zero(ring("zn:4"));
  EXPECT_EQ(is_co_first(z, *Preradical::one()), Verdict::Zero);
  EXPECT_EQ(is_fully_co_first(z, *Preradical::zero()), Verdict::Zero);
  EXPECT_EQ(is_second(z, *Preradical::rad()), Verdict::Zero);
  EXPECT_EQ(to_json(Verdict::Zero), "zero");
}

TEST(Dihollow, Examples) {
  EXPECT_TRUE(is_dihollow(parse_module(ring("zn:4"), "Z4")));
  EXPECT_FALSE(is_dihollow(parse_module(ring("zn:6"), "Z2+Z3")));
  for (const auto& s : simple_modules(ring("triangular:2:2"))) EXPECT_TRUE(is_dihollow(s));
}

TEST(Dihollow, MatchesBruteForce) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    auto u = universe(rs);
    for (std::size_t i = 0; i < u->size(); ++i)
      if (u->member(i)->size() <= 16) EXPECT_EQ(is_dihollow(u->member(i)), brute_dihollow(u->member(i))) << rs << " " << u->name(i);
  }
}

TEST(ClassTriple, Examples) {
  auto u = universe("zn:4");
  auto r = u->ring();
  auto zero = class_triple(assignment_of(*Preradical::zero(), *u), *u);
  EXPECT_EQ(zero.P.count(), u->size());
  EXPECT_EQ(zero.S.count(), u->size());
  auto one = class_triple(assignment_of(*Preradical::one(), *u), *u);
  EXPECT_EQ(one.P.count(), 1u);
  EXPECT_EQ(one.P_bar.count(), u->size());
  EXPECT_EQ(one.S.count(), u->size());

  auto two = class_triple(assignment_of(*parse_preradical(r, "ideal(2)"), *u), *u);
  EXPECT_EQ(two.P.count(), u->size());
  for (std::size_t i = 0; i < u->size(); ++i) {
    const auto& m = u->member(i);
    DynBitset twice(m->size());
    for (Elem x = 0; x < m->size(); ++x) twice.set(m->add(x, x));
    EXPECT_EQ(two.S.test(i), twice.count() == 1 || twice.count() == m->size()) << u->name(i);
  }
  // Z4 is co-first but not second for (2)
  auto z4 = *u->find_by_name("Z4");
  EXPECT_TRUE(two.P_bar.test(z4));
  EXPECT_FALSE(two.S.test(z4));
}

TEST(ClassTriple, Identities) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    auto u = universe(rs);
    std::vector<Assignment> all = enumerate_universe_preradicals(*u);
    for (const auto& a : all) {
      auto t = class_triple(a, *u);
      EXPECT_EQ(t.P_bar, t.P | t.T);
      EXPECT_EQ(t.S, t.T | t.F);
      EXPECT_TRUE(t.P.is_subset_of(t.P_bar));
      for (const auto& b : all)
        if (leq(a, b, *u)) EXPECT_TRUE(class_triple(b, *u).P.is_subset_of(t.P));
    }
  }
}

TEST(ClassTriple, UniverseAndModulePredicatesAgree) {
  auto u = universe("zn:6", 36);
  for (const auto& e : kSigmas) {
    auto sigma = parse_preradical(u->ring(), e);
    auto a = assignment_of(*sigma, *u);
    for (std::size_t i = 0; i < u->size(); ++i) {
      const auto& m = u->member(i);
      EXPECT_EQ(co_first(*u, i, a), is_co_first(m, *sigma)) << e;
      EXPECT_EQ(fully_co_first(*u, i, a), is_fully_co_first(m, *sigma)) << e;
      EXPECT_EQ(second(*u, i, a), is_second(m, *sigma)) << e;
    }
  }
}

TEST(Family, IntersectionOfMembers) {
  auto u = universe("zn:6", 36);
  auto family = enumerate_universe_preradicals(*u);
  for (std::size_t i = 0; i < u->size(); ++i) {
    bool all_fcf = true, all_cf = true;
    for (const auto& a : family) {
      all_fcf = all_fcf && fully_co_first(*u, i, a) != Verdict::False;
      all_cf = all_cf && co_first(*u, i, a) != Verdict::False;
    }
    EXPECT_EQ(family_fully_co_first(*u, i, family) != Verdict::False, all_fcf);
    EXPECT_EQ(family_co_first(*u, i, family) != Verdict::False, all_cf);
  }
}

TEST(Lemma5, IsotypicAndMixed) {
  auto u2 = universe("zn:2");
  auto v = *u2->find_by_name("Z2^2");
  EXPECT_EQ(family_co_first(*u2, v, enumerate_universe_preradicals(*u2)), Verdict::True);

  auto u6 = universe("zn:6", 36);
  auto r = u6->ring();
  auto m = parse_module(r, "Z2+Z3");
  EXPECT_EQ(is_co_first(m, *parse_preradical(r, "trace(Z2)")), Verdict::False);
  auto idx = *u6->find(m);
  std::size_t failing = 0;
  EXPECT_EQ(family_co_first(*u6, idx, enumerate_universe_preradicals(*u6), &failing), Verdict::False);
}

TEST(Tsvc1, StrictOnZ4) {
  auto u = universe("zn:4");
  for (const auto& i : u->ring()->two_sided_ideals()) {
    auto t = class_triple(assignment_of(*Preradical::ideal(u->ring(), i), *u), *u);
    EXPECT_TRUE(t.S.is_subset_of(t.P_bar));
  }
  auto t2 = class_triple(assignment_of(*parse_preradical(u->ring(), "ideal(2)"), *u), *u);
  EXPECT_NE(t2.S, t2.P_bar);
}
