#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prerad/construct.hpp"
#include "prerad/error.hpp"
#include "prerad/homs.hpp"
#include "prerad/preradical.hpp"
#include "prerad/products.hpp"
#include "prerad/universe_preradical.hpp"

using namespace prerad;

namespace {

RingPtr ring(const std::string& s) { return make_ring(std::string_view(s)); }

UniversePtr universe(const std::string& s, std::size_t max_order = 16) {
  UniverseOptions o;
  o.max_order = max_order;
  return ModuleUniverse::build(ring(s), o);
}

PreradicalPtr pr(const RingPtr& r, const std::string& text) { return parse_preradical(r, text); }

// A spread of expressions touching every constructor.
std::vector<std::string> sample_expressions(const std::string& ring_spec) {
  std::vector<std::string> out{"zero", "one", "rad", "soc", "trace(Z2)", "reject(Z2)", "hat(rad)", "bar(soc)",
                               "meet(soc,rad)", "join(soc,rad)", "compose(soc,rad)", "colon(soc,rad)"};
  if (ring_spec == "zn:4") {
    out.insert(out.end(), {"ideal(2)", "alpha(Z4,2)", "omega(Z4,2)", "gamma(Z2+Z4,[1,0])", "hat(reject(Z4))",
                           "bar(trace(Z2))", "colon(reject(Z2),trace(Z2))"});
  } else if (ring_spec == "zn:6") {
    out.insert(out.end(), {"ideal(2)", "ideal(3)", "trace(Z3)", "alpha(Z6,3)", "omega(Z6,2)", "gamma(Z2+Z6,[1,3])",
                           "join(trace(Z2),ideal(2))", "bar(alpha(Z6,2))"});
  }
  return out;
}

}  // namespace

TEST(Eval, RejectZ6OnZ2IsZero) {
  auto r = ring("zn:6");
  auto z2 = parse_module(r, "Z2");
  auto s = eval(*pr(r, "reject(Z6)"), z2);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.elements(), oracle::reject(parse_module(r, "Z6"), z2));
}

TEST(Eval, OneZeroIdeal) {
  auto r = ring("zn:4");
  auto z4 = parse_module(r, "Z4");
  EXPECT_TRUE(eval(*Preradical::one(), z4).is_whole());
  EXPECT_TRUE(eval(*Preradical::zero(), z4).is_zero());
  auto s = eval(*pr(r, "ideal(2)"), z4);
  EXPECT_EQ(s, parse_submodule(z4, "2"));
  // direct multiplication of the ideal into the module
  DynBitset direct(z4->size());
  for (Elem x = 0; x < z4->size(); ++x) direct.set(z4->act(*r->parse_element("2"), x));
  EXPECT_EQ(s.elements(), direct);
}

TEST(Eval, TraceAndRejectMatchBruteForce) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    auto u = universe(rs, 8);
    for (std::size_t i = 0; i < u->size(); ++i)
      for (std::size_t j = 0; j < u->size(); ++j) {
        const auto& m = u->member(i);
        const auto& x = u->member(j);
        EXPECT_EQ(eval(*Preradical::trace(m), x).elements(), oracle::trace(m, x)) << rs;
        EXPECT_EQ(eval(*Preradical::reject(m), x).elements(), oracle::reject(m, x)) << rs;
      }
  }
}

TEST(Eval, RingMismatch) {
  auto a = ring("zn:4"), b = ring("zn:6");
  EXPECT_THROW(eval(*pr(a, "trace(Z2)"), parse_module(b, "Z2")), RingMismatch);
}

TEST(Eval, AlphaRejectsNonFullyInvariant) {
  auto r = ring("zn:2");
  auto v = parse_module(r, "Z2^2");
  EXPECT_THROW(Preradical::alpha(parse_submodule(v, "[1,0]")), Error);
  EXPECT_THROW(Preradical::omega(parse_submodule(v, "[1,0]")), Error);
  EXPECT_NO_THROW(Preradical::gamma(parse_submodule(v, "[1,0]")));
}

TEST(Eval, ValuesAreFullyInvariant) {
  for (const auto& rs : {"zn:4", "zn:6"}) {
    auto u = universe(rs);
    for (const auto& e : sample_expressions(rs)) {
      auto sigma = pr(u->ring(), e);
      for (std::size_t i = 0; i < u->size(); ++i) {
        auto s = eval(*sigma, u->member(i));
        EXPECT_TRUE(is_fully_invariant(s)) << e << " on " << u->name(i);
      }
    }
  }
}

TEST(Classify, RejectIsRadical) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    auto u = universe(rs);
    for (std::size_t i = 0; i < u->size(); ++i) {
      auto f = classify(*Preradical::reject(u->member(i)), *u);
      EXPECT_TRUE(f.natural);
      EXPECT_TRUE(f.radical) << rs << " " << u->name(i);
    }
  }
}

TEST(Classify, IdealIsTRadical) {
  auto u = universe("zn:6");
  for (const auto& i : u->ring()->two_sided_ideals()) EXPECT_TRUE(classify(*Preradical::ideal(u->ring(), i), *u).t_radical);
}

TEST(Classify, SocleOverZ4) {
  auto u = universe("zn:4");
  auto f = classify(*Preradical::soc(), *u);
  EXPECT_TRUE(f.left_exact);
  EXPECT_FALSE(f.radical);
}

TEST(Compare, Bounds) {
  auto u = universe("zn:6");
  for (const auto& e : sample_expressions("zn:6")) {
    auto a = assignment_of(*pr(u->ring(), e), *u);
    EXPECT_TRUE(leq(assignment_of(*Preradical::zero(), *u), a, *u));
    EXPECT_TRUE(leq(a, assignment_of(*Preradical::one(), *u), *u));
  }
}

// 3 is an idempotent of Z6 with 3*Z6 = Z2, so (3)*U is the Z2-trace of U:
// the two agree on every member. (2) is the incomparable one.
TEST(Compare, TraceZ2VersusIdeals) {
  auto u = universe("zn:6", 36);
  auto r = u->ring();
  auto tr = assignment_of(*pr(r, "trace(Z2)"), *u);
  EXPECT_EQ(compare(tr, assignment_of(*pr(r, "ideal(3)"), *u), *u), Comparison::Equal);
  EXPECT_EQ(compare(tr, assignment_of(*pr(r, "ideal(2)"), *u), *u), Comparison::Incomparable);
  auto z2 = parse_module(r, "Z2");
  for (std::size_t i = 0; i < u->size(); ++i) {
    const auto& m = u->member(i);
    DynBitset three(m->size());
    for (Elem x = 0; x < m->size(); ++x) three.set(m->act(*r->parse_element("3"), x));
    EXPECT_EQ(oracle::trace(z2, m), three) << u->name(i);
  }
}

TEST(Compare, AlphaOmegaExtremality) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    auto u = universe(rs);
    auto all = enumerate_universe_preradicals(*u);
    for (std::size_t i = 0; i < u->size(); ++i) {
      const auto& m = u->member(i);
      const auto& sets = m->lattice_sets();
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (!m->fully_invariant_flags()[k]) continue;
        Submodule n(m, sets[k]);
        auto lo = assignment_of(*Preradical::alpha(n), *u);
        auto hi = assignment_of(*Preradical::omega(n), *u);
        for (const auto& rho : all) {
          if (rho[i] != k) continue;
          EXPECT_TRUE(leq(lo, rho, *u));
          EXPECT_TRUE(leq(rho, hi, *u));
        }
      }
    }
  }
}

TEST(Classes, Examples) {
  auto u = universe("zn:4");
  auto r = u->ring();
  auto t = torsion_class(assignment_of(*pr(r, "ideal(2)"), *u), *u);
  EXPECT_EQ(t.count(), 1u);
  EXPECT_TRUE(t.test(u->zero_index()));
  auto one = assignment_of(*Preradical::one(), *u);
  EXPECT_EQ(torsion_class(one, *u).count(), u->size());
  EXPECT_EQ(torsion_free_class(one, *u).count(), 1u);

  auto u6 = universe("zn:6", 36);
  auto t2 = torsion_class(assignment_of(*pr(u6->ring(), "trace(Z2)"), *u6), *u6);
  for (std::size_t i = 0; i < u6->size(); ++i) {
    const auto& m = u6->member(i);
    bool elementary2 = true;
    for (Elem x = 0; x < m->size(); ++x) elementary2 = elementary2 && m->add(x, x) == 0;
    EXPECT_EQ(t2.test(i), elementary2) << u6->name(i);
  }
}

TEST(Xi, Examples) {
  auto r4 = ring("zn:4");
  EXPECT_FALSE(xi_contains(parse_module(r4, "Z2"), parse_module(r4, "Z4")));
  auto m = parse_module(r4, "Z2+Z4");
  EXPECT_TRUE(xi_contains(m, m));
  auto r6 = ring("zn:6");
  EXPECT_TRUE(xi_contains(parse_module(r6, "Z6"), parse_module(r6, "Z2")));
}

TEST(Xi, AgreesWithExplicitEpimorphismSearch) {
  for (const auto& rs : {"zn:2", "zn:4", "zn:6", "zn:9"}) {
    auto u = universe(rs, std::max<std::size_t>(4, ring(rs)->size()));
    ASSERT_LE(u->size(), 6u) << rs;
    for (std::size_t i = 0; i < u->size(); ++i)
      for (std::size_t j = 0; j < u->size(); ++j) {
        const auto& m = u->member(i);
        const auto& k = u->member(j);
        // members here have composition length <= 2, so two copies suffice
        bool epi = k->is_zero();
        for (std::size_t copies = 1; copies <= 2 && !epi; ++copies)
          for (const auto& f : hom_set(direct_power(m, copies), k))
            if (f.is_surjective()) {
              epi = true;
              break;
            }
        EXPECT_EQ(xi_contains(m, k), epi) << rs << " " << u->name(i) << " -> " << u->name(j);
      }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_universe_preradicals(*universe("zn:2", 2)).size(), 2u);
  EnumerationOptions o;
  o.filter.t_radical = true;
  auto u = universe("zn:4");
  auto trads = enumerate_universe_preradicals(*u, o);
  ASSERT_EQ(trads.size(), 3u);
  std::set<Assignment> ideal_assignments;
  for (const auto& i : u->ring()->two_sided_ideals()) ideal_assignments.insert(assignment_of(*Preradical::ideal(u->ring(), i), *u));
  EXPECT_EQ(std::set<Assignment>(trads.begin(), trads.end()), ideal_assignments);
}

TEST(Enumerate, CapExceeded) {
  EnumerationOptions o;
  o.cap = 2;
  EXPECT_THROW(enumerate_universe_preradicals(*universe("zn:6"), o), BoundExceeded);
}

TEST(Enumerate, EveryAssignmentIsNatural) {
  auto u = universe("triangular:2:2");
  for (const auto& a : enumerate_universe_preradicals(*u)) EXPECT_TRUE(is_natural(a, *u));
}

TEST(Properties, AdditivityOnPairs) {
  for (const auto& rs : {"zn:4", "zn:6"}) {
    auto u = universe(rs, 8);
    for (const auto& e : sample_expressions(rs)) {
      auto sigma = pr(u->ring(), e);
      for (std::size_t i = 0; i < u->size(); ++i)
        for (std::size_t j = 0; j < u->size(); ++j) {
          auto ds = direct_sum({u->member(i), u->member(j)});
          auto whole = eval(*sigma, ds.module);
          auto a = eval(*sigma, u->member(i)), b = eval(*sigma, u->member(j));
          auto expected = ds.injections[0].image(a) + ds.injections[1].image(b);
          EXPECT_EQ(whole, expected) << e;
        }
    }
  }
}

TEST(Properties, HatAndBar) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    auto u = universe(rs);
    for (const auto& sigma : enumerate_universe_preradicals(*u)) {
      auto h = hat(sigma, *u), b = bar(sigma, *u);
      EXPECT_TRUE(is_idempotent(h, *u));
      EXPECT_TRUE(leq(h, sigma, *u));
      EXPECT_EQ(torsion_class(h, *u), torsion_class(sigma, *u));
      EXPECT_TRUE(is_radical(b, *u));
      EXPECT_TRUE(leq(sigma, b, *u));
    }
  }
}

TEST(Properties, HatAndBarOnExpressions) {
  auto u = universe("zn:4");
  for (const auto& e : sample_expressions("zn:4")) {
    auto sigma = pr(u->ring(), e);
    auto a = assignment_of(*sigma, *u);
    EXPECT_EQ(assignment_of(*Preradical::hat(sigma), *u), hat(a, *u)) << e;
    EXPECT_EQ(assignment_of(*Preradical::bar(sigma), *u), bar(a, *u)) << e;
  }
}

TEST(Properties, RejectColonReject) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    auto u = universe(rs);
    for (std::size_t i = 0; i < u->size(); ++i) {
      auto rej = Preradical::reject(u->member(i));
      EXPECT_EQ(assignment_of(*Preradical::colon(rej, rej), *u), assignment_of(*rej, *u));
    }
  }
}

TEST(Properties, TRadicalIffPreservesEpis) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    auto u = universe(rs);
    for (const auto& a : enumerate_universe_preradicals(*u)) EXPECT_EQ(is_t_radical(a, *u), preserves_epis(a, *u)) << rs;
  }
}

TEST(Syntax, TextAndJsonRoundTrip) {
  for (const auto& rs : {"zn:4", "zn:6"}) {
    auto u = universe(rs);
    for (const auto& e : sample_expressions(rs)) {
      auto sigma = pr(u->ring(), e);
      auto again = parse_preradical(u->ring(), sigma->to_string());
      EXPECT_EQ(again->to_string(), sigma->to_string());
      auto from_json = preradical_from_json(u->ring(), sigma->to_json());
      EXPECT_EQ(assignment_of(*again, *u), assignment_of(*sigma, *u)) << e;
      EXPECT_EQ(assignment_of(*from_json, *u), assignment_of(*sigma, *u)) << e;
    }
  }
}

TEST(Syntax, Errors) {
  auto r = ring("zn:4");
  EXPECT_THROW(pr(r, "frobnicate(Z2)"), Error);
  EXPECT_THROW(pr(r, "meet(soc"), Error);
  EXPECT_THROW(pr(r, "ideal(x)"), Error);
  EXPECT_THROW(pr(r, "trace(Z3)"), Error);
}
