#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prerad/construct.hpp"
#include "prerad/products.hpp"
#include "prerad/universe.hpp"

using namespace prerad;

namespace {

RingPtr ring(const std::string& s) { return make_ring(std::string_view(s)); }

// x in (A:B) iff every map M/B -> M/A kills x+B.
DynBitset brute_comult(const ModulePtr& m, const DynBitset& a, const DynBitset& b) {
  auto qa = quotient(Submodule(m, a)), qb = quotient(Submodule(m, b));
  DynBitset out(m->size());
  auto fs = oracle::homs(qb.module, qa.module);
  for (Elem x = 0; x < m->size(); ++x) {
    bool in = true;
    for (const auto& f : fs) in = in && f[qb.projection(x)] == 0;
    if (in) out.set(x);
  }
  return out;
}

// x in A box B iff every map M/B -> M sends x+B into A.
DynBitset brute_box(const ModulePtr& m, const DynBitset& a, const DynBitset& b) {
  auto qb = quotient(Submodule(m, b));
  DynBitset out(m->size());
  auto fs = oracle::homs(qb.module, m);
  for (Elem x = 0; x < m->size(); ++x) {
    bool in = true;
    for (const auto& f : fs) in = in && a.test(f[qb.projection(x)]);
    if (in) out.set(x);
  }
  return out;
}

DynBitset brute_tot(const ModulePtr& m, const DynBitset& n) {
  DynBitset out(m->size());
  out.set_all();
  auto qn = quotient(Submodule(m, n)).module;
  for (const auto& b : oracle::submodules(m)) {
    auto qb = quotient(Submodule(m, b)).module;
    auto fs = oracle::homs(qn, qb);
    bool only_zero = std::all_of(fs.begin(), fs.end(), [](const auto& f) {
      return std::all_of(f.begin(), f.end(), [](Elem y) { return y == 0; });
    });
    if (only_zero) out &= b;
  }
  return out;
}

std::vector<ModulePtr> small_members(const std::string& rs, std::size_t limit) {
  auto u = ModuleUniverse::build(ring(rs));
  std::vector<ModulePtr> out;
  for (std::size_t i = 0; i < u->size(); ++i)
    if (u->member(i)->size() <= limit) out.push_back(u->member(i));
  return out;
}

}  // namespace

TEST(Box, Examples) {
  auto r = ring("zn:4");
  auto z4 = parse_module(r, "Z4");
  auto two = parse_submodule(z4, "2");
  EXPECT_TRUE(box_product(two, two).is_whole());
  EXPECT_TRUE(box_product(two, Submodule::whole(z4)).is_whole());
  EXPECT_EQ(box_product(Submodule::zero(z4), two), two);
}

TEST(Comult, Examples) {
  auto r = ring("zn:4");
  auto z4 = parse_module(r, "Z4");
  auto two = parse_submodule(z4, "2");
  EXPECT_EQ(comultiplication(two, two), two);
  EXPECT_EQ(comultiplication(Submodule::zero(z4), two), two);
  for (const auto& m : small_members("zn:6", 36))
    for (const auto& n : m->lattice_sets()) EXPECT_TRUE(comultiplication(Submodule::whole(m), Submodule(m, n)).is_whole());
}

TEST(Totalizer, Examples) {
  auto r6 = ring("zn:6");
  auto m = parse_module(r6, "Z2+Z3");
  EXPECT_EQ(totalizer(parse_submodule(m, "[1,0]")), parse_submodule(m, "[0,1]"));
  EXPECT_TRUE(totalizer(Submodule::whole(m)).is_zero());
  auto z4 = parse_module(ring("zn:4"), "Z4");
  EXPECT_TRUE(totalizer(parse_submodule(z4, "2")).is_whole());
}

TEST(Products, MatchBruteForce) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    for (const auto& m : small_members(rs, 8)) {
      const auto& sets = m->lattice_sets();
      for (const auto& a : sets) {
        EXPECT_EQ(totalizer(Submodule(m, a)).elements(), brute_tot(m, a)) << rs;
        for (const auto& b : sets) {
          EXPECT_EQ(comultiplication(Submodule(m, a), Submodule(m, b)).elements(), brute_comult(m, a, b)) << rs;
          EXPECT_EQ(box_product(Submodule(m, a), Submodule(m, b)).elements(), brute_box(m, a, b)) << rs;
        }
      }
    }
  }
}

TEST(Products, MonotoneAndIntersection) {
  for (const auto& rs : {"zn:4", "zn:8", "product(zn:2,zn:3)"}) {
    for (const auto& m : small_members(rs, 16)) {
      const auto& sets = m->lattice_sets();
      for (const auto& a : sets)
        for (const auto& b : sets)
          for (const auto& c : sets) {
            Submodule A(m, a), B(m, b), C(m, c);
            if (b.is_subset_of(c)) EXPECT_TRUE(comultiplication(A, B).is_subset_of(comultiplication(A, C)));
            auto lhs = comultiplication(A, B & C);
            EXPECT_TRUE(lhs.is_subset_of(comultiplication(A, B) & comultiplication(A, C)));
          }
    }
  }
}

TEST(Products, TotalizerUniversalProperty) {
  for (const auto& rs : {"zn:4", "zn:6", "triangular:2:2"}) {
    for (const auto& m : small_members(rs, 16)) {
      for (const auto& n : m->lattice_sets()) {
        Submodule N(m, n);
        auto t = totalizer(N);
        EXPECT_TRUE(comultiplication(t, N).is_whole());
        for (const auto& b : m->lattice_sets()) {
          Submodule B(m, b);
          if (comultiplication(B, N).is_whole()) EXPECT_TRUE(t.is_subset_of(B));
        }
      }
    }
  }
}

TEST(Coprime, Examples) {
  for (const auto& rs : {"zn:6", "triangular:2:2"})
    for (const auto& s : simple_modules(ring(rs))) {
      auto v = coprime_verdict(s);
      EXPECT_TRUE(v.by_xi && v.by_box && v.by_comult && v.by_hom);
    }
  auto v = coprime_verdict(parse_module(ring("zn:2"), "Z2^2"));
  EXPECT_TRUE(v.by_xi && v.by_box && v.by_comult && v.by_hom);
  auto z4 = coprime_verdict(parse_module(ring("zn:4"), "Z4"));
  EXPECT_FALSE(z4.by_xi);
  EXPECT_FALSE(z4.by_box);
  EXPECT_TRUE(z4.by_comult);
  EXPECT_TRUE(z4.by_hom);
  ASSERT_TRUE(z4.xi_witness);
  EXPECT_EQ(z4.xi_witness->first.label(), "<2>");
  EXPECT_TRUE(coprime_verdict(FiniteModule::zero(ring("zn:4"))).zero);
}

TEST(Coprime, CriteriaMatchBruteForce) {
  for (const auto& rs : {"zn:4", "zn:6", "zn:8", "triangular:2:2"}) {
    for (const auto& m : small_members(rs, 8)) {
      if (m->is_zero()) continue;
      DynBitset all(m->size());
      all.set_all();
      bool xi = true, box = true, comult = true, hom = true;
      for (const auto& n : m->lattice_sets()) {
        if (n == all) continue;
        xi = xi && oracle::trace(quotient(Submodule(m, n)).module, m) == all;
        for (const auto& l : m->lattice_sets()) {
          if (l == all) continue;
          box = box && brute_box(m, l, n) != all;
          comult = comult && brute_comult(m, l, n) != all;
          auto fs = oracle::homs(quotient(Submodule(m, l)).module, quotient(Submodule(m, n)).module);
          hom = hom && fs.size() > 1;
        }
      }
      auto v = coprime_verdict(m);
      EXPECT_EQ(v.by_xi, xi) << rs;
      EXPECT_EQ(v.by_box, box) << rs;
      EXPECT_EQ(v.by_comult, comult) << rs;
      EXPECT_EQ(v.by_hom, hom) << rs;
      if (v.xi_witness) EXPECT_TRUE(xi_witness_holds(*v.xi_witness));
      if (v.box_witness) EXPECT_TRUE(box_witness_holds(*v.box_witness));
      if (v.comult_witness) EXPECT_TRUE(comult_witness_holds(*v.comult_witness));
      if (v.hom_witness) EXPECT_TRUE(hom_witness_holds(*v.hom_witness));
    }
  }
}
