#include <gtest/gtest.h>

#include <random>

#include "molien/lattice.hpp"
#include "molien/partitions.hpp"
#include "reference.hpp"

using namespace molien;

namespace {

std::vector<std::vector<int>> residues(const ZModSubgroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& e : g.elements()) out.push_back(e.components());
  return out;
}

std::vector<GroupSpec> builtin_specs() {
  return {families::symmetric(2),        families::symmetric(3),
          families::hyperoctahedral(2),  families::hyperoctahedral(3),
          families::demihyperoctahedral(2), families::demihyperoctahedral(3),
          families::dihedral(3),         families::dihedral(4),
          families::dihedral(5),         families::dihedral(6),
          families::g_de_e_n(1, 2, 2),   families::g_de_e_n(2, 2, 2),
          families::g_de_e_n(1, 3, 2),   families::g_de_e_n(2, 1, 2),
          families::g_de_e_n(2, 3, 2),   families::g2_example()};
}

}  // namespace

TEST(ZModVec, ReducesComponents) {
  ZModVec v(4, {5, -1, 8});
  EXPECT_EQ(v.components(), (std::vector<int>{1, 3, 0}));
  EXPECT_EQ(v.to_string(), "(1,3,0)");
}

TEST(ZModVec, Arithmetic) {
  ZModVec a(5, {1, 2}), b(5, {4, 4});
  EXPECT_EQ((a + b).components(), (std::vector<int>{0, 1}));
  EXPECT_EQ((-a).components(), (std::vector<int>{4, 3}));
  EXPECT_EQ(a.scaled(3).components(), (std::vector<int>{3, 1}));
  EXPECT_EQ(a.dot(b), (4 + 8) % 5);
}

TEST(ZModVec, RejectsBadShapes) {
  EXPECT_THROW(ZModVec(1, {0}), ValidationError);
  EXPECT_THROW(ZModVec(3, {}), ValidationError);
}

TEST(EnumerateSubgroup, ConstantVector) {
  auto h = enumerate_subgroup(2, 3, {ZModVec(2, {1, 1, 1})});
  EXPECT_EQ(residues(h), (std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 1}}));
  EXPECT_EQ(h.order(), 2u);
}

TEST(EnumerateSubgroup, EmptyGenerators) {
  auto h = enumerate_subgroup(4, 2, {});
  EXPECT_EQ(residues(h), (std::vector<std::vector<int>>{{0, 0}}));
}

TEST(EnumerateSubgroup, FullGroup) {
  auto h = enumerate_subgroup(2, 2, {ZModVec(2, {1, 0}), ZModVec(2, {0, 1})});
  EXPECT_EQ(h.order(), 4u);
}

TEST(EnumerateSubgroup, ClosedUnderAddition) {
  auto h = enumerate_subgroup(6, 2, {ZModVec(6, {2, 3})});
  EXPECT_EQ(h.order(), 6u);
  for (const auto& a : h.elements())
    for (const auto& b : h.elements()) EXPECT_TRUE(h.contains(a + b));
}

TEST(EnumerateSubgroup, CapacityCap) {
  Limits tight;
  tight.enumeration_cap = 100;
  EXPECT_THROW(enumerate_subgroup(5, 3, {}, tight), CapacityError);
  EXPECT_NO_THROW(enumerate_subgroup(5, 2, {}, tight));
}

TEST(EnumerateSubgroup, RejectsMismatchedGenerator) {
  EXPECT_THROW(enumerate_subgroup(2, 3, {ZModVec(2, {1, 1})}), ValidationError);
  EXPECT_THROW(enumerate_subgroup(2, 2, {ZModVec(3, {1, 1})}), ValidationError);
}

TEST(SnStable, Examples) {
  EXPECT_TRUE(is_sn_stable(enumerate_subgroup(2, 3, {ZModVec(2, {1, 1, 1})})));
  EXPECT_FALSE(is_sn_stable(enumerate_subgroup(2, 2, {ZModVec(2, {1, 0})})));
  EXPECT_TRUE(is_sn_stable(enumerate_subgroup(4, 2, {ZModVec(4, {1, 3})})));
}

TEST(Orthogonal, TrivialAndFull) {
  for (int n = 1; n <= 4; ++n) {
    auto trivial = families::symmetric(n).h;
    EXPECT_EQ(orthogonal(trivial).order(), 1u << n);
    auto full = families::hyperoctahedral(n).h;
    auto perp = orthogonal(full);
    EXPECT_EQ(residues(perp), (std::vector<std::vector<int>>{std::vector<int>(n, 0)}));
  }
}

TEST(Orthogonal, G2Example) {
  auto perp = orthogonal(families::g2_example().h);
  EXPECT_EQ(residues(perp), (std::vector<std::vector<int>>{
                                {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(Orthogonal, MatchesBruteForce) {
  for (const auto& spec : builtin_specs()) {
    auto brute = ref::brute_orthogonal(spec);
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(residues(orthogonal(spec.h)), brute) << spec.label;
  }
}

TEST(Orthogonal, Properties) {
  for (const auto& spec : builtin_specs()) {
    auto perp = orthogonal(spec.h);
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), spec.modulus, spec.n);
    EXPECT_EQ(mpz_class(spec.h.order()) * perp.order(), total) << spec.label;
    EXPECT_TRUE(is_sn_stable(perp)) << spec.label;
    auto back = orthogonal(perp);
    EXPECT_TRUE(spec.h.is_subgroup_of(back)) << spec.label;
    EXPECT_EQ(back.order(), spec.h.order()) << spec.label;
  }
}

TEST(OrthogonalAlpha, Examples) {
  auto b3 = orthogonal(families::hyperoctahedral(3).h);
  for (const auto& alpha : partitions_of(3)) {
    auto restricted = orthogonal_alpha(b3, alpha);
    EXPECT_EQ(restricted.order(), 1u);
    EXPECT_EQ(restricted.dim(), static_cast<std::size_t>(alpha.length()));
  }
  auto i5 = orthogonal(families::dihedral(5).h);
  EXPECT_EQ(orthogonal_alpha(i5, Partition({2})).order(), 5u);

  auto g2 = orthogonal(families::g2_example().h);
  EXPECT_EQ(residues(orthogonal_alpha(g2, Partition({1, 2}))),
            (std::vector<std::vector<int>>{{0, 0}, {0, 1}}));
  EXPECT_EQ(residues(orthogonal_alpha(g2, Partition({3}))),
            (std::vector<std::vector<int>>{{0}}));
}

TEST(OrthogonalAlpha, AllOnesIsPerp) {
  for (const auto& spec : builtin_specs()) {
    auto perp = orthogonal(spec.h);
    EXPECT_EQ(orthogonal_alpha(perp, Partition(std::vector<int>(spec.n, 1))), perp)
        << spec.label;
  }
}

TEST(Families, Orders) {
  auto g = families::g_de_e_n(1, 4, 2);
  EXPECT_EQ(g.modulus, 4);
  EXPECT_EQ(g.order_h, 4);
  EXPECT_EQ(g.order_g, 8);
  EXPECT_EQ(g.label, "G(4,4,2)");

  auto b2 = families::hyperoctahedral(2);
  EXPECT_EQ(b2.modulus, 2);
  EXPECT_EQ(b2.order_h, 4);
  EXPECT_EQ(b2.order_g, 8);

  auto s3 = families::symmetric(3);
  EXPECT_EQ(s3.order_h, 1);
  EXPECT_EQ(s3.order_g, 6);

  auto i4 = families::dihedral(4);
  EXPECT_EQ(i4.order_g, 8);
}

TEST(Families, GdeenSpecialCases) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(families::g_de_e_n(1, 2, n).h, families::demihyperoctahedral(n).h);
    EXPECT_EQ(families::g_de_e_n(2, 1, n).h, families::hyperoctahedral(n).h);
    for (int d = 2; d <= 3; ++d) {
      auto full = families::g_de_e_n(d, 1, n);
      mpz_class total;
      mpz_ui_pow_ui(total.get_mpz_t(), d, n);
      EXPECT_EQ(full.order_h, total);
    }
  }
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e) {
      if (d * e < 2) continue;
      auto g = families::g_de_e_n(d, e, 2);
      EXPECT_EQ(g.order_h, d * e * d);  // N^(n-1) d
      EXPECT_EQ(orthogonal(g.h).order(), static_cast<std::uint64_t>(e));
    }
}

TEST(Families, DihedralIsGNN2) {
  for (int N = 2; N <= 6; ++N)
    EXPECT_EQ(families::dihedral(N).h, families::g_de_e_n(1, N, 2).h);
}

TEST(Families, Validation) {
  EXPECT_THROW(families::symmetric(0), ValidationError);
  EXPECT_THROW(families::dihedral(1), ValidationError);
  EXPECT_THROW(families::g_de_e_n(0, 2, 2), ValidationError);
  EXPECT_THROW(families::custom(2, 2, {{1, 0}}), ValidationError);
  EXPECT_THROW(families::custom(3, 2, {{1, 3}}), ValidationError);
  EXPECT_THROW(families::custom(3, 2, {{1}}), ValidationError);
  EXPECT_EQ(families::custom(2, 3, {{1, 1, 1}}).h, families::g2_example().h);
}

TEST(Families, RequestDispatch) {
  FamilyRequest req;
  req.kind = FamilyRequest::Kind::g_de_e_n;
  req.d = 2;
  req.e = 3;
  req.n = 2;
  auto g = family_subgroup(req);
  EXPECT_EQ(g.modulus, 6);
  EXPECT_EQ(g.family, Family::g_de_e_n);
  EXPECT_EQ(family_name(g.family), "g-de-e-n");
}

TEST(PerpOrder, RandomStableSubgroups) {
  std::mt19937 rng(20240611);
  int built = 0;
  while (built < 50) {
    int N = 2 + static_cast<int>(rng() % 5);
    int n = 1 + static_cast<int>(rng() % 3);
    auto gens = ref::random_stable_generators(rng, N, n);
    auto spec = families::custom(N, n, gens);
    auto perp = orthogonal(spec.h);
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), N, n);
    EXPECT_EQ(mpz_class(spec.h.order()) * perp.order(), total);
    EXPECT_TRUE(is_sn_stable(perp));
    ++built;
  }
}
