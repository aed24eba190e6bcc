#include "doctest.h"

#include <cstdlib>
#include <set>

#include "chsym/group.hpp"
#include "chsym/induction.hpp"
#include "chsym/springer.hpp"

using namespace chsym;

namespace {

Symbol bip(const Partition& top, const Partition& bottom) {
  return bipartition_to_symbol(top, bottom);
}

}  // namespace

TEST_SUITE_BEGIN("induction");

TEST_CASE("product induction in the full group") {
  // W_1 x W_1 <= W_2
  VirtualCharacter v = induce_product_b(bip({1}, {}), bip({1}, {}));
  CHECK(v[bip({2}, {})] == 1);
  CHECK(v[bip({1, 1}, {})] == 1);
  CHECK(v.terms().size() == 2);

  VirtualCharacter w = induce_product_b(bip({1}, {}), bip({}, {1}));
  CHECK(w[bip({1}, {1})] == 1);
  CHECK(w.terms().size() == 1);

  // induction from the full group is the identity
  VirtualCharacter id = induce_product_b(bip({2, 1}, {1}), bip({}, {}));
  CHECK(id[bip({2, 1}, {1})] == 1);
  CHECK(id.terms().size() == 1);
}

TEST_CASE("rotation-subgroup product induction") {
  VirtualCharacter v = induce_product_d(bip({2}, {}).as_unordered(),
                                        bip({1, 1}, {}).as_unordered());
  CHECK(v[bip({3, 1}, {}).as_unordered()] == 1);
  CHECK(v[bip({2, 1, 1}, {}).as_unordered()] == 1);
  CHECK(v[bip({2}, {1, 1}).as_unordered()] == 1);
  CHECK(v.terms().size() == 3);

  // b = 0 factor: identity on labels
  VirtualCharacter id = induce_product_d(bip({2, 1}, {1}).as_unordered(),
                                         bip({}, {}).as_unordered());
  CHECK(id[bip({2, 1}, {1}).as_unordered()] == 1);
}

TEST_CASE("index-two induction") {
  VirtualCharacter v = induce_d_in_b(bip({1, 1}, {2}).as_unordered());
  CHECK(v[Symbol(BetaSet({1, 2}), BetaSet({0, 3}))] == 1);
  CHECK(v[Symbol(BetaSet({0, 3}), BetaSet({1, 2}))] == 1);
  CHECK(v.terms().size() == 2);

  Symbol deg = bip({1}, {1}).as_unordered().with_decoration(Decoration::Plus);
  VirtualCharacter w = induce_d_in_b(deg);
  CHECK(w[bip({1}, {1})] == 1);
  CHECK(w.terms().size() == 1);
}

TEST_CASE("twisted-subgroup induction readings disagree and the oracle "
          "confirms the mixed one") {
  Symbol A = bip({2}, {});      // ({2};{0})
  Symbol B = bip({1}, {});      // rank 1
  VirtualCharacter mixed = induce_h(A, B, HReading::Mixed);
  VirtualCharacter printed = induce_h(A, B, HReading::Printed);
  CHECK(mixed != printed);

  VerifyReport confirm = verify_against_symbols(SubgroupShape::H_twisted, 2, 2,
                                                HReading::Mixed);
  CHECK(confirm.ok());
  VerifyReport refute = verify_against_symbols(SubgroupShape::H_twisted, 2, 2,
                                               HReading::Printed);
  CHECK_FALSE(refute.ok());
}

TEST_CASE("oracle equivalence for every shape (a+b <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(verify_against_symbols(SubgroupShape::D_in_B, n, 0).ok());
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      CHECK(verify_against_symbols(SubgroupShape::BxB_in_B, a, b).ok());
      CHECK(verify_against_symbols(SubgroupShape::DxD_in_D, a, b).ok());
      CHECK(verify_against_symbols(SubgroupShape::DxB_in_B, a, b).ok());
      CHECK(verify_against_symbols(SubgroupShape::BxD_in_B, a, b).ok());
      if (a >= 1 && b >= 1)
        CHECK(verify_against_symbols(SubgroupShape::H_twisted, a, b).ok());
    }
  }
}

TEST_CASE("degree conservation under product induction") {
  // sum of mult * degree equals index times the degree of E (degrees via
  // the oracle)
  const GroupData& g4 = GroupData::get(4, GroupKind::B);
  for (const Symbol& A : b_irr_labels(2))
    for (const Symbol& B : b_irr_labels(2)) {
      VirtualCharacter v = induce_product_b(A, B);
      auto [a1, a2] = symbol_to_bipartition(A);
      auto [b1, b2] = symbol_to_bipartition(B);
      const GroupData& g2 = GroupData::get(2, GroupKind::B);
      Rat degE = wn_char(a1, a2, g2).at(g2.class_of(SignedPerm::identity(2))) *
                 wn_char(b1, b2, g2).at(g2.class_of(SignedPerm::identity(2)));
      Rat total(0);
      for (const auto& [label, mult] : v.terms()) {
        auto [x1, x2] = symbol_to_bipartition(label);
        total += Rat(mult) * wn_char(x1, x2, g4).at(g4.class_of(SignedPerm::identity(4)));
      }
      long long index = g4.order() / (GroupData::get(2, GroupKind::B).order() *
                                      GroupData::get(2, GroupKind::B).order());
      CHECK(total == Rat(index) * degE);
    }
}

TEST_CASE("every product-induction term is dominated by the odot label") {
  for (int a = 1; a + 1 <= 5; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (const Symbol& A : b_irr_labels(a))
        for (const Symbol& B : b_irr_labels(b)) {
          Symbol top = odot_pair(A, B);
          VirtualCharacter v = induce_product_b(A, B);
          CHECK(v[top] == 1);
          for (const auto& [label, mult] : v.terms()) {
            CHECK(dominance_leq(label.top(), top.top()));
            CHECK(dominance_leq(label.bottom(), top.bottom()));
          }
        }
}

TEST_CASE("d-minimal candidates for the rank-four example") {
  GroupContext ctx = GroupContext::from_relative(GroupType::C, 0, 4, 0);
  Symbol E = bip({1, 1}, {2}).as_unordered();
  Symbol trivial0 = bip({}, {});
  DMinimalResult res = d_minimal(E, trivial0, ctx);
  REQUIRE(res.candidates.size() == 2);
  std::set<Symbol> got(res.candidates.begin(), res.candidates.end());
  std::set<Symbol> want = {
      symbol_normalize(Symbol(BetaSet({1, 2}), BetaSet({0, 3}))),
      symbol_normalize(Symbol(BetaSet({0, 3}), BetaSet({1, 2})))};
  CHECK(got == want);
  CHECK(res.multiplicity == 1);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate->confirmed);
  CHECK(res.certificate->min_b == 4);
}

TEST_CASE("d-minimal trivial cases") {
  GroupContext b0 = GroupContext::from_relative(GroupType::B, 0, 1, 1);
  DMinimalResult triv = d_minimal(bip({1}, {}), bip({1}, {}), b0);
  REQUIRE(triv.candidates.size() == 1);
  CHECK(triv.candidates[0] == bip({2}, {}));
  REQUIRE(triv.certificate.has_value());
  CHECK(triv.certificate->confirmed);
  CHECK(triv.certificate->min_b == 0);

  // candidate refinement: only one of the two closed-form candidates is
  // minimal here
  GroupContext c0 = GroupContext::from_relative(GroupType::C, 0, 2, 1);
  DMinimalResult refined = d_minimal(bip({2}, {}).as_unordered(), bip({1}, {}), c0);
  REQUIRE(refined.candidates.size() == 1);
  CHECK(refined.candidates[0] == bip({3}, {}));
  REQUIRE(refined.certificate.has_value());
  CHECK(refined.certificate->confirmed);
}

TEST_CASE("d-minimal certificates across untwisted cases (a'+b' <= 4)") {
  std::vector<GroupContext> ctxs;
  for (int a1 = 0; a1 <= 4; ++a1)
    for (int b1 = 0; a1 + b1 <= 4; ++b1) {
      if (a1 + b1 == 0) continue;
      ctxs.push_back(GroupContext::from_relative(GroupType::B, 0, a1, b1));
      ctxs.push_back(GroupContext::from_relative(GroupType::B, 1, a1, b1));
      ctxs.push_back(GroupContext::from_relative(GroupType::C, 1, a1, b1, true));
      ctxs.push_back(GroupContext::from_relative(GroupType::C, 1, a1, b1, false));
      ctxs.push_back(GroupContext::from_relative(GroupType::D, 1, a1, b1));
      if (a1 != 1) ctxs.push_back(GroupContext::from_relative(GroupType::C, 0, a1, b1));
      if (a1 != 1) ctxs.push_back(GroupContext::from_relative(GroupType::D, 0, a1, b1));
    }
  for (const GroupContext& ctx : ctxs) {
    bool first_d = ctx.t == 0 && ctx.type != GroupType::B;
    bool second_d = ctx.t == 0 && ctx.type == GroupType::D;
    auto firsts = first_d ? d_irr_labels(ctx.a1) : b_irr_labels(ctx.a1);
    auto seconds = second_d ? d_irr_labels(ctx.b1) : b_irr_labels(ctx.b1);
    for (const Symbol& A : firsts)
      for (const Symbol& B : seconds) {
        DMinimalResult res = d_minimal(A, B, ctx);
        REQUIRE(res.certificate.has_value());
        CHECK(res.certificate->confirmed);
        if (ctx.t != 0 || ctx.type == GroupType::B)
          CHECK(res.candidates.size() == 1);
      }
  }
}

TEST_CASE("twisted candidate sets carry no certificate") {
  GroupContext ca = GroupContext::from_relative(GroupType::C, 0, 2, 1, true,
                                                TwistKind::GammaAxId);
  DMinimalResult res = d_minimal(bip({2}, {}).as_unordered(), bip({1}, {}), ca);
  CHECK_FALSE(res.certificate.has_value());
  CHECK(res.sign_known);
  CHECK(res.multiplicity == 1);
  CHECK(!res.candidates.empty());
  // decorated labels are not invariant under the twist
  CHECK_THROWS_AS(
      d_minimal(bip({1}, {1}).as_unordered().with_decoration(Decoration::Plus),
                bip({1}, {}), ca),
      std::invalid_argument);

  GroupContext dd = GroupContext::from_relative(GroupType::D, 0, 2, 2, true,
                                                TwistKind::GammaAxGammaB);
  DMinimalResult rd = d_minimal(bip({2}, {}).as_unordered(),
                                bip({1, 1}, {}).as_unordered(), dd);
  CHECK_FALSE(rd.certificate.has_value());
  CHECK(rd.candidates.size() >= 1);
}

TEST_CASE("twisted type-D multiplicity signs resolve to +-1") {
  GroupContext ctx =
      GroupContext::from_relative(GroupType::D, 0, 2, 2, true, TwistKind::GammaN);
  Symbol A = bip({2}, {}).as_unordered();
  Symbol B = bip({2}, {}).as_unordered();
  DMinimalResult res = d_minimal(A, B, ctx);
  CHECK_FALSE(res.sign_known);
  REQUIRE_FALSE(res.candidates.empty());
  long long sign = twisted_d_coset_multiplicity(
      A, B, res.candidates.front().without_decoration(), ctx.a, ctx.b);
  CHECK(std::abs(sign) == 1);

  GroupContext odd =
      GroupContext::from_relative(GroupType::D, 0, 3, 2, true, TwistKind::GammaN);
  Symbol A3 = bip({2, 1}, {}).as_unordered();
  DMinimalResult res3 = d_minimal(A3, B, odd);
  REQUIRE_FALSE(res3.candidates.empty());
  long long sign3 = twisted_d_coset_multiplicity(
      A3, B, res3.candidates.front().without_decoration(), odd.a, odd.b);
  CHECK(std::abs(sign3) == 1);
}

TEST_SUITE_END();
