#include "doctest.h"

#include <set>

#include "chsym/appendix.hpp"
#include "chsym/pairing.hpp"
#include "chsym/sheaf.hpp"

using namespace chsym;

namespace {

Symbol S(std::vector<int> t, std::vector<int> b) {
  return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)));
}

std::vector<int> entries(const SpringerSymbol& s) {
  std::vector<int> all = s.top();
  all.insert(all.end(), s.bottom().begin(), s.bottom().end());
  std::sort(all.begin(), all.end());
  return all;
}

// All class pairs (V, W) for the type at factor ranks (a, b), one base
// pair per class pair (admitting any aligned member).
struct ClassPair {
  std::vector<Symbol> V, W;
};

std::vector<ClassPair> class_pairs(GroupType type, long long a, long long b) {
  LabelSetSpec specV{type == GroupType::B ? Family::PhiPlus : Family::OmegaPlus, a};
  LabelSetSpec specW{type == GroupType::D ? Family::OmegaPlus : Family::PhiPlus, b};
  std::vector<ClassPair> out;
  std::set<Symbol> seenV;
  for (const Symbol& v : family_members(specV)) {
    if (seenV.count(v)) continue;
    auto clsV = similarity_class(v, specV);
    for (const Symbol& s : clsV) seenV.insert(s);
    std::set<Symbol> seenW;
    for (const Symbol& w : family_members(specW)) {
      if (seenW.count(w)) continue;
      auto clsW = similarity_class(w, specW);
      for (const Symbol& s : clsW) seenW.insert(s);
      out.push_back({clsV, clsW});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("pairing");

TEST_CASE("pair construction and case tags") {
  Symbol L0b = S({0, 1, 2, 3, 4}, {0, 1});
  SymbolPair pb = make_pair(L0b, L0b, GroupType::B);
  CHECK(pb.pcase == PairCase::B);
  CHECK(pb.t == 1);

  Symbol Lc = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  Symbol Xc = S({0, 1, 2, 3, 4, 5, 6}, {0, 1});
  SymbolPair pc = make_pair(Lc, Xc, GroupType::C);
  CHECK(pc.pcase == PairCase::C1);
  CHECK(pc.t == 1);

  CHECK_THROWS_AS(make_pair(S({0, 1, 2}, {}), S({0, 1, 2, 3, 4, 5, 6}, {}),
                            GroupType::B),
                  PairError);  // defects (3,7)
}

TEST_CASE("entrywise sums reproduce the listed sequences") {
  // type B, t=1
  Symbol L0 = S({0, 1, 2, 3, 4}, {0, 1});
  CHECK(entries(oplus(make_pair(L0, L0, GroupType::B, 2))) ==
        std::vector<int>{0, 0, 2, 2, 4, 6, 8});
  Symbol L1 = S({0, 1, 2, 3, 6}, {0, 1});
  CHECK(entries(oplus(make_pair(L1, L0, GroupType::B, 2))) ==
        std::vector<int>{0, 0, 2, 2, 4, 6, 10});
  // type C, d=4t+1, t=1
  Symbol Lc = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  Symbol Xc = S({0, 1, 2, 3, 4, 5, 6}, {0, 1});
  CHECK(entries(oplus(make_pair(Lc, Xc, GroupType::C, 2))) ==
        std::vector<int>{0, 1, 2, 3, 4, 6, 8, 10, 12});
  // type D, t=1
  Symbol Ld = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  CHECK(entries(oplus(make_pair(Ld, Ld, GroupType::D, 2))) ==
        std::vector<int>{0, 0, 2, 2, 4, 6, 8, 10});
}

TEST_CASE("crossed sums") {
  // orientations as written: make_pair keeps the given row order
  Symbol L = S({1, 2}, {0, 3});
  Symbol X = S({0, 2}, {1, 3});
  SymbolPair pair = make_pair(L, X, GroupType::D);
  SpringerSymbol box = boxplus(pair);
  CHECK(springer_equivalent(box, SpringerSymbol(SpringerKind::X, {0, 5}, {2, 5})));
  // the two sums are the two relative orientations of the unordered pair
  CHECK(springer_equivalent(oplus(pair),
                            SpringerSymbol(SpringerKind::X, {1, 4}, {1, 6})));

  // equal rows make the crossed and direct sums coincide
  Symbol diag = S({0, 2}, {0, 2}).as_unordered().with_decoration(Decoration::Plus);
  SymbolPair same = make_pair(diag, diag, GroupType::D);
  CHECK(entries(boxplus(same)) == entries(oplus(same)));

  SymbolPair pb = make_pair(S({0, 2}, {1}), S({0, 2}, {1}), GroupType::B);
  CHECK_THROWS_AS(boxplus(pb), std::invalid_argument);
}

TEST_CASE("equality conditions on the cuspidal pair") {
  Symbol L0 = S({0, 1, 2, 3, 4}, {0, 1});
  SymbolPair pair = make_pair(L0, L0, GroupType::B);
  CHECK(a_value(L0) + a_value(L0) == 2);
  CHECK(b_value(oplus(pair)) == 2);
  EqualityConditions conds = equality_conditions(pair);
  CHECK(conds.cond1);

  // all rows equal: cond1 and cond3 hold; the crossed sum is no longer
  // a distinct alternative, so cond2 is undefined
  Symbol diag = S({0, 2}, {0, 2}).as_unordered().with_decoration(Decoration::Plus);
  SymbolPair pd = make_pair(diag, diag, GroupType::D);
  EqualityConditions cd = equality_conditions(pd);
  CHECK(cd.cond1);
  CHECK_FALSE(cd.cond2.has_value());
  CHECK(cd.cond3);
  // a non-degenerate pair with distinct rows keeps both alternatives
  SymbolPair pnd = make_pair(S({1, 2}, {0, 3}).as_unordered(),
                             S({0, 3}, {1, 2}).as_unordered(), GroupType::D);
  CHECK(equality_conditions(pnd).cond2.has_value());
}

TEST_CASE("interval profiles of the cuspidal pairs") {
  Symbol L0b = S({0, 1, 2, 3, 4}, {0, 1});
  IntervalStructure st = interval_structure(make_pair(L0b, L0b, GroupType::B, 2));
  std::vector<int> sizes;
  for (const auto& iv : st.classes) sizes.push_back(iv.size());
  CHECK(sizes == std::vector<int>{2, 2, 1, 1, 1});
  CHECK(st.num_nondegenerate == 3);

  Symbol Lc = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  Symbol Xc = S({0, 1, 2, 3, 4, 5, 6}, {0, 1});
  IntervalStructure stc = interval_structure(make_pair(Lc, Xc, GroupType::C, 2));
  std::vector<int> csizes;
  for (const auto& iv : stc.classes) csizes.push_back(iv.size());
  CHECK(csizes == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(stc.num_nondegenerate == 5);
  int even_nondeg = 0;
  for (const auto& iv : stc.classes)
    if (!iv.degenerate && iv.size() % 2 == 0) ++even_nondeg;
  CHECK(even_nondeg == 1);

  Symbol Ld2 = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  IntervalStructure std_ = interval_structure(make_pair(Ld2, Ld2, GroupType::D, 2));
  CHECK(std_.num_nondegenerate == 4);
  CHECK(std_.num_degenerate == 2);
}

TEST_CASE("jset sizes of the cuspidal pairs") {
  Symbol L0b = S({0, 1, 2, 3, 4}, {0, 1});
  JSetResult jb = enumerate_jset(make_pair(L0b, L0b, GroupType::B));
  CHECK(jb.ell == 3);
  CHECK(jb.members.size() == 4);  // 2^{2t}

  Symbol Lc = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  Symbol Xc = S({0, 1, 2, 3, 4, 5, 6}, {0, 1});
  JSetResult jc = enumerate_jset(make_pair(Lc, Xc, GroupType::C));
  CHECK(jc.members.size() == 8);  // 2^{4t-1}

  Symbol Ld = S({0, 1, 2, 3, 4, 5}, {0, 1}).as_unordered();
  JSetResult jd = enumerate_jset(make_pair(Ld, Ld, GroupType::D));
  CHECK(jd.members.size() == 4);  // 2^{4t-2}
}

TEST_CASE("membership agrees with enumeration") {
  Symbol L0b = S({0, 1, 2, 3, 4}, {0, 1});
  JSetResult jb = enumerate_jset(make_pair(L0b, L0b, GroupType::B));
  CHECK(j_membership(L0b, L0b, GroupType::B));
  for (const auto& [lam, xi] : jb.members)
    CHECK(j_membership(lam, xi, GroupType::B));
  // a complement pair: count negatives over V x W
  LabelSetSpec spec{Family::PhiPlus, 2};
  auto V = similarity_class(L0b, spec);
  long long positive = 0;
  for (const Symbol& v : V)
    for (const Symbol& w : V)
      if (j_membership(v, w, GroupType::B)) ++positive;
  CHECK(positive == static_cast<long long>(jb.members.size()));
  CHECK(positive < static_cast<long long>(V.size() * V.size()));
}

TEST_CASE("pairs with defect gap two or more are rejected") {
  CHECK_FALSE(j_membership(S({0, 1, 2}, {}), S({0, 1, 2, 3, 4, 5, 6}, {}),
                           GroupType::B));
}

TEST_CASE("inequality and equivalence sweeps (ranks <= 5)") {
  long long checked = 0;
  for (GroupType type : {GroupType::B, GroupType::C, GroupType::D})
    for (long long a = 0; a <= 5; ++a)
      for (long long b = 0; a + b <= 5; ++b)
        for (const ClassPair& cp : class_pairs(type, a, b))
          for (const Symbol& v : cp.V)
            for (const Symbol& w : cp.W) {
              SymbolPair pair;
              try {
                pair = make_pair(v, w, type);
              } catch (const PairError&) {
                continue;
              }
              ++checked;
              long long asum = a_value(pair.lambda) + a_value(pair.xi);
              long long bsum = b_value(oplus(pair));
              CHECK(asum <= bsum);
              EqualityConditions conds = equality_conditions(pair);
              CHECK(conds.cond1 == (asum == bsum));
              CHECK(conds.cond1 == interleaving_condition(pair));
              if (conds.cond2.has_value()) {
                // where the crossed sum is a genuine alternative the three
                // conditions interlock
                CHECK(conds.cond3 == (conds.cond1 && *conds.cond2));
                if (conds.cond3)
                  CHECK(b_value(oplus(pair)) == b_value(boxplus(pair)));
              }
            }
  CHECK(checked > 500);
}

TEST_CASE("jset members share similar sums and satisfy the size law (a+b <= 6)") {
  for (GroupType type : {GroupType::B, GroupType::C, GroupType::D})
    for (long long a = 0; a <= 6; ++a)
      for (long long b = 0; a + b <= 6; ++b)
        for (const ClassPair& cp : class_pairs(type, a, b)) {
          // find an aligned base pair
          std::optional<SymbolPair> base;
          long long members_by_test = 0;
          for (const Symbol& v : cp.V)
            for (const Symbol& w : cp.W) {
              try {
                SymbolPair pair = make_pair(v, w, type);
                if (!base) base = pair;
                if (j_membership(v, w, type)) ++members_by_test;
              } catch (const PairError&) {
              }
            }
          if (!base) continue;
          JSetResult js = enumerate_jset(*base);
          CHECK(static_cast<long long>(js.members.size()) == members_by_test);
          if (js.within_formula_hypotheses)
            CHECK(static_cast<long long>(js.members.size()) == js.formula_size);
          // members lie in V x W and have pairwise-similar sums
          std::set<Symbol> inV(cp.V.begin(), cp.V.end());
          std::set<Symbol> inW(cp.W.begin(), cp.W.end());
          std::optional<SpringerSymbol> ref_sum;
          for (const auto& [lam, xi] : js.members) {
            CHECK(inV.count(symbol_normalize(lam)) == 1);
            CHECK(inW.count(symbol_normalize(xi)) == 1);
            SymbolPair p = make_pair(lam, xi, type);
            EqualityConditions conds = equality_conditions(p);
            SpringerSymbol sum = conds.cond1 ? oplus(p) : boxplus(p);
            if (!ref_sum) ref_sum = sum;
            CHECK(springer_similar(sum, *ref_sum));
          }
        }
}

TEST_CASE("no jset member satisfies the double-equality condition unless "
          "the interval structure is a single class") {
  for (GroupType type : {GroupType::C, GroupType::D})
    for (long long a = 0; a <= 4; ++a)
      for (long long b = 0; a + b <= 4; ++b)
        for (const ClassPair& cp : class_pairs(type, a, b))
          for (const Symbol& v : cp.V)
            for (const Symbol& w : cp.W) {
              SymbolPair pair;
              try {
                pair = make_pair(v, w, type);
              } catch (const PairError&) {
                continue;
              }
              // only the defect-(0,1)/(0,0) profile carries boxplus
              if (pair.t != 0) continue;
              if (!j_membership(v, w, type)) continue;
              EqualityConditions conds = equality_conditions(pair);
              if (!conds.cond3) continue;
              // the alternation argument forces every interval class to
              // pair off: rank zero, one class, or all classes even
              long long n = symbol_rank(v) + symbol_rank(w);
              IntervalStructure st = interval_structure(pair);
              bool all_even = true;
              for (const auto& iv : st.classes)
                if (iv.size() % 2 != 0) all_even = false;
              CHECK((n == 0 || st.classes.size() == 1 || all_even));
            }
}

TEST_SUITE_END();
