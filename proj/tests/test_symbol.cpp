#include "doctest.h"

#include <set>

#include "chsym/symbol.hpp"

using namespace chsym;

namespace {

Symbol S(std::vector<int> t, std::vector<int> b) {
  return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)));
}

}  // namespace

TEST_SUITE_BEGIN("symbol");

TEST_CASE("defect and rank") {
  CHECK(symbol_defect(S({0, 1}, {0, 1})) == 0);
  CHECK(symbol_rank(S({0, 1}, {0, 1})) == 0);
  CHECK(symbol_defect(S({0, 1, 2}, {})) == 3);
  CHECK(symbol_rank(S({0, 1, 2}, {})) == 2);
  CHECK(symbol_defect(S({0, 1, 2, 3, 4}, {0, 1})) == 3);
  CHECK(symbol_rank(S({0, 1, 2, 3, 4}, {0, 1})) == 2);
}

TEST_CASE("defect and rank are shift-invariant (ranks <= 8)") {
  for (Family f : {Family::V0, Family::PhiPlus, Family::OmegaPlus})
    for (long long n = 0; n <= 8; ++n)
      for (const Symbol& s : family_members({f, n}))
        for (int k = 1; k <= 3; ++k) {
          Symbol sh = symbol_shift(s, k);
          CHECK(symbol_defect(sh) == symbol_defect(s));
          CHECK(symbol_rank(sh) == symbol_rank(s));
          CHECK(symbol_normalize(sh) == symbol_normalize(s));
        }
}

TEST_CASE("defect bijection") {
  // defect-0 source shifts the top row by d
  CHECK(symbol_equivalent(defect_bijection(S({1}, {0}), 3), S({0, 1, 2, 4}, {0})));
  CHECK(symbol_rank(defect_bijection(S({1}, {0}), 3)) == 3);
  // defect-1 source shifts the top row by d-1
  CHECK(defect_bijection(S({1}, {}), 3) == S({0, 1, 3}, {}));
  CHECK(symbol_rank(defect_bijection(S({1}, {}), 3)) == 3);
  // d equal to the source defect is the identity
  CHECK(defect_bijection(S({1}, {}), 1) == S({1}, {}));
}

TEST_CASE("defect bijection round-trips (ranks <= 6)") {
  for (long long n = 0; n <= 6; ++n)
    for (int src = 0; src <= 1; ++src)
      for (const Symbol& s :
           family_members({src == 0 ? Family::V0 : Family::V1, n}))
        for (int d = src; d <= 5; ++d) {
          Symbol image = defect_bijection(s, d);
          CHECK(symbol_defect(image) == d);
          CHECK(symbol_rank(image) == n + static_cast<long long>(d) * d / 4);
          CHECK(defect_bijection_inverse(image, src) == s);
        }
}

TEST_CASE("degenerate and cuspidal") {
  CHECK(is_degenerate(S({0, 2}, {0, 2})));
  CHECK_FALSE(is_degenerate(S({0, 2}, {1})));
  CHECK(is_cuspidal(S({0, 1, 2, 3}, {})));
  CHECK(is_cuspidal(S({0, 1, 2}, {})));
  CHECK(is_cuspidal(S({0, 1, 2, 3, 4}, {0, 1})));  // a shift of {0,1,2};{}
  CHECK_FALSE(is_cuspidal(S({0, 2}, {1})));
  CHECK_FALSE(is_cuspidal(S({0, 1}, {})));
  CHECK_FALSE(is_cuspidal(S({0}, {})));
}

TEST_CASE("similarity basics") {
  CHECK(similar(S({0, 2}, {1, 3}), S({0, 3}, {1, 2})));
  CHECK(similar(S({0, 2}, {1}), S({0, 2}, {1})));
  CHECK(similar(S({0, 2}, {1}), S({1, 2}, {0})));
  CHECK_FALSE(similar(S({0, 2}, {1}), S({0, 3}, {1})));  // unions differ
}

TEST_CASE("similarity across defects") {
  // {0,1,2} split with empty intersection: four odd-defect symbols
  // the class containing ({0,1};{2}): all odd-defect splits of {0,1,2}
  // with empty intersection (rank 2)
  Symbol base = S({0, 1}, {2});
  std::vector<Symbol> cls = similarity_class(base, {Family::PhiPlus, 2});
  CHECK(cls.size() == 4);
  std::set<Symbol> expect = {
      symbol_normalize(S({0, 1}, {2})), symbol_normalize(S({0, 2}, {1})),
      symbol_normalize(S({1, 2}, {0})), symbol_normalize(S({0, 1, 2}, {}))};
  CHECK(std::set<Symbol>(cls.begin(), cls.end()) == expect);
}

TEST_CASE("similarity is an equivalence with power-of-two classes (rank <= 5)") {
  for (long long n = 0; n <= 5; ++n) {
    LabelSetSpec spec{Family::PhiPlus, n};
    std::vector<Symbol> all = family_members(spec);
    for (const Symbol& s : all) CHECK(similar(s, s));
    for (const Symbol& s : all)
      for (const Symbol& u : all) {
        CHECK(similar(s, u) == similar(u, s));
        if (similar(s, u)) {
          std::vector<Symbol> cs = similarity_class(s, spec);
          std::vector<Symbol> cu = similarity_class(u, spec);
          CHECK(std::set<Symbol>(cs.begin(), cs.end()) ==
                std::set<Symbol>(cu.begin(), cu.end()));
        }
      }
    for (const Symbol& s : all) {
      size_t size = similarity_class(s, spec).size();
      CHECK((size & (size - 1)) == 0);  // power of two
    }
  }
}

TEST_CASE("degenerate decorated classes have cardinality one") {
  Symbol deg = S({0, 2}, {0, 2}).as_unordered().with_decoration(Decoration::Plus);
  LabelSetSpec spec{Family::OmegaPlus, symbol_rank(deg)};
  CHECK(family_contains(spec, deg));
  auto cls = similarity_class(deg, spec);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0] == symbol_normalize(deg));
}

TEST_CASE("sigma and a values") {
  CHECK(a_value(S({1, 2}, {0, 3})) == 3);
  CHECK(a_value(S({0, 1}, {0, 1})) == 0);
  CHECK(sigma_value(S({1, 2}, {0, 3})) == 4);
}

TEST_CASE("a value is representative-independent (ranks <= 6)") {
  for (long long n = 0; n <= 6; ++n)
    for (Family f : {Family::V0, Family::V1, Family::PhiPlus})
      for (const Symbol& s : family_members({f, n}))
        for (int k = 1; k <= 3; ++k)
          CHECK(a_value(symbol_shift(s, k)) == a_value(s));
}

TEST_CASE("family membership") {
  CHECK(family_contains({Family::PhiPlus, 2}, S({0, 1, 2}, {})));
  CHECK_FALSE(family_contains({Family::PhiPlus, 2}, S({0, 1}, {})));
  CHECK(family_contains({Family::PhiMinus, 1}, S({1}, {0})));
  CHECK_FALSE(family_contains({Family::PhiMinus, 2},
                              S({0, 2}, {0, 2})));  // degenerate excluded
  CHECK(family_contains({Family::OmegaPlus, 4}, S({0, 1, 2, 3}, {}).as_unordered()));
  CHECK(family_contains({Family::OmegaMinus, 1}, S({0, 1}, {}).as_unordered()));
  CHECK(family_contains({Family::Vbar0, 2},
                        S({0, 2}, {0, 2}).as_unordered().with_decoration(Decoration::Minus)));
}

TEST_CASE("negative-defect and 2-mod-4 families") {
  // ordered family with defects 0 mod 4: both orders are distinct members
  LabelSetSpec phim{Family::PhiMinus, 4};
  auto members = family_members(phim);
  bool saw_neg = false, saw_pos = false, saw_zero = false;
  for (const Symbol& s : members) {
    int d = symbol_defect(s);
    CHECK(d % 4 == 0);
    CHECK_FALSE(is_degenerate(symbol_normalize(s)));
    if (d < 0) saw_neg = true;
    if (d > 0) saw_pos = true;
    if (d == 0) saw_zero = true;
  }
  CHECK(saw_neg);
  CHECK(saw_pos);
  CHECK(saw_zero);
  // row swap maps the family to itself and preserves similarity classes
  for (const Symbol& s : members) {
    Symbol sw = symbol_normalize(s.swapped());
    CHECK(family_contains(phim, sw));
    CHECK(similar(s, sw));
  }

  LabelSetSpec om{Family::OmegaMinus, 2};
  auto omembers = family_members(om);
  CHECK_FALSE(omembers.empty());
  for (const Symbol& s : omembers) {
    CHECK(symbol_defect(s) % 4 == 2);
    CHECK_FALSE(s.ordered());
    size_t size = similarity_class(s, om).size();
    CHECK((size & (size - 1)) == 0);
  }
}

TEST_SUITE_END();
