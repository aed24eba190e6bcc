#include "doctest.h"

#include "chsym/group.hpp"

using namespace chsym;

TEST_SUITE_BEGIN("group");

TEST_CASE("orders and class counts") {
  CHECK(GroupData::get(1, GroupKind::B).order() == 2);
  CHECK(GroupData::get(2, GroupKind::B).order() == 8);
  CHECK(GroupData::get(2, GroupKind::B).num_classes() == 5);
  CHECK(GroupData::get(3, GroupKind::D).order() == 24);
  CHECK(GroupData::get(4, GroupKind::B).order() == 384);
  CHECK(GroupData::get(4, GroupKind::D).order() == 192);
}

TEST_CASE("class sizes sum to the order") {
  for (int n = 1; n <= 4; ++n)
    for (GroupKind k : {GroupKind::B, GroupKind::D}) {
      const GroupData& g = GroupData::get(n, k);
      long long total = 0;
      for (int c = 0; c < g.num_classes(); ++c) total += g.class_size(c);
      CHECK(total == g.order());
    }
}

TEST_CASE("murnaghan-nakayama values") {
  CHECK(mn_char({3}, {3}) == 1);
  CHECK(mn_char({3}, {1, 1, 1}) == 1);
  CHECK(mn_char({1, 1}, {2}) == -1);
  CHECK(mn_char({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_char({2, 2}, {2, 2}) == 2);
}

TEST_CASE("symmetric group orthogonality via MN (n <= 5)") {
  auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int n = 1; n <= 5; ++n) {
    auto parts = partitions_of(n);
    auto class_size = [&](const Partition& mu) {
      long long z = 1;
      std::map<int, int> mult;
      for (int part : mu) { z *= part; ++mult[part]; }
      for (auto [part, m] : mult) z *= factorial(m);
      return factorial(n) / z;
    };
    for (const Partition& la : parts)
      for (const Partition& nu : parts) {
        long long acc = 0;
        for (const Partition& mu : parts)
          acc += class_size(mu) * mn_char(la, mu) * mn_char(nu, mu);
        CHECK(acc == (la == nu ? factorial(n) : 0));
      }
  }
}

TEST_CASE("hyperoctahedral characters are irreducible and orthogonal") {
  for (int n = 1; n <= 4; ++n) {
    const GroupData& g = GroupData::get(n, GroupKind::B);
    std::vector<ClassFunction> chars;
    for (const Symbol& label : b_irr_labels(n)) {
      auto [la, mu] = symbol_to_bipartition(label);
      chars.push_back(wn_char(la, mu, g));
    }
    CHECK(static_cast<int>(chars.size()) == g.num_classes());
    for (size_t i = 0; i < chars.size(); ++i)
      for (size_t j = 0; j <= i; ++j)
        CHECK(inner(chars[i], chars[j]) == Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("known characters") {
  const GroupData& g2 = GroupData::get(2, GroupKind::B);
  // trivial character
  const ClassFunction& triv = wn_char({2}, {}, g2);
  for (int c = 0; c < g2.num_classes(); ++c) CHECK(triv.at(c) == Rat(1));
  // product of signs: trivial partition on the sign-twisted factor
  const ClassFunction& eps = wn_char({}, {2}, g2);
  for (int c = 0; c < g2.num_classes(); ++c)
    CHECK(eps.at(c) == Rat(sign_product(g2.class_rep(c))));
  // the determinant of the reflection representation
  const ClassFunction& det = wn_char({}, {1, 1}, g2);
  for (int c = 0; c < g2.num_classes(); ++c) {
    const SignedPerm& rep = g2.class_rep(c);
    Partition ct = cycle_type(rep);
    int sgn = 1;
    for (int part : ct)
      if (part % 2 == 0) sgn = -sgn;
    CHECK(det.at(c) == Rat(sgn * sign_product(rep)));
  }
  // degree of ((1);(1)) is 2
  const ClassFunction& mixed = wn_char({1}, {1}, g2);
  CHECK(mixed.at(g2.class_of(SignedPerm::identity(2))) == Rat(2));
}

TEST_CASE("restriction to the index-two subgroup splits iff degenerate") {
  for (int n = 2; n <= 4; ++n) {
    const GroupData& b = GroupData::get(n, GroupKind::B);
    const GroupData& d = GroupData::get(n, GroupKind::D);
    for (const Symbol& label : b_irr_labels(n)) {
      auto [la, mu] = symbol_to_bipartition(label);
      const ClassFunction& chi = wn_char(la, mu, b);
      ClassFunction res(&d);
      for (int c = 0; c < d.num_classes(); ++c)
        res[c] = chi.at(b.class_of(d.class_rep(c)));
      Rat norm = inner(res, res);
      CHECK(norm == Rat(la == mu ? 2 : 1));
    }
  }
}

TEST_CASE("split halves are irreducible and conjugate") {
  for (int n : {2, 4}) {
    const GroupData& d = GroupData::get(n, GroupKind::D);
    for (const Symbol& label : d_irr_labels(n)) {
      if (label.decoration() != Decoration::Plus) continue;
      const ClassFunction& plus = d_irr_char(label, n);
      const ClassFunction& minus =
          d_irr_char(label.with_decoration(Decoration::Minus), n);
      CHECK(inner(plus, plus) == Rat(1));
      CHECK(inner(minus, minus) == Rat(1));
      CHECK(inner(plus, minus) == Rat(0));
      // the two halves sum to the restriction of the degenerate character
      auto [la, mu] = symbol_to_bipartition(label.without_decoration().as_ordered());
      const GroupData& b = GroupData::get(n, GroupKind::B);
      const ClassFunction& full = wn_char(la, mu, b);
      for (int c = 0; c < d.num_classes(); ++c)
        CHECK(plus.at(c) + minus.at(c) == full.at(b.class_of(d.class_rep(c))));
    }
  }
}

TEST_CASE("full irreducible set for the rotation subgroup") {
  for (int n = 2; n <= 4; ++n) {
    const GroupData& d = GroupData::get(n, GroupKind::D);
    auto labels = d_irr_labels(n);
    long long sq = 0;
    for (const Symbol& label : labels) {
      const ClassFunction& chi = d_irr_char(label, n);
      Rat deg = chi.at(d.class_of(SignedPerm::identity(n)));
      sq += (deg * deg).numerator();
      CHECK(inner(chi, chi) == Rat(1));
    }
    CHECK(sq == d.order());
    CHECK(static_cast<int>(labels.size()) == d.num_classes());
  }
}

TEST_CASE("induction respects degrees and reciprocity") {
  const GroupData& g = GroupData::get(2, GroupKind::B);
  auto f = [](const SignedPerm&) { return Rat(1); };  // trivial of W_1 x W_1
  ClassFunction ind = induce_cf(SubgroupShape::BxB_in_B, 1, 1, f, g);
  CHECK(ind.at(g.class_of(SignedPerm::identity(2))) == Rat(2));  // index
  CHECK(inner(ind, wn_char({2}, {}, g)) == Rat(1));  // contains the trivial once
  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a <= n; ++a) {
      const GroupData& gn = GroupData::get(n, GroupKind::B);
      ClassFunction i2 = induce_cf(SubgroupShape::BxB_in_B, a, n - a,
                                   [](const SignedPerm&) { return Rat(1); }, gn);
      long long index = gn.order() / subgroup_order(SubgroupShape::BxB_in_B, a,
                                                    n - a, gn);
      CHECK(i2.at(gn.class_of(SignedPerm::identity(n))) == Rat(index));
    }
}

TEST_SUITE_END();
