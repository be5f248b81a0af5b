#include <gtest/gtest.h>

#include "womega/equiv.hpp"
#include "womega/testing/categories.hpp"
#include "womega/testing/oracles.hpp"

using namespace womega;
using namespace womega::testing;

namespace {

TablePtr table(const FinCat& c) { return share(to_table(c)); }

// Objects to objects by index, arrows to the images of their endpoints'
// identity: only usable when the source has identities only.
CellMap on_objects(TablePtr A, TablePtr B, const std::vector<int>& objects) {
  return tabulate_map(A, B, [&](CellRef c) {
    if (c.dim == 0) return CellRef{0, objects[static_cast<std::size_t>(c.index)]};
    return B->lift(CellRef{0, objects[static_cast<std::size_t>(A->boundary(c, 0, Side::source).index)]}, c.dim);
  });
}

}  // namespace

TEST(Invertible, IsomorphismPair) {
  const TablePtr I = table(walking_iso());
  const InvertibleSet X(I);
  EXPECT_EQ(X.members(1).size(), 4u);
  for (CellRef f : I->cells(1)) {
    EXPECT_TRUE(X.contains(f));
    const auto w = X.witness(f);
    ASSERT_TRUE(w);
    EXPECT_EQ(I->compose_same(f, w->inverse, 0), I->identity_of(I->src(f)));
    EXPECT_EQ(w->p, I->lift(I->src(f), 2));
  }
}

TEST(Invertible, IdempotentIsNotInvertible) {
  const TablePtr M = table(*generated_category({2}, {{0, 0, {0, 0}}}, 4));
  ASSERT_EQ(M->count(1), 2);
  const InvertibleSet X(M);
  EXPECT_TRUE(X.contains(M->identity_of(M->cells(0)[0])));
  EXPECT_FALSE(X.contains(M->cells(1)[1]));
  EXPECT_FALSE(is_iso(*M, M->cells(1)[1]));
}

TEST(Invertible, IdentitiesAndRelation) {
  const TablePtr A = table(walking_arrow());
  const TablePtr I = table(walking_iso());
  const InvertibleSet XA(A), XI(I);
  for (CellRef x : A->cells(0)) {
    EXPECT_TRUE(XA.contains(A->identity_of(x)));
    EXPECT_TRUE(XA.sim(x, x));
  }
  EXPECT_FALSE(XA.contains(A->cells(1)[2]));
  EXPECT_FALSE(XA.sim(A->cells(0)[0], A->cells(0)[1]));
  EXPECT_TRUE(XI.sim(I->cells(0)[0], I->cells(0)[1]));
  EXPECT_TRUE(isomorphic(*I, I->cells(0)[0], I->cells(0)[1]));
  // Formal cells above the truncation are invertible.
  EXPECT_TRUE(XA.contains(A->lift(A->cells(1)[2], 2)));
  // One pass removes the arrow, the next confirms the fixed point.
  EXPECT_EQ(XA.iterations(), 2);
}

TEST(Invertible, TwoCategory) {
  const TablePtr Z = share(suspended_cyclic(3));
  const InvertibleSet X(Z);
  for (CellRef c : Z->cells(2)) EXPECT_TRUE(X.contains(c));
  EXPECT_TRUE(X.contains(Z->cells(1)[0]));
  const TablePtr T = share(suspended_truncated(3));
  const InvertibleSet Y(T);
  int members = 0;
  for (CellRef c : T->cells(2)) members += Y.contains(c) ? 1 : 0;
  EXPECT_EQ(members, 1);
}

TEST(EssSurjective, IdentityAndFolkBullets) {
  const TablePtr A = table(walking_arrow());
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(ess_surjective(identity_map(A), n).holds);
    EXPECT_TRUE(ess_injective(identity_map(A), n).holds);
  }
  // The discrete category on two objects inside the walking arrow: not full.
  const TablePtr D = table(*generated_category({1, 1}, {}, 2));
  const CellMap inc = on_objects(D, A, {0, 1});
  const Verdict v = ess_surjective(inc, 2);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.level, 1);
  EXPECT_FALSE(v.trace.empty());
  EXPECT_TRUE(ess_surjective(inc, 0).holds);
  EXPECT_FALSE(folk_equivalence(inc).full);
}

TEST(EssInjective, CollapseAndGroupoids) {
  const TablePtr A = table(walking_arrow());
  const TablePtr P = table(point_category());
  const Verdict v = ess_injective(constant_map(A, P, {0, 0}), 2);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.level, 0);
  const TablePtr I = table(walking_iso());
  EXPECT_TRUE(ess_injective(constant_map(I, P, {0, 0}), 3).holds);
  const TablePtr G = table(cyclic_group(3));
  EXPECT_TRUE(ess_injective(identity_map(G), 3).holds);
}

TEST(WeakEquivalence, FolkExamples) {
  const TablePtr P = table(point_category());
  const TablePtr I = table(walking_iso());
  const TablePtr A = table(walking_arrow());
  EXPECT_TRUE(is_weak_equivalence(StrictFunctor(constant_map(P, I, {0, 1}))).weak_equivalence);
  EXPECT_TRUE(is_weak_equivalence(StrictFunctor(constant_map(I, P, {0, 0}))).weak_equivalence);
  EXPECT_TRUE(is_weak_equivalence(StrictFunctor(identity_map(A))).weak_equivalence);
  const EquivReport r = is_weak_equivalence(StrictFunctor(constant_map(P, A, {0, 0})));
  EXPECT_FALSE(r.weak_equivalence);
  EXPECT_EQ(r.surj.level, 0);
  // Walking arrow into the walking isomorphism.
  const StrictFunctor ai(tabulate_map(A, I, [&](CellRef c) {
    if (c.dim == 0) return c;
    return I->cells(1)[static_cast<std::size_t>(c.index)];
  }));
  EXPECT_FALSE(is_weak_equivalence(ai).weak_equivalence);
  EXPECT_FALSE(folk_equivalence(ai).equivalence());
  // A projection off a product with the walking isomorphism lifts on the nose.
  const TablePtr AI = share(product(*A, *I));
  const StrictFunctor p(projection(AI, A, I, 0));
  EXPECT_TRUE(is_weak_equivalence(p).weak_equivalence);
  EXPECT_TRUE(reflects_invertibles(p).holds);
}

TEST(WeakEquivalence, TwoOutOfThree) {
  const TablePtr P = table(point_category());
  const TablePtr I = table(walking_iso());
  const StrictFunctor f(constant_map(P, I, {0, 0})), g(constant_map(I, P, {0, 0}));
  const HarnessReport h = two_of_three(f, g);
  EXPECT_TRUE(h.consistent());
  EXPECT_TRUE(h["f"].weak_equivalence && h["g"].weak_equivalence && h["gf"].weak_equivalence);
  const HarnessReport k = two_of_three(g, f);
  EXPECT_TRUE(k.consistent());
  EXPECT_TRUE(k["gf"].weak_equivalence);
  EXPECT_THROW(two_of_three(f, f), ValidationError);
}

TEST(Retract, ProductRetract) {
  const TablePtr A = table(walking_arrow());
  const TablePtr I = table(walking_iso());
  const TablePtr P = table(point_category());
  const TablePtr AI = share(product(*A, *I)), PI = share(product(*P, *I));
  const CellMap f = constant_map(A, P, {0, 0});
  const RetractDiagram d{f,
                         product_map(f, identity_map(I), AI, PI),
                         slice_left(A, I, AI, {0, 0}),
                         slice_left(P, I, PI, {0, 0}),
                         projection(AI, A, I, 0),
                         projection(PI, P, I, 0)};
  EXPECT_TRUE(retract_violations(d, 2).empty());
}
