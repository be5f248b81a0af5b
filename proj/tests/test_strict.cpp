#include <gtest/gtest.h>

#include "womega/algebra.hpp"
#include "womega/equiv.hpp"
#include "womega/strict.hpp"
#include "womega/testing/categories.hpp"
#include "womega/testing/oracles.hpp"

using namespace womega;
using namespace womega::testing;

namespace {

Instruction e(int n) { return Instruction::unit(n); }

// The arrow a -> c of the poset a < b < c.
TablePtr poset3() { return share(to_table(*generated_category({1, 1, 1}, {{0, 1, {0}}, {1, 2, {0}}}, 10))); }

}  // namespace

TEST(StrictTable, ThinCategoryEvaluation) {
  const TablePtr P = poset3();
  ASSERT_EQ(P->count(1), 6);
  std::optional<CellRef> f, g, ac;
  for (CellRef x : P->cells(1)) {
    if (P->src(x).index == 0 && P->tgt(x).index == 1) f = x;
    if (P->src(x).index == 1 && P->tgt(x).index == 2) g = x;
    if (P->src(x).index == 0 && P->tgt(x).index == 2) ac = x;
  }
  ASSERT_TRUE(f && g && ac);
  const auto fg = validate_diagram(*P, validate_scheme({1, 1}, {0}, 1), {*f, *g}, {P->tgt(*f)});
  EXPECT_EQ(P->eval(comp_instr(1, 1, 0, 1), fg), *ac);
  EXPECT_EQ(compose(*P, *f, *g, 0, 1), *ac);
}

TEST(StrictTable, BracketingsAgree) {
  const StrictCatTable t = to_table(walking_iso());
  for (CellRef f : t.cells(1))
    for (CellRef g : t.cells(1))
      for (CellRef h : t.cells(1)) {
        if (t.tgt(f) != t.src(g) || t.tgt(g) != t.src(h)) continue;
        const auto u = validate_diagram(t, validate_scheme({1, 1, 1}, {0, 0}, 1), {f, g, h}, {t.tgt(f), t.tgt(g)});
        const Instruction l = compose_instr(comp_instr(1, 1, 0, 1), validate_diagram(InstructionHost{}, validate_scheme({1, 1}, {0}, 1),
                                                                                      {comp_instr(1, 1, 0, 1), e(1)}, {e(0)}));
        const Instruction r = compose_instr(comp_instr(1, 1, 0, 1), validate_diagram(InstructionHost{}, validate_scheme({1, 1}, {0}, 1),
                                                                                      {e(1), comp_instr(1, 1, 0, 1)}, {e(0)}));
        EXPECT_EQ(t.eval(l, u), t.eval(r, u));
        EXPECT_EQ(t.eval(l, u), right_fold_eval(t, u));
      }
}

TEST(StrictTable, InterchangeGrid) {
  const StrictCatTable t = codiscrete(cyclic_group(2));
  // A 2x2 grid of 2-cells evaluated row-first and column-first. Each column
  // is a vertical pair f => g => h of the two arrows: 2^3 choices.
  int grids = 0;
  for (CellRef a : t.cells(2))
    for (CellRef b : t.cells(2))
      for (CellRef c : t.cells(2))
        for (CellRef d : t.cells(2)) {
          if (!t.composable(a, b, 1) || !t.composable(c, d, 1) || !t.composable(a, c, 0) ||
              !(t.boundary(b, 0, Side::target) == t.boundary(d, 0, Side::source)))
            continue;
          const CellRef rows = compose(t, compose(t, a, b, 1, 2), compose(t, c, d, 1, 2), 0, 2);
          const CellRef cols = compose(t, compose(t, a, c, 0, 2), compose(t, b, d, 0, 2), 1, 2);
          EXPECT_EQ(rows, cols);
          const auto grid = validate_diagram(t, validate_scheme({2, 2, 2, 2}, {1, 0, 1}, 2), {a, b, c, d},
                                             {t.tgt(a), t.boundary(b, 0, Side::target), t.tgt(c)});
          EXPECT_EQ(t.eval(sp(grid.shape()), grid), rows);
          EXPECT_EQ(right_fold_eval(t, grid), rows);
          ++grids;
        }
  EXPECT_EQ(grids, 64);
}

TEST(StrictTable, Validation) {
  EXPECT_TRUE(validate_strict_table(to_table(cyclic_group(4))).ok());
  EXPECT_TRUE(validate_strict_table(to_table(point_category())).ok());
  EXPECT_TRUE(validate_strict_table(raise(to_table(point_category()), 3)).ok());
  EXPECT_TRUE(validate_strict_table(suspended_cyclic(3)).ok());
  EXPECT_TRUE(validate_strict_table(codiscrete(walking_arrow())).ok());

  StrictCatTable broken = to_table(cyclic_group(3));
  const CellRef a = broken.cells(1)[1], b = broken.cells(1)[2];
  ASSERT_NE(broken.identity_of(broken.cells(0)[0]), a);
  ASSERT_NE(broken.identity_of(broken.cells(0)[0]), b);
  broken.set_composite(0, a, a, a.index);
  const TableReport r = validate_strict_table(broken);
  ASSERT_FALSE(r.ok());
  bool named_triple = false;
  for (const auto& v : r.violations) named_triple = named_triple || v.find("associativity fails for (") != std::string::npos;
  EXPECT_TRUE(named_triple) << r.violations.front();
}

TEST(StrictTable, IdentitiesAboveTruncation) {
  const StrictCatTable t = to_table(walking_arrow());
  const CellRef x = t.cells(0)[0];
  const CellRef i3 = identity(t, x, 3);
  EXPECT_TRUE(t.formal(i3));
  EXPECT_EQ(i3, t.identity_of(t.identity_of(t.identity_of(x))));
  EXPECT_EQ(t.boundary(i3, 0, Side::source), x);
  EXPECT_EQ(t.boundary(i3, 0, Side::target), x);
  EXPECT_EQ(t.boundary(i3, 2, Side::source), identity(t, x, 2));
  EXPECT_EQ(t.name(i3), "id(id(" + t.name(t.identity_of(x)) + "))");
  const CellRef f = t.cells(1)[2];
  EXPECT_EQ(compose(t, f, identity(t, t.tgt(f), 1), 0, 1), f);
}

TEST(HomTable, OfSuspension) {
  const TablePtr X = share(suspended_cyclic(3));
  const CellRef star = X->cells(0)[0];
  const HomTable H(X, star, star);
  EXPECT_EQ(H.table().truncation(), 1);
  EXPECT_EQ(H.table().count(0), 1);
  EXPECT_EQ(H.table().count(1), 3);
  EXPECT_TRUE(validate_strict_table(H.table()).ok());
  for (int d = 0; d <= 2; ++d)
    for (CellRef z : H.table().cells(d)) EXPECT_EQ(H.to_parent(identity(H.table(), z, d + 1)), identity(*X, H.to_parent(z), d + 2));
  // Invertibility transfers between the hom and the parent.
  const InvertibleSet inX(X), inH(H.table_ptr());
  for (CellRef z : H.table().cells(1)) EXPECT_EQ(inH.contains(z), inX.contains(H.to_parent(z)));
}

TEST(Whisker, FunctorialityAndEssentialSurjectivity) {
  const TablePtr I = share(raise(to_table(walking_iso()), 2));
  const TablePtr Z = share(suspended_cyclic(2));
  const TablePtr X = share(product(*I, *Z));
  const StrictFunctor P(projection(X, I, Z, 0));
  const InvertibleSet inX(X);
  for (CellRef u : X->cells(1))
    for (CellRef z : X->cells(0)) {
      const CellRef x = X->src(u), y = X->tgt(u);
      const HomTable from(X, y, z), to(X, x, z);
      const CellMap w = whisker(*X, u, z, WhiskerSide::left, from, to);
      const HomTable pfrom(I, P(y), P(z)), pto(I, P(x), P(z));
      const CellMap pw = whisker(*I, P(u), P(z), WhiskerSide::left, pfrom, pto);
      EXPECT_TRUE(same_map(compose_maps(w, induced_map(P, to, pto)), compose_maps(induced_map(P, from, pfrom), pw)));
      for (int d = 0; d <= from.table().truncation(); ++d)
        for (CellRef c : from.table().cells(d)) {
          EXPECT_EQ(w(c).dim, c.dim);
          EXPECT_EQ(to.to_parent(w(c)).dim, c.dim + 1);
        }
      if (inX.contains(u)) {
        EXPECT_TRUE(ess_surjective(w, verdict_cap(w)).holds);
        EXPECT_TRUE(ess_injective(w, verdict_cap(w)).holds);
      }
    }
}

TEST(StrictFunctor, RejectsNonFunctors) {
  const TablePtr A = share(to_table(walking_arrow()));
  const TablePtr I = share(to_table(walking_iso()));
  // Send the arrow to the identity while separating its endpoints.
  EXPECT_THROW(StrictFunctor(tabulate_map(A, I, [&](CellRef c) {
                 if (c.dim == 0) return c;
                 return I->identity_of(I->cells(0)[0]);
               })),
               ValidationError);
  EXPECT_NO_THROW(StrictFunctor(identity_map(A)));
}
