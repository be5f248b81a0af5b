#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "womega/syntax.hpp"
#include "womega/testing/generators.hpp"

using namespace womega;

TEST(Syntax, Schemes) {
  EXPECT_TRUE(parse_scheme("[2 1 2 2 / 0 0 1]@2") == fixtures::figure_scheme());
  EXPECT_TRUE(parse_scheme("[2 1 2 2/0 0 1]@2") == fixtures::figure_scheme());
  EXPECT_TRUE(parse_scheme("[3]@3") == globe_scheme(3, 3));
  EXPECT_TRUE(parse_scheme("[1]@2") == globe_scheme(1, 2));
}

TEST(Syntax, Terms) {
  EXPECT_TRUE(parse_term("(e 3)") == Instruction::unit(3));
  EXPECT_TRUE(parse_term("(kappa (e 1) (e 1) [1]@2)") == sp(globe_scheme(1, 2)));
  const Instruction t = parse_term("(mu (e 1) [(kappa (e 0) (e 0) [1]@1)]@1)");
  EXPECT_FALSE(t.is_normal());
  EXPECT_EQ(to_string(normalize(t)), "(kappa (e 0) (e 0) [1]@1)");
  EXPECT_EQ(to_string(parse_term("(mu (kappa (e 0) (e 0) [1 1 / 0]@1) [(e 1) (e 1) / (e 0)]@1)")),
            "(mu (kappa (e 0) (e 0) [1 1 / 0]@1) [(e 1) (e 1) / (e 0)]@1)");
}

TEST(Syntax, ErrorsCarryColumns) {
  try {
    parse_term("(kappa (e 1) (e 1) [1 1 / 1]@2)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("column 20"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_term("(e 1"), SyntaxError);
  EXPECT_THROW(parse_term("(e 1) x"), SyntaxError);
  EXPECT_THROW(parse_term("(phi 1)"), SyntaxError);
  EXPECT_THROW(parse_scheme("[]@0"), SyntaxError);
  EXPECT_THROW(parse_scheme("[1]"), SyntaxError);
  EXPECT_THROW(parse_term("(kappa (e 1) (e 0) [1]@2)"), ValidationError);
  EXPECT_THROW(parse_term("(mu (e 1) [(e 0)]@1)"), ValidationError);
}

TEST(Syntax, CellDiagrams) {
  const GlobularSet g = fixtures::figure_set();
  StrictCatTable t(g);
  // Parsing only needs the carrier.
  const auto u = parse_cell_diagram("[alpha h beta gamma / b c j]@2", t);
  EXPECT_TRUE(u == fixtures::figure_diagram(g));
  EXPECT_EQ(to_string(u, t), "[alpha h beta gamma / b c j]@2");
  EXPECT_THROW(parse_cell_diagram("[alpha h gamma beta / b c j]@2", t), ValidationError);
  EXPECT_THROW(parse_cell_diagram("[omega]@2", t), SyntaxError);
}

TEST(Syntax, PrintParseRoundtrip) {
  womega::testing::Rng rng(9);
  womega::testing::TermGen gen(rng);
  for (int i = 0; i < 300; ++i) {
    const PastingScheme k = womega::testing::random_scheme(rng, i % 5, 14);
    EXPECT_TRUE(parse_scheme(to_string(k)) == k);
    // Literals omit the outer lower labels of a diagram, which a raw term may
    // carry unnormalized; the printed form and the normal form survive.
    const Instruction t = gen.bounded_term(i % 4, 12);
    const Instruction back = parse_term(to_string(t));
    EXPECT_EQ(to_string(back), to_string(t));
    EXPECT_TRUE(normalize(back) == normalize(t)) << to_string(t);
    const Instruction n = normalize(t);
    EXPECT_TRUE(parse_term(to_string(n)) == n);
  }
}
