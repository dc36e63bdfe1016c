#include <gtest/gtest.h>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

std::vector<FamilySpec> family_specs() {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= 8; ++n) out.push_back(make_spec(Family::A, n));
  for (int n = 2; n <= 8; ++n) out.push_back(make_spec(Family::B, n));
  for (int n = 4; n <= 8; ++n) out.push_back(make_spec(Family::D, n));
  for (int m = 3; m <= 12; ++m) out.push_back(make_spec(Family::I2, m));
  return out;
}

}  // namespace

TEST(GroupSpec, ParsesFamiliesAndDihedral) {
  EXPECT_EQ(parse_group_spec("A3"), make_spec(Family::A, 3));
  EXPECT_EQ(parse_group_spec("I2(7)"), make_spec(Family::I2, 7));
  EXPECT_EQ(parse_group_spec("  b 5 "), make_spec(Family::B, 5));
  EXPECT_EQ(parse_group_spec("d4"), make_spec(Family::D, 4));
  EXPECT_EQ(parse_group_spec("i2( 9 )"), make_spec(Family::I2, 9));
}

TEST(GroupSpec, RejectsOutOfRangeParameters) {
  EXPECT_THROW(parse_group_spec("D2"), RangeError);
  EXPECT_THROW(parse_group_spec("A0"), RangeError);
  EXPECT_THROW(parse_group_spec("B1"), RangeError);
  EXPECT_THROW(parse_group_spec("I2(2)"), RangeError);
  EXPECT_THROW(parse_group_spec("A65"), RangeError);
}

TEST(GroupSpec, RejectsMalformedText) {
  for (const char* text : {"", "A", "Q3", "A3x", "I2(5", "I2 5", "3A", "A-1", "I2()"}) {
    EXPECT_THROW(parse_group_spec(text), ParseError) << text;
  }
}

TEST(GroupSpec, RenderRoundTrips) {
  for (const FamilySpec& s : family_specs()) EXPECT_EQ(parse_group_spec(render(s)), s) << render(s);
  EXPECT_EQ(render(make_spec(Family::I2, 7)), "I2(7)");
  EXPECT_EQ(render(make_spec(Family::A, 3)), "A3");
}

TEST(Diagram, SmallExamples) {
  CoxeterMatrix a2 = build_diagram(make_spec(Family::A, 2));
  EXPECT_EQ(a2.rank(), 2);
  EXPECT_EQ(a2(1, 2), 3);
  EXPECT_EQ(build_diagram(make_spec(Family::I2, 5))(1, 2), 5);
  CoxeterMatrix a1 = build_diagram(make_spec(Family::A, 1));
  EXPECT_EQ(a1.rank(), 1);
  EXPECT_EQ(a1(1, 1), 1);
}

TEST(Diagram, NumberingConventions) {
  CoxeterMatrix b4 = build_diagram(make_spec(Family::B, 4));
  EXPECT_EQ(b4(3, 4), 4);
  EXPECT_EQ(b4(1, 2), 3);
  EXPECT_EQ(b4(1, 3), 2);
  CoxeterMatrix d5 = build_diagram(make_spec(Family::D, 5));
  EXPECT_EQ(d5(3, 4), 3);
  EXPECT_EQ(d5(3, 5), 3);
  EXPECT_EQ(d5(4, 5), 2);
}

TEST(Diagram, EveryFamilySpecIsAConnectedTreeOfTabulatedRank) {
  for (const FamilySpec& s : family_specs()) {
    CoxeterMatrix m = build_diagram(s);
    ValidationReport r = validate(m);
    EXPECT_TRUE(r.valid()) << render(s);
    EXPECT_TRUE(r.connected) << render(s);
    EXPECT_TRUE(r.tree) << render(s);
    EXPECT_EQ(m.rank(), oracle::table_row(s).rank) << render(s);
    // I2(3) and I2(4) share their matrices with A2 and B2.
    std::optional<FamilySpec> named = identify_family(m);
    ASSERT_TRUE(named) << render(s);
    EXPECT_EQ(build_diagram(*named), m) << render(s);
    if (s.family != Family::I2 || s.param > 4) EXPECT_EQ(*named, s);
  }
}

TEST(Diagram, SporadicsAreTreesWithKnownOrders) {
  const std::vector<std::pair<Family, std::size_t>> cases{
      {Family::E6, 51840}, {Family::F4, 1152}, {Family::H3, 120}};
  for (auto [family, order] : cases) {
    CoxeterMatrix m = build_diagram(make_spec(family));
    ValidationReport r = validate(m);
    EXPECT_TRUE(r.valid() && r.connected && r.tree) << family_name(family);
    EXPECT_EQ(oracle::GeometricGroup(m).order(), order) << family_name(family);
  }
  EXPECT_EQ(build_diagram(make_spec(Family::E8)).rank(), 8);
  EXPECT_EQ(build_diagram(make_spec(Family::H4)).rank(), 4);
}

TEST(Validate, ReportsViolations) {
  CoxeterMatrix bad(2, {1, 1, 1, 1});
  EXPECT_FALSE(validate(bad).valid());

  CoxeterMatrix asym(2, {1, 3, 4, 1});
  EXPECT_FALSE(validate(asym).valid());

  CoxeterMatrix diag(2, {2, 3, 3, 1});
  EXPECT_FALSE(validate(diag).valid());

  CoxeterMatrix split(2, {1, 2, 2, 1});
  ValidationReport r = validate(split);
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.irreducible());

  CoxeterMatrix affine(2, {1, CoxeterMatrix::kInfinity, CoxeterMatrix::kInfinity, 1});
  ValidationReport inf = validate(affine);
  EXPECT_TRUE(inf.valid());
  EXPECT_FALSE(inf.finite_entries);

  CoxeterMatrix triangle(3, {1, 3, 3, 3, 1, 3, 3, 3, 1});
  ValidationReport cyc = validate(triangle);
  EXPECT_TRUE(cyc.connected);
  EXPECT_FALSE(cyc.tree);
  EXPECT_THROW(bipartition(triangle), InvalidArgument);
}

TEST(Validate, SizeMismatchIsRejected) {
  EXPECT_THROW(CoxeterMatrix(2, {1, 3, 3}), InvalidArgument);
}

TEST(Bipartition, Examples) {
  EXPECT_EQ(bipartition(build_diagram(make_spec(Family::A, 3))), (Bipartition{{1, 3}, {2}}));
  EXPECT_EQ(bipartition(build_diagram(make_spec(Family::I2, 5))), (Bipartition{{1}, {2}}));
  EXPECT_EQ(bipartition(build_diagram(make_spec(Family::A, 1))), (Bipartition{{1}, {}}));
  EXPECT_THROW(bipartition(CoxeterMatrix(2, {1, 2, 2, 1})), InvalidArgument);
}

TEST(Bipartition, PartsAreIndependentAndCoverEverything) {
  for (const FamilySpec& s : family_specs()) {
    CoxeterMatrix m = build_diagram(s);
    Bipartition b = bipartition(m);
    EXPECT_EQ(b.J1.size() + b.J2.size(), static_cast<std::size_t>(m.rank()));
    ASSERT_FALSE(b.J1.empty());
    EXPECT_EQ(b.J1.front(), 1);
    for (const auto* part : {&b.J1, &b.J2})
      for (int i : *part)
        for (int j : *part)
          if (i != j) EXPECT_EQ(m(i, j), 2) << render(s);
    // Maximality: every vertex of J2 is adjacent to something in J1.
    for (int j : b.J2) {
      bool adjacent = false;
      for (int i : b.J1) adjacent = adjacent || m(i, j) != 2;
      EXPECT_TRUE(adjacent) << render(s);
    }
  }
}
