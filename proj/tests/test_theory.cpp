#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "artin/error.hpp"
#include "artin/theory.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

GroupTable dihedral_table(int m) { return enumerate_group(build_diagram(make_spec(Family::I2, m))); }

Sentence forall_forall() {
  Sentence s;
  s.prefix = {{Quantifier::ForAll, 'x'}, {Quantifier::ForAll, 'y'}};
  s.matrix = Formula::equal({{'x'}, {'y'}}, {{'y'}, {'x'}});
  return s;
}

GroupTable trivial_group() { return GroupTable(1, {0}); }

}  // namespace

TEST(Sentences, Rendering) {
  EXPECT_EQ(render(phi(2)), "∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y²))");
  EXPECT_EQ(render(psi(3)), "∃x.((x³ = 1) ∧ (x¹ ≠ 1) ∧ (x² ≠ 1))");
  EXPECT_EQ(render(phi(1)), "∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y¹))");
  EXPECT_EQ(render(phi(12)), "∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y¹²))");
  EXPECT_EQ(render(phi(2), Notation::Ascii), "Ax.Ey.Az.(~(xz = zx) | (x = y^2))");
  EXPECT_EQ(render(psi(2), Notation::Ascii), "Ex.((x^2 = 1) & (x^1 != 1))");
  EXPECT_EQ(render(psi(1)), "∃x.((x¹ = 1))");
}

TEST(Sentences, Preconditions) {
  EXPECT_THROW(phi(0), RangeError);
  EXPECT_THROW(psi(0), RangeError);
}

TEST(Sentences, WellFormedAndAtomShape) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_TRUE(is_well_formed(phi(k)));
    EXPECT_TRUE(is_well_formed(psi(k)));
  }
  Sentence loose = phi(2);
  loose.prefix.pop_back();
  EXPECT_FALSE(is_well_formed(loose));
  Sentence twice = psi(2);
  twice.prefix.push_back({Quantifier::ForAll, 'x'});
  EXPECT_FALSE(is_well_formed(twice));

  // x z = z x becomes x z x^-1 z^-1 = 1.
  Formula commute = phi(3).matrix.children[0].children[0];
  EXPECT_EQ(atomic_word(commute), (std::vector<std::pair<char, int>>{{'x', 1}, {'z', 1}, {'x', -1}, {'z', -1}}));
  Formula root = phi(3).matrix.children[1];
  EXPECT_EQ(atomic_word(root), (std::vector<std::pair<char, int>>{{'x', 1}, {'y', -1}, {'y', -1}, {'y', -1}}));
}

TEST(Sentences, KahrClass) {
  EXPECT_TRUE(is_kahr(phi(5)));
  EXPECT_FALSE(is_kahr(psi(4)));
  EXPECT_FALSE(is_kahr(forall_forall()));
}

TEST(Evaluation, SymmetricGroupOnThreeLetters) {
  GroupTable s3 = enumerate_group(build_diagram(make_spec(Family::A, 2)));
  EXPECT_TRUE(eval_on_finite_group(psi(3), s3));
  EXPECT_FALSE(eval_on_finite_group(psi(4), s3));
  EXPECT_TRUE(eval_on_finite_group(psi(1), trivial_group()));
  EXPECT_FALSE(eval_on_finite_group(forall_forall(), s3));
  EXPECT_TRUE(eval_on_finite_group(forall_forall(), trivial_group()));
  // The center of S3 is trivial, so every central element has any root.
  EXPECT_TRUE(eval_on_finite_group(phi(5), s3));
}

TEST(Evaluation, PhiOnAbelianGroups) {
  // Klein four-group, built by hand: squares are trivial, so Phi_2 fails and
  // Phi_3 holds.
  GroupTable klein(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
  EXPECT_FALSE(eval_on_finite_group(phi(2), klein));
  EXPECT_TRUE(eval_on_finite_group(phi(3), klein));
  EXPECT_TRUE(eval_on_finite_group(forall_forall(), klein));
}

TEST(Evaluation, DihedralElementOrders) {
  for (int m = 3; m <= 8; ++m) {
    GroupTable t = dihedral_table(m);
    oracle::GeometricGroup geo(build_diagram(make_spec(Family::I2, m)));
    std::set<int> orders = geo.element_orders();
    for (int k = 1; k <= 16; ++k) {
      const bool expected = k == 1 || k == 2 || m % k == 0;
      EXPECT_EQ(eval_on_finite_group(psi(k), t), expected) << "m=" << m << " k=" << k;
      EXPECT_EQ(orders.count(k) > 0, expected);
    }
  }
}

TEST(Evaluation, CapsAndMalformedInput) {
  GroupTable t = dihedral_table(8);
  Caps tight;
  tight.assignments = 1000;
  EXPECT_THROW(eval_on_finite_group(phi(2), t, tight), CapExceeded);
  EXPECT_NO_THROW(eval_on_finite_group(psi(2), t, tight));
  Sentence loose = phi(2);
  loose.prefix.pop_back();
  EXPECT_THROW(eval_on_finite_group(loose, t), InvalidArgument);
}

TEST(HoldsPhi, Examples) {
  EXPECT_TRUE(holds_phi(make_spec(Family::A, 3), 4));
  EXPECT_FALSE(holds_phi(make_spec(Family::A, 2), 4));
  for (const char* g : {"A1", "B3", "D5", "I2(9)"}) EXPECT_TRUE(holds_phi(parse_group_spec(g), 1));
  EXPECT_THROW(holds_phi(make_spec(Family::D, 6), 2), CapExceeded);
}

TEST(Distinguish, Examples) {
  EquivalenceVerdict a = distinguish(make_spec(Family::A, 2), make_spec(Family::A, 3));
  EXPECT_EQ(a.kind, VerdictKind::Distinguished);
  EXPECT_EQ(a.sentence, phi(4));
  EXPECT_EQ(a.holds_in, VerdictSide::Right);
  EXPECT_EQ(a.basis, VerdictBasis::Formula);

  EquivalenceVerdict d = distinguish(make_spec(Family::D, 4), make_spec(Family::D, 5));
  EXPECT_EQ(d.sentence, phi(8));
  EXPECT_EQ(d.holds_in, VerdictSide::Right);
  EXPECT_EQ(d.exponents, (std::array<long, 2>{3, 8}));

  EquivalenceVerdict same = distinguish(make_spec(Family::A, 2), make_spec(Family::A, 2));
  EXPECT_EQ(same.kind, VerdictKind::SameSpec);
  EXPECT_FALSE(same.sentence);

  EquivalenceVerdict i2 = distinguish(make_spec(Family::I2, 3), make_spec(Family::I2, 6));
  EXPECT_EQ(i2.kind, VerdictKind::Distinguished);
  EXPECT_EQ(i2.sentence, phi(2));
  EXPECT_EQ(i2.holds_in, VerdictSide::Left);
  EXPECT_EQ(i2.basis, VerdictBasis::Search);
}

TEST(Distinguish, EqualSpectraStayUnknown) {
  // I2(4) and B2 share a diagram, so nothing separates them.
  EquivalenceVerdict v = distinguish(make_spec(Family::I2, 4), make_spec(Family::B, 2));
  EXPECT_EQ(v.kind, VerdictKind::Unknown);
  EXPECT_FALSE(v.sentence);
  EquivalenceVerdict w = distinguish(make_spec(Family::I2, 3), make_spec(Family::A, 2));
  EXPECT_EQ(w.kind, VerdictKind::Unknown);
}

TEST(Distinguish, SymmetricAndKahr) {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 5; ++n) specs.push_back(make_spec(Family::A, n));
  for (int n = 2; n <= 5; ++n) specs.push_back(make_spec(Family::B, n));
  for (int n = 4; n <= 7; ++n) specs.push_back(make_spec(Family::D, n));
  for (int m = 3; m <= 10; ++m) specs.push_back(make_spec(Family::I2, m));
  for (const FamilySpec& a : specs)
    for (const FamilySpec& b : specs) {
      if (a == b) continue;
      EquivalenceVerdict ab, ba;
      try {
        ab = distinguish(a, b);
        ba = distinguish(b, a);
      } catch (const CapExceeded&) {
        continue;
      }
      EXPECT_EQ(ab.kind, ba.kind) << render(a) << " " << render(b);
      EXPECT_EQ(ab.sentence, ba.sentence);
      if (ab.kind != VerdictKind::Distinguished) continue;
      EXPECT_TRUE(is_kahr(*ab.sentence));
      EXPECT_NE(ab.holds_in, ba.holds_in);
      // The recorded side satisfies the sentence and the other does not.
      const int k = static_cast<int>(ab.sentence->matrix.children[1].rhs[0].exponent);
      const FamilySpec& yes = *ab.holds_in == VerdictSide::Left ? a : b;
      const FamilySpec& no = *ab.holds_in == VerdictSide::Left ? b : a;
      EXPECT_TRUE(holds_phi(yes, k));
      if (ab.basis == VerdictBasis::Formula) {
        EXPECT_EQ(k, std::max(max_root_exponent(a), max_root_exponent(b)));
        EXPECT_GT(k, max_root_exponent(no));
      } else {
        EXPECT_FALSE(holds_phi(no, k));
      }
    }
}

TEST(Distinguish, JsonSchema) {
  nlohmann::json j = to_json(distinguish(make_spec(Family::A, 2), make_spec(Family::A, 3)));
  EXPECT_EQ(j["kind"], "Distinguished");
  EXPECT_EQ(j["sentence"], "∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y⁴))");
  EXPECT_EQ(j["sentenceAscii"], "Ax.Ey.Az.(~(xz = zx) | (x = y^4))");
  EXPECT_EQ(j["holdsIn"], "right");
  EXPECT_EQ(j["basis"], "formula");
  EXPECT_EQ(j["exponents"], nlohmann::json::array({3, 4}));
  nlohmann::json same = to_json(distinguish(make_spec(Family::A, 2), make_spec(Family::A, 2)));
  EXPECT_EQ(same["kind"], "SameSpec");
  EXPECT_FALSE(same.contains("sentence"));
  EXPECT_FALSE(same.contains("holdsIn"));
}
