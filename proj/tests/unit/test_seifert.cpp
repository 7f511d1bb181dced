#include <gtest/gtest.h>

#include "generators.hpp"
#include "sseq/error.hpp"
#include "sseq/seifert.hpp"

using namespace sseq;
using sseq::testkit::Rng;

namespace {

const IntMatrix kM0{{-1, -1}, {-1, -1}};
const IntMatrix kM1{{-1, 0}, {0, 0}};

LinkingTable table3(long a, long b, long c) {
  LinkingTable t(3);
  t.set(1, 2, a);
  t.set(1, 3, b);
  t.set(2, 3, c);
  return t;
}

}  // namespace

TEST(Validate, CounterexampleMatrixPasses) {
  const ValidationReport r = validate({3, 0, kM0});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.first_failure(), "");
}

TEST(Validate, AsymmetricLambdaFails) {
  const ValidationReport r = validate({3, 0, IntMatrix{{0, 1}, {0, 0}}});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure(), "lambda_symmetry");
  for (const auto& c : r.checks)
    if (c.name == "lambda_symmetry") {
      ASSERT_EQ(c.offending.size(), 1u);
      EXPECT_EQ(c.offending[0], (std::pair<std::size_t, std::size_t>{1, 2}));
    }
}

TEST(Validate, StabilizedUnknotPasses) { EXPECT_TRUE(validate({1, 1, IntMatrix{{0, 1}, {0, 0}}}).ok()); }

TEST(Validate, WrongSizeFails) {
  const ValidationReport r = validate({3, 0, IntMatrix::identity(3)});
  EXPECT_EQ(r.first_failure(), "size");
  EXPECT_THROW(require_strictly_valid({3, 0, IntMatrix::identity(3)}), Error);
}

TEST(Validate, NonSquareFails) { EXPECT_EQ(validate({1, 0, IntMatrix(1, 2)}).first_failure(), "square"); }

TEST(Validate, BoundaryRowsAndGenusBlock) {
  // boundary row 1 couples asymmetrically to the genus part
  IntMatrix m{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  EXPECT_EQ(validate({2, 1, m}).first_failure(), "boundary_rows");
  EXPECT_EQ(validate({1, 1, IntMatrix{{0, 2}, {0, 0}}}).first_failure(), "genus_block");
}

TEST(Validate, ClassicalModeOnlyChecksSquare) {
  const ValidationReport r = validate({3, 0, IntMatrix::identity(3)}, ValidationMode::Classical);
  EXPECT_TRUE(r.ok());
}

TEST(Validate, GeneratedMatricesAreValid) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(testkit::uniform(rng, 1, 4));
    const auto g = static_cast<std::size_t>(testkit::uniform(rng, 0, 3));
    const auto s = testkit::random_valid_osm(rng, m, g);
    EXPECT_TRUE(validate(s).ok()) << s.matrix().to_string();
  }
}

TEST(Linking, CounterexampleTables) {
  EXPECT_EQ(linking_numbers({3, 0, kM0}), table3(-1, 2, 2));
  EXPECT_EQ(linking_numbers({3, 0, kM1}), table3(0, 1, 0));
  EXPECT_EQ(linking_numbers({3, 0, IntMatrix(2, 2)}), table3(0, 0, 0));
}

TEST(Linking, RequiresValidInput) {
  try {
    linking_numbers({3, 0, IntMatrix{{0, 1}, {0, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidMatrix);
  }
}

TEST(Linking, LambdaFromTable) {
  EXPECT_EQ(lambda_from_linking(table3(-1, 2, 2)), kM0);
  EXPECT_EQ(lambda_from_linking(table3(0, 0, 0)), IntMatrix(2, 2));
  EXPECT_EQ(lambda_from_linking(table3(0, 1, 0)), kM1);
  EXPECT_EQ(lambda_from_linking(LinkingTable(1)), IntMatrix());
}

TEST(Linking, TableAccessIsSymmetric) {
  LinkingTable t(4);
  t.set(3, 1, 7);
  EXPECT_EQ(t.get(1, 3), 7);
  EXPECT_EQ(t.get(3, 1), 7);
  EXPECT_EQ(t.get(2, 4), 0);
}

TEST(IntersectionForm, Examples) {
  EXPECT_EQ(intersection_form({1, 1, IntMatrix{{0, 1}, {0, 0}}}), (IntMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(intersection_form({3, 0, kM0}), IntMatrix(2, 2));
  EXPECT_EQ(intersection_form({1, 1, IntMatrix{{2, 5}, {5, 1}}}), IntMatrix(2, 2));
}

TEST(SemiSymplectic, Examples) {
  EXPECT_TRUE(is_semi_symplectic({3, 0, kM0}));
  EXPECT_FALSE(is_semi_symplectic({1, 1, IntMatrix{{0, 1}, {0, 0}}}));
  EXPECT_TRUE(is_semi_symplectic({1, 1, IntMatrix{{0, 0}, {1, 0}}}));
  EXPECT_EQ(semi_symplectic_form(2, 1), (IntMatrix{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
}
