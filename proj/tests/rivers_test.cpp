#include <gtest/gtest.h>

#include "lmc/errors.hpp"
#include "lmc/permutation.hpp"
#include "lmc/rivers.hpp"
#include "testkit.hpp"

namespace lmc {
namespace {

const BinMatrix kGlitch = BinMatrix::from_strings({"10011", "01101", "01110", "10110", "11001"});
const BinMatrix kThreeCycle = BinMatrix::from_strings({"010", "001", "100"});

TEST(Rivers, GlitchMatrixRivers) {
  const RiverSet rs = enumerate_rivers(kGlitch);
  std::vector<std::string> got;
  for (const Permutation& p : rs.rivers) got.push_back(p.one_line());
  const std::vector<std::string> want{"12345", "12435", "13245", "15342", "15432",
                                      "42315", "43215", "45231", "45312", "52341",
                                      "52431", "53241", "53412"};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(rs.contains(Permutation::identity(5)));
  EXPECT_FALSE(rs.contains(Permutation::from_cycles(5, {{1, 2}})));
}

TEST(Rivers, SmallCases) {
  EXPECT_EQ(enumerate_rivers(BinMatrix::identity(4)).size(), 1u);
  EXPECT_EQ(enumerate_rivers(kThreeCycle).size(), 1u);
  const BinMatrix ones = BinMatrix::from_strings({"111", "111", "111"});
  EXPECT_EQ(enumerate_rivers(ones).size(), 6u);
  EXPECT_EQ(enumerate_rivers(BinMatrix::zero(3)).size(), 0u);
  EXPECT_THROW(enumerate_rivers(BinMatrix::identity(9)), DimensionError);
}

TEST(Rivers, MatchesBruteForce) {
  testkit::Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    const BinMatrix m = testkit::random_matrix(1 + static_cast<int>(rng() % 6), rng);
    EXPECT_EQ(enumerate_rivers(m).rivers, testkit::naive_rivers(m));
  }
}

TEST(Mprime, Examples) {
  EXPECT_TRUE(mprime(kGlitch).is_zero());
  EXPECT_TRUE(mprime(BinMatrix::identity(4)).is_zero());
  EXPECT_EQ(mprime(kThreeCycle), BinMatrix::from_strings({"110", "011", "101"}));
  EXPECT_THROW(mprime(BinMatrix::zero(2)), SingularMatrixError);
}

TEST(Mprime, EqualsRiverParity) {
  const testkit::Check ck = testkit::check_fast_cperfect(6, 1000, 32);
  EXPECT_TRUE(ck.ok()) << ck.first_failure;
  EXPECT_EQ(ck.cases, 1000);
}

TEST(EmpDup, Examples) {
  EXPECT_EQ(emp_dup(BinMatrix::zero(5)), (EmpDup{5, 0}));
  EXPECT_EQ(emp_dup(mprime(kThreeCycle)), (EmpDup{0, 0}));
  const std::vector<Row> rows{0b0101, 0b0101, 0b0101, 0};
  EXPECT_EQ(emp_dup(BinMatrix::from_rows(4, rows, false)), (EmpDup{1, 1}));
  const std::vector<Row> pairs{0b01, 0b01, 0b10, 0b10};
  EXPECT_EQ(emp_dup(BinMatrix::from_rows(4, pairs, false)), (EmpDup{0, 2}));
}

TEST(Cperfect, Examples) {
  const CperfectReport id = cperfect(BinMatrix::identity(5));
  EXPECT_EQ(id.cperfect, 5);
  EXPECT_EQ(id.middle_lower_bound, 0);
  const CperfectReport cyc = cperfect(kThreeCycle);
  EXPECT_EQ(cyc.numerator, 3);
  EXPECT_EQ(cyc.cperfect, 1);
  EXPECT_EQ(cyc.middle_lower_bound, 2);
  EXPECT_EQ(cyc.nullity, 1);
  EXPECT_EQ(cyc.rational_string(), "1");
  const CperfectReport g = cperfect(kGlitch);
  EXPECT_EQ(g.emp, 5);
  EXPECT_EQ(g.cperfect, 5);
  EXPECT_EQ(g.middle_lower_bound, 0);
}

TEST(Cperfect, FractionalValue) {
  // One empty row in a 4-cycle relabelled onto four of five qubits.
  const BinMatrix m = permutation_matrix(Permutation::from_cycles(5, {{1, 2, 3, 4}}));
  const CperfectReport r = cperfect(m);
  EXPECT_EQ(r.numerator, 7);
  EXPECT_EQ(r.rational_string(), "7/3");
  EXPECT_EQ(r.cperfect, 2);
  EXPECT_EQ(r.nullity, 2);
}

TEST(Glitch, Detection) {
  EXPECT_TRUE(glitch_detect(kGlitch));
  EXPECT_FALSE(glitch_detect(BinMatrix::identity(5)));
  EXPECT_FALSE(glitch_detect(kThreeCycle));
}

TEST(ComponentNullspace, Examples) {
  for (const BinMatrix& m : testkit::all_invertible(3)) {
    const std::vector<int> all{0, 1, 2};
    EXPECT_TRUE(check_component_nullspace(m, all));
  }
  for (int i = 0; i < 3; ++i) {
    const std::vector<int> single{i};
    EXPECT_FALSE(check_component_nullspace(kThreeCycle, single));
    EXPECT_TRUE(check_component_nullspace(BinMatrix::identity(3), single));
  }
}

TEST(ComponentNullspace, MiddleGateComponents) {
  const testkit::Check ck = testkit::check_middle_nullspace(5, 1500, 33);
  EXPECT_TRUE(ck.ok()) << ck.first_failure;
}

TEST(RiverParity, PairsAcrossAGate) {
  const testkit::Check ck = testkit::check_pair_parity(5, 1000, 34);
  EXPECT_TRUE(ck.ok()) << ck.first_failure;
}

TEST(RiverParity, TranspositionClasses) {
  const testkit::Check ck = testkit::check_class_parity(5, 1000, 35);
  EXPECT_TRUE(ck.ok()) << ck.first_failure;
}

}  // namespace
}  // namespace lmc
