#include "ellcm/classify.hpp"
#include "ellcm/instance.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

namespace {

struct GsCase {
  const char* algebra;
  int j;
};

void PrintTo(const GsCase& c, std::ostream* os) { *os << c.algebra << " w" << c.j + 1; }

class GsBasisTest : public ::testing::TestWithParam<GsCase> {};

}  // namespace

TEST_P(GsBasisTest, ClosedFormsMatch) {
  Instance in(GetParam().algebra, GetParam().j);
  std::mt19937_64 rng(11);
  GSReport r = verify_gs(in.basis(), rng);
  EXPECT_EQ(r.dim, in.algebra().dim());
  EXPECT_LT(r.worst(), 1e-12);
}

TEST_P(GsBasisTest, SigmaIsAnAutomorphismOfOrderL) {
  Instance in(GetParam().algebra, GetParam().j);
  EXPECT_EQ(sigma_violations(in.algebra(), in.transition(), in.lift()), 0);
  EXPECT_TRUE(in.lift().is_order_l());
}

TEST_P(GsBasisTest, InvariantSubalgebraMatchesTable) {
  Instance in(GetParam().algebra, GetParam().j);
  std::mt19937_64 rng(5);
  InvariantSubalgebra inv = identify_invariant_subalgebra(in.basis(), rng);
  EXPECT_TRUE(inv.matches_table) << inv.mismatch;
}

INSTANTIATE_TEST_SUITE_P(Cases, GsBasisTest,
                         ::testing::Values(GsCase{"A3", 1}, GsCase{"A5", 2}, GsCase{"A5", 1}, GsCase{"B3", 0},
                                           GsCase{"C3", 2}, GsCase{"D5", 0}),
                         [](const auto& info) {
                           return std::string(info.param.algebra) + "_w" + std::to_string(info.param.j + 1);
                         });

TEST(GsBasis, A3TypesAreSl2AndSl2Gl2) {
  Instance in("A3", 1);
  std::mt19937_64 rng(5);
  InvariantSubalgebra inv = identify_invariant_subalgebra(in.basis(), rng);
  EXPECT_EQ(inv.tilde_type.str(), "A1");
  EXPECT_EQ(inv.dim_g0, 7);
}
