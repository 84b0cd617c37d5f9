#include <gtest/gtest.h>

#include "farrell/cohen.hpp"
#include "farrell/fplinalg.hpp"

using namespace farrell;
using fplinalg::FpMatrix;

TEST(Betti, ConfigurationQuotients) {
    EXPECT_EQ(cohen::betti(3), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(cohen::betti(4), (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(cohen::betti(5), (std::vector<int>{1, 5, 6}));
    EXPECT_THROW(cohen::betti(6), unsupported_case);
    EXPECT_THROW(cohen::betti(2), unsupported_case);
}

TEST(Tables, BuiltinValidates) {
    EXPECT_TRUE(cohen::builtin().validate().empty());
}

TEST(Tables, CuratedActionsHaveDeclaredOrders) {
    for (long p : {2L, 3L, 5L, 7L}) {
        EXPECT_TRUE(cohen::action_matrix(4, cohen::Perm::s34, p, cohen::builtin())
                        .pow(2).is_identity());
        EXPECT_TRUE(cohen::action_matrix(5, cohen::Perm::s45, p, cohen::builtin())
                        .pow(2).is_identity());
        EXPECT_TRUE(cohen::action_matrix(5, cohen::Perm::s345, p, cohen::builtin())
                        .pow(3).is_identity());
    }
}

TEST(Tables, LiteralVariant45IsNotAnInvolutionOverF3) {
    cohen::Tables tables;
    tables.use_literal_45 = true;
    const auto literal = cohen::action_matrix(5, cohen::Perm::s45, 3, tables);
    EXPECT_FALSE(literal.pow(2).is_identity());
    // Over F_2 the literal and amended tables agree.
    const auto lit2 = cohen::action_matrix(5, cohen::Perm::s45, 2, tables);
    EXPECT_TRUE(lit2.pow(2).is_identity());
    EXPECT_FALSE(tables.validate().empty());
}

TEST(Tables, ValidateReportsMutations) {
    cohen::Tables tables;
    tables.k4_34[0][0] += 1; // breaks the involution
    EXPECT_FALSE(tables.validate().empty());
}

TEST(Tables, UncuratedPairsThrow) {
    EXPECT_THROW(cohen::action_matrix(4, cohen::Perm::s45, 3, cohen::builtin()),
                 unsupported_case);
    EXPECT_THROW(cohen::action_matrix(4, cohen::Perm::s345, 3, cohen::builtin()),
                 unsupported_case);
    EXPECT_THROW(cohen::action_matrix(3, cohen::Perm::s34, 3, cohen::builtin()),
                 unsupported_case);
}

TEST(GradedDims, HeadThenPeriodicTail) {
    const cohen::GradedDims d{{1, 2}, 1};
    EXPECT_EQ(d.at(0), 1);
    EXPECT_EQ(d.at(1), 2);
    EXPECT_EQ(d.at(2), 1);
    EXPECT_EQ(d.at(9), 1);
    EXPECT_FALSE(d.eventually_zero());
    const cohen::GradedDims z{{1, 0, 0}, 0};
    EXPECT_TRUE(z.eventually_zero());
}

TEST(QuotientCohomology, TrivialSymmetryGivesBettiNumbers) {
    const fpdata::SymPart trivial{};
    for (int t : {3, 4, 5})
        for (long p : {2L, 3L, 5L})
            EXPECT_EQ(cohen::quotient_cohomology(t, p, trivial, cohen::builtin()),
                      (cohen::GradedDims{cohen::betti(t), 0}));
}

TEST(QuotientCohomology, FrozenS2Dimensions) {
    const fpdata::SymPart s2{{2}};
    EXPECT_EQ(cohen::quotient_cohomology(4, 3, s2, cohen::builtin()),
              (cohen::GradedDims{{1, 1, 0}, 0}));
    EXPECT_EQ(cohen::quotient_cohomology(5, 3, s2, cohen::builtin()),
              (cohen::GradedDims{{1, 3, 3}, 0}));
    EXPECT_EQ(cohen::quotient_cohomology(4, 2, s2, cohen::builtin()),
              (cohen::GradedDims{{1, 2}, 1}));
    EXPECT_EQ(cohen::quotient_cohomology(3, 5, s2, cohen::builtin()),
              (cohen::GradedDims{{1, 0, 0}, 0}));
}

TEST(QuotientCohomology, UncuratedCombinationsThrow) {
    const fpdata::SymPart s2{{2}};
    const fpdata::SymPart s2xs2{{2, 2}};
    EXPECT_THROW(cohen::quotient_cohomology(5, 5, s2, cohen::builtin()), unsupported_case);
    EXPECT_THROW(cohen::quotient_cohomology(4, 3, s2xs2, cohen::builtin()), unsupported_case);
    const fpdata::SymPart s3{{3}};
    EXPECT_THROW(cohen::quotient_cohomology(5, 2, s3, cohen::builtin()), unsupported_case);
}

TEST(Perm, NamesAndOrders) {
    EXPECT_EQ(cohen::perm_name(cohen::Perm::s34), "(34)");
    EXPECT_EQ(cohen::perm_name(cohen::Perm::s45), "(45)");
    EXPECT_EQ(cohen::perm_name(cohen::Perm::s345), "(345)");
    EXPECT_EQ(cohen::perm_order(cohen::Perm::s34), 2);
    EXPECT_EQ(cohen::perm_order(cohen::Perm::s345), 3);
}
