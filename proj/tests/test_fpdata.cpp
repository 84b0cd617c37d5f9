#include <gtest/gtest.h>

#include "farrell/fpdata.hpp"
#include "farrell/oracle.hpp"

using namespace farrell;
using fpdata::FixedPointData;

TEST(FixedPointData, ValidatesOnConstruction) {
    EXPECT_NO_THROW(FixedPointData(3, {1, 2}, {1, 2}));
    EXPECT_THROW(FixedPointData(4, {1, 3}, {}), std::invalid_argument);  // p not prime
    EXPECT_THROW(FixedPointData(3, {}, {1, 2}), std::invalid_argument);  // empty ordered part
    EXPECT_THROW(FixedPointData(3, {1, 3}, {2}), std::invalid_argument); // entry out of range
    EXPECT_THROW(FixedPointData(3, {1, 0}, {2}), std::invalid_argument); // entry out of range
    EXPECT_THROW(FixedPointData(3, {1, 1}, {2}), std::invalid_argument); // sum != 0 mod p
}

TEST(FixedPointData, SuffixIsStoredSorted) {
    const FixedPointData d(5, {1}, {3, 1, 1, 4});
    EXPECT_EQ(d.suffix, (std::vector<int>{1, 1, 3, 4}));
    EXPECT_EQ(d.i(), 1);
    EXPECT_EQ(d.t(), 5);
    EXPECT_EQ(d.render(), "(1|1,1,3,4)");
}

TEST(PowerData, FrozenValues) {
    EXPECT_EQ(fpdata::power_data(FixedPointData(3, {1, 2}, {}), 2), FixedPointData(3, {2, 1}, {}));
    EXPECT_EQ(fpdata::power_data(FixedPointData(5, {1}, {1, 3}), 2),
              FixedPointData(5, {3}, {3, 4}));
}

TEST(PowerData, GroupActionLaws) {
    for (const auto& entry : fpdata::enumerate_classes(2, 1, 5)) {
        const FixedPointData& d = entry.data;
        for (long m = 1; m < 5; ++m) {
            const FixedPointData dm = fpdata::power_data(d, m);
            EXPECT_EQ(fpdata::canonicalize(dm), d);
            EXPECT_TRUE(fpdata::is_conjugate(d, dm));
            for (long n = 1; n < 5; ++n)
                EXPECT_EQ(fpdata::power_data(dm, n), fpdata::power_data(d, mod_reduce(m * n, 5)));
        }
    }
    EXPECT_THROW(fpdata::power_data(FixedPointData(3, {1, 2}, {}), 0), std::invalid_argument);
}

TEST(SymPart, MultiplicitiesOfRepeatedSuffixValues) {
    EXPECT_EQ(fpdata::sym_part(FixedPointData(3, {1}, {1, 1, 1, 2})).multiplicities,
              (std::vector<int>{3}));
    EXPECT_EQ(fpdata::sym_part(FixedPointData(3, {1}, {2, 2, 2, 2})).multiplicities,
              (std::vector<int>{4}));
    EXPECT_EQ(fpdata::sym_part(FixedPointData(3, {1, 1}, {1, 1, 2})).multiplicities,
              (std::vector<int>{2}));
    EXPECT_TRUE(fpdata::sym_part(FixedPointData(3, {1, 2}, {1, 2})).trivial());
    EXPECT_TRUE(fpdata::sym_part(FixedPointData(3, {1, 1, 1}, {})).trivial());

    const fpdata::SymPart s2{{2}};
    EXPECT_EQ(s2.order(), 2);
    EXPECT_EQ(s2.l(), 2);
    const fpdata::SymPart s3{{3}};
    EXPECT_EQ(s3.order(), 6);
}

TEST(EnumerateClasses, FrozenListGenus3) {
    const auto classes = fpdata::enumerate_classes(3, 1, 3);
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_EQ(classes[0].data, FixedPointData(3, {1}, {1, 1, 1, 2}));
    EXPECT_EQ(classes[0].cover, (rh::Solution{0, 5}));
    EXPECT_EQ(classes[1].data, FixedPointData(3, {1}, {2, 2, 2, 2}));
    EXPECT_EQ(classes[2].data, FixedPointData(3, {1}, {2}));
    EXPECT_EQ(classes[2].cover, (rh::Solution{1, 2}));
}

TEST(EnumerateClasses, FrozenListGenus2ThreePunctures) {
    const auto classes = fpdata::enumerate_classes(2, 3, 3);
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_EQ(classes[0].data, FixedPointData(3, {1, 1, 2}, {2}));
    EXPECT_EQ(classes[1].data, FixedPointData(3, {1, 2, 1}, {2}));
    EXPECT_EQ(classes[2].data, FixedPointData(3, {1, 2, 2}, {1}));
    for (const auto& entry : classes) EXPECT_EQ(entry.cover, (rh::Solution{0, 4}));
}

TEST(EnumerateClasses, FrozenCounts) {
    EXPECT_EQ(fpdata::enumerate_classes(2, 1, 3).size(), 1u);
    EXPECT_EQ(fpdata::enumerate_classes(2, 1, 5).size(), 2u);
    EXPECT_EQ(fpdata::enumerate_classes(2, 2, 5).size(), 3u);
    EXPECT_EQ(fpdata::enumerate_classes(2, 3, 5).size(), 3u);
    EXPECT_EQ(fpdata::enumerate_classes(3, 1, 7).size(), 3u);
    EXPECT_EQ(fpdata::enumerate_classes(3, 2, 7).size(), 5u);
    EXPECT_EQ(fpdata::enumerate_classes(3, 3, 7).size(), 5u);
    EXPECT_TRUE(fpdata::enumerate_classes(2, 7, 3).empty());
}

TEST(EnumerateClasses, MatchesOrbitOracle) {
    for (int g = 1; g <= 3; ++g)
        for (int i = 1; i <= 6; ++i)
            for (long p : {2L, 3L, 5L})
                EXPECT_EQ(fpdata::enumerate_classes(g, i, p).size(),
                          oracle::orbit_class_count(g, i, p))
                    << "g=" << g << " i=" << i << " p=" << p;
}

TEST(EnumerateClasses, MembersAreCanonicalAndNonConjugate) {
    const auto classes = fpdata::enumerate_classes(3, 2, 7);
    for (std::size_t a = 0; a < classes.size(); ++a) {
        EXPECT_EQ(classes[a].data.ordered[0], 1);
        EXPECT_EQ(fpdata::canonicalize(classes[a].data), classes[a].data);
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            EXPECT_FALSE(fpdata::is_conjugate(classes[a].data, classes[b].data));
    }
}

TEST(EnumerateClasses, RendersWithOrderedPrefixAndSortedSuffix) {
    EXPECT_EQ(FixedPointData(3, {1, 2}, {2, 1}).render(), "(1,2|1,2)");
    EXPECT_EQ(FixedPointData(3, {1, 2}, {}).render(), "(1,2|)");
}
