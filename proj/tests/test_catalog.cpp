#include <gtest/gtest.h>

#include <set>

#include "orbitkit/catalog.hpp"
#include "orbitkit/enumerate.hpp"

using namespace orbitkit;

TEST(Catalog, PmExpansionIsOrderedAndComplete) {
    const auto one = expand_pm("e1+e2");
    ASSERT_EQ(one.size(), 1u);
    const auto two = expand_pm("e1~e2");
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], "e1+e2");
    EXPECT_EQ(two[1], "e1-e2");
    const auto four = expand_pm("(e1-e2~e3~e4)/2");
    ASSERT_EQ(four.size(), 4u);
    EXPECT_EQ(four[0], "(e1-e2+e3+e4)/2");
    EXPECT_EQ(four[3], "(e1-e2-e3-e4)/2");
}

TEST(Catalog, F4RowsAreWellFormed) {
    const RootSystem f4 = RootSystem::build("F4");
    ASSERT_EQ(f4_catalog().size(), 36u);
    int expected_row = 1;
    for (const CatalogRow& row : f4_catalog()) {
        EXPECT_EQ(row.row_no, expected_row++);
        const std::vector<Root> d = catalog_roots(f4, row.d);
        const std::vector<Root> m = catalog_roots(f4, row.m);
        EXPECT_EQ(static_cast<int>(m.size()), row.m_size) << "row " << row.row_no;
        // distinct members
        std::set<int> seen;
        for (const Root& r : m) EXPECT_TRUE(seen.insert(r.index).second) << "row " << row.row_no;
        // D orthogonal and reduced
        require_orthogonal_positive(f4, d);
        EXPECT_EQ(reduce_skeleton(f4, d).size(), d.size()) << "row " << row.row_no;
    }
}

TEST(Catalog, F4MConditionsHoldRowByRow) {
    const RootSystem f4 = RootSystem::build("F4");
    for (const CatalogRow& row : f4_catalog()) {
        const std::vector<Root> d = catalog_roots(f4, row.d);
        const std::vector<Root> m = catalog_roots(f4, row.m);
        EXPECT_TRUE(verify_m_conditions(f4, d, m)) << "row " << row.row_no;
    }
}

TEST(Catalog, G2RowsMatchTheThreePairs) {
    const RootSystem g2 = RootSystem::build("G2");
    ASSERT_EQ(g2_catalog().size(), 3u);
    const ChevalleyTable tbl(g2);
    const int dims[3] = {4, 2, 2};
    for (std::size_t i = 0; i < 3; ++i) {
        const CatalogRow& row = g2_catalog()[i];
        const std::vector<Root> d = catalog_roots(g2, row.d);
        const OrthoSubset sub = OrthoSubset::all_ones(g2, d, default_prime_for(g2));
        EXPECT_EQ(orbit_dimension(sub, tbl), dims[i]);
        EXPECT_EQ(orbit_dimension(sub, tbl), 2 * row.m_size);
        EXPECT_EQ(involution_stats(g2, d).bound, row.bound);
        // the complement of M is maximal isotropic
        std::vector<Root> p_set;
        const std::vector<Root> m = catalog_roots(g2, row.m);
        for (int k = 0; k < g2.num_positive(); ++k) {
            bool in_m = false;
            for (const Root& r : m) in_m = in_m || r == g2.positive(k);
            if (!in_m) p_set.push_back(g2.positive(k));
        }
        EXPECT_TRUE(check_maximal_isotropic(tbl, canonical_form(sub), p_set));
    }
}
