#include <gtest/gtest.h>

#include "orbitkit/report_io.hpp"

using namespace orbitkit;

TEST(Report, DimJsonSchemaIsStable) {
    const RootSystem b3 = RootSystem::build("B3");
    const ChevalleyTable tbl(b3);
    const std::vector<Root> d = {parse_root(b3, "e1"), parse_root(b3, "e2+e3")};
    DimResult r;
    r.system = b3.id();
    for (const Root& x : d) r.d_indices.push_back(x.index);
    r.prime = 7;
    r.seed = 0;
    r.dim = orbit_dimension(OrthoSubset::all_ones(b3, d, PrimeField(7)), tbl);
    const InvolutionStats st = involution_stats(b3, d);
    r.l = st.l;
    r.s = st.s;
    r.bound = st.bound;
    r.bound_ok = r.dim <= r.bound;
    r.even_ok = r.dim % 2 == 0;
    const std::string got = dim_result_to_json(r).dump();
    EXPECT_EQ(got,
              R"({"system":"B3","D":[6,5],"dim":4,"bound":6,"l":8,"s":2,)"
              R"("flags":{"bound_ok":true,"even_ok":true,"reduced_applied":false},)"
              R"("prime":7,"seed":0})");
    EXPECT_EQ(got, dim_result_to_json(r).dump());
}

TEST(Report, VerifyJsonIsByteStableAcrossRuns) {
    const RootSystem g2 = RootSystem::build("G2");
    const ChevalleyTable tbl(g2);
    const Skeleton d = {parse_root(g2, "a1"), parse_root(g2, "3a1+2a2")};
    const auto a = verify_main_theorem(g2, tbl, d, {7, 11}, 5, 424242);
    const auto b = verify_main_theorem(g2, tbl, d, {7, 11}, 5, 424242);
    EXPECT_EQ(verify_report_to_json(a).dump(), verify_report_to_json(b).dump());
    EXPECT_EQ(verify_report_to_json(a).dump(),
              R"({"system":"G2","D":[1,5],"dim":4,"bound":4,"l":6,"s":2,)"
              R"("flags":{"xi_independent":true,"bound_ok":true,"even_ok":true,)"
              R"("reduced_applied":false},"primes":[7,11],"xi_samples":5,"seed":424242})");
}

TEST(Report, TableCsvIsDeterministic) {
    const RootSystem g2 = RootSystem::build("G2");
    const ChevalleyTable tbl(g2);
    const auto rows = evaluate_catalog(g2, tbl, g2_catalog(), PrimeField(7));
    const std::string a = table_to_csv(g2, rows);
    const std::string b = table_to_csv(g2, evaluate_catalog(g2, tbl, g2_catalog(), PrimeField(7)));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("1,a1 3a1+2a2,a2 a1+a2,2,4,4"), std::string::npos);
}
