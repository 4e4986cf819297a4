#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "treeprofile/experiments.hpp"

using namespace treeprofile;

TEST_CASE("run_sequence star rows have p2 = 1") {
    auto rows = run_sequence({"star", {}}, 5, {50, 100});
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK(!r.failed);
        CHECK(r.p2 == 1.0);
        CHECK(r.p1 == 0.0);
    }
}

TEST_CASE("run_sequence path rows have p1 = 1 and z/n below 1") {
    auto rows = run_sequence({"path", {}}, 5, {50, 100});
    for (const auto& r : rows) {
        CHECK(r.p1 == 1.0);
        CHECK(r.z_k == r.n - 4);
        CHECK(r.z_over_n < 1.0);
    }
}

TEST_CASE("run_sequence caterpillar rows: p2 = 0, p1 climbing toward 1/2") {
    // family parameter n is the leg count; vertex count is 2n+2.
    auto rows = run_sequence({"caterpillar", {}}, 5, {50, 200, 500});
    REQUIRE(rows.size() == 3);
    double prev = 0;
    for (const auto& r : rows) {
        CHECK(r.p2 == 0.0);
        CHECK(r.p1 > prev);
        prev = r.p1;
    }
    CHECK(std::abs(rows.back().p1 - 0.5) <= 0.02);
}

TEST_CASE("per-row failure does not abort the batch") {
    auto rows = run_sequence({"extended_star", {{"k", 4}}, }, 4, {5, 100});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].failed);
    CHECK(!rows[1].failed);
}

TEST_CASE("row invariants") {
    for (const auto& rows :
         {run_sequence({"caterpillar", {}}, 5, {20, 60}),
          run_sequence({"random_prufer", {{"seed", 5}}}, 4, {30, 80})}) {
        for (const auto& r : rows) {
            CHECK(r.p1 + r.p2 <= 1.0 + 1e-12);
            CHECK(r.z_k >= r.c_path + r.c_star);
            mpq_class q1(r.c_path, r.z_k), q2(r.c_star, r.z_k);
            q1.canonicalize();
            q2.canonicalize();
            CHECK(std::abs(r.p1 - q1.get_d()) <= 1e-12);
            CHECK(std::abs(r.p2 - q2.get_d()) <= 1e-12);
        }
    }
}

TEST_CASE("cross_size_report exact values at k=4") {
    // Frozen against an independent spider-count model: subtrees avoiding
    // the center are arm subpaths, subtrees through the center are weak
    // compositions of k-1 into arm prefixes.
    auto rows = cross_size_report({1000, 10000}, 4);
    REQUIRE(rows.size() == 4);
    const auto& k4_small = rows[0];
    const auto& k5_small = rows[1];
    const auto& k4_big = rows[2];
    const auto& k5_big = rows[3];
    CHECK(k4_small.k == 4);
    CHECK(k5_small.k == 5);

    CHECK(k4_small.z_k == 1062);
    CHECK(k4_small.c_star == 35);
    CHECK(k4_small.moment == 8286);
    CHECK(k4_big.z_k == 10517);
    CHECK(k4_big.c_star == 364);
    CHECK(k4_big.moment == 82638);
    CHECK(k5_small.moment == 18280);
    CHECK(k5_big.moment == 198190);

    // Larger sizes push the star share of (k+1)-subtrees up, while the
    // k-th moment per vertex stays bounded.
    CHECK(k5_big.p2 > k5_small.p2);
    CHECK(k4_small.moment_over_n < 9.0);
    CHECK(k4_big.moment_over_n < 9.0);
}

TEST_CASE("CSV format") {
    auto rows = run_sequence({"path", {}}, 5, {10});
    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    std::string header, line;
    std::getline(in, header);
    CHECK(header ==
          "family,n,k,z_k,c_path,c_star,p1,p2,moment,z_over_n,moment_over_n,diameter,backend");
    std::getline(in, line);
    CHECK(line.substr(0, 10) == "path,10,5,");

    std::ostringstream again;
    write_csv(again, run_sequence({"path", {}}, 5, {10}));
    CHECK(out.str() == again.str());
}

TEST_CASE("format_double prints 12 significant digits") {
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1.0) == "1");
}
