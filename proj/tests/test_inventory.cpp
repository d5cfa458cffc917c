#include "doctest.h"
#include "taucat/algebra.hpp"
#include "taucat/inventory.hpp"

using namespace taucat;

namespace {

const char* kA2 = "field: Q\nvertices: 1 2\narrows: a: 1 -> 2\n";
const char* kA3 = "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\n";
const char* kA3Rel =
    "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: b*a\n";
const char* kLoop2 = "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n";
const char* kLoop3 = "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x\n";
const char* kD4 =
    "field: Q\nvertices: 1 2 3 4\narrows: a: 1 -> 4, b: 2 -> 4, c: 3 -> 4\n";

}  // namespace

TEST_CASE("inventory sizes across the corpus") {
    CHECK(build_inventory(parse_algebra(kA2)).size() == 3);
    CHECK(build_inventory(parse_algebra(kA3)).size() == 6);
    CHECK(build_inventory(parse_algebra(kA3Rel)).size() == 5);
    CHECK(build_inventory(parse_algebra(kLoop2)).size() == 2);
    CHECK(build_inventory(parse_algebra(kLoop3)).size() == 3);
    CHECK(build_inventory(parse_algebra(kD4)).size() == 12);
}

TEST_CASE("canonical order and labels on A2") {
    auto a = parse_algebra(kA2);
    auto inv = build_inventory(a);
    REQUIRE(inv.size() == 3);
    CHECK(inv.modules[0].dims == std::vector<int>{0, 1});  // S2 = P2
    CHECK(inv.modules[1].dims == std::vector<int>{1, 0});  // S1 = I1
    CHECK(inv.modules[2].dims == std::vector<int>{1, 1});  // P1 = I2
    CHECK(inv.proj_of == std::vector<int>{2, 0});
    CHECK(inv.inj_of == std::vector<int>{1, 2});
    CHECK(inv.simple_of == std::vector<int>{1, 0});
    CHECK(inv.is_proj == std::vector<bool>{true, false, true});
    CHECK(inv.is_inj == std::vector<bool>{false, true, true});
}

TEST_CASE("find and summand_indices") {
    auto a = parse_algebra(kA3);
    auto inv = build_inventory(a);
    auto p1 = projective(a, 0), s2 = simple(a, 1);
    int ip = inv.find(p1);
    REQUIRE(ip >= 0);
    CHECK(inv.modules[ip].dims == p1.dims);
    auto idx = inv.summand_indices(direct_sum(a, {p1, s2, p1}));
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == inv.find(s2));
    CHECK(idx[1] == ip);
    CHECK(idx[2] == ip);
}

TEST_CASE("every projective, injective and simple is present") {
    for (const char* t : {kA2, kA3, kA3Rel, kLoop2, kLoop3, kD4}) {
        auto a = parse_algebra(t);
        auto inv = build_inventory(a);
        for (int v = 0; v < a.n_vertices(); ++v) {
            CHECK(inv.proj_of[v] >= 0);
            CHECK(inv.inj_of[v] >= 0);
            CHECK(inv.simple_of[v] >= 0);
            CHECK(inv.is_proj[inv.proj_of[v]]);
            CHECK(inv.is_inj[inv.inj_of[v]]);
        }
    }
}

TEST_CASE("nakayama backend agrees with knitting") {
    auto a3 = parse_algebra(kA3);
    CHECK(is_nakayama_algebra(a3));
    CHECK(nakayama_intervals(a3).size() == 6);

    auto l3 = parse_algebra(kLoop3);
    CHECK(is_nakayama_algebra(l3));
    CHECK(nakayama_intervals(l3).size() == 3);

    CHECK_FALSE(is_nakayama_algebra(parse_algebra(kD4)));

    // A_n inventories count n(n+1)/2 intervals; cyclic k[x]/x^n counts n
    for (int n : {2, 3, 4, 5}) {
        std::string text = "vertices:";
        for (int v = 1; v <= n; ++v) text += " " + std::to_string(v);
        text += "\narrows:";
        for (int v = 1; v + 1 <= n; ++v)
            text += std::string(v > 1 ? "," : "") + " a" + std::to_string(v) + ": " +
                    std::to_string(v) + " -> " + std::to_string(v + 1);
        text += "\n";
        CHECK(build_inventory(parse_algebra(text)).size() == n * (n + 1) / 2);
    }
}

TEST_CASE("ar_middle produces the AR sequence middle") {
    auto a = parse_algebra(kA2);
    OppositeBridge br(a);
    auto inv = build_inventory(a);
    // sequence ending at S1: 0 -> S2 -> P1 -> S1 -> 0
    auto mid = ar_middle(br, simple(a, 0));
    CHECK(mid.dims == std::vector<int>{1, 1});

    auto a3 = parse_algebra(kA3);
    OppositeBridge br3(a3);
    // ending at S2: 0 -> S3 -> P2 -> S2 -> 0
    auto mid2 = ar_middle(br3, simple(a3, 1));
    CHECK(mid2.dims == std::vector<int>{0, 1, 1});
}

TEST_CASE("cap aborts oversized inventories") {
    CHECK_THROWS_AS(build_inventory(parse_algebra(kD4), 5), CapExceeded);
}
