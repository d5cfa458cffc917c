#include "doctest.h"
#include "taucat/algebra.hpp"
#include "taucat/inventory.hpp"
#include "taucat/parallel.hpp"
#include "taucat/tautilt.hpp"

using namespace taucat;

namespace {

const char* kCorpus[] = {
    "field: Q\nvertices: 1 2\narrows: a: 1 -> 2\n",
    "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\n",
    "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: b*a\n",
    "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n",
    "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x\n",
    "field: Q\nvertices: 1 2 3 4\narrows: a: 1 -> 4, b: 2 -> 4, c: 3 -> 4\n",
};

}  // namespace

TEST_CASE("thread count is positive") { CHECK(thread_count() >= 1); }

TEST_CASE("parallel_for covers the range exactly once") {
    std::vector<int> hits(257, 0);
    parallel_for(257, [&](int i) { hits[i]++; });
    for (int h : hits) CHECK(h == 1);
    std::vector<int> shits(19, 0);
    serial_for(19, [&](int i) { shits[i]++; });
    for (int h : shits) CHECK(h == 1);
    bool ran = false;
    parallel_for(0, [&](int) { ran = true; });
    CHECK_FALSE(ran);
}

TEST_CASE("serial and parallel tables are identical") {
    for (const char* text : kCorpus) {
        auto a = parse_algebra(text);
        auto inv = build_inventory(a);
        Tables ser = build_tables(inv, false);
        Tables par = build_tables(inv, true);
        CHECK(ser.hom == par.hom);
        CHECK(ser.ext1 == par.ext1);
        CHECK(ser.ext2 == par.ext2);
        CHECK(ser.hom_tau == par.hom_tau);
        CHECK(ser.def_ok == par.def_ok);
        CHECK(ser.hereditary == par.hereditary);
        REQUIRE(ser.tau_of.size() == par.tau_of.size());
        for (size_t i = 0; i < ser.tau_of.size(); ++i)
            CHECK(ser.tau_of[i].dims == par.tau_of[i].dims);
    }
}

TEST_CASE("serial and parallel enumerations are identical") {
    for (const char* text : kCorpus) {
        auto a = parse_algebra(text);
        auto inv = build_inventory(a);
        Tables t = build_tables(inv);
        CHECK(enumerate_tau_rigid(t, true) == enumerate_tau_rigid(t, false));
        CHECK(enumerate_support_tau_tilting(t, true) ==
              enumerate_support_tau_tilting(t, false));
        CHECK(enumerate_tilting(t, true) == enumerate_tilting(t, false));
        CHECK(enumerate_fac_fixed_points(t, true) ==
              enumerate_fac_fixed_points(t, false));
    }
}

TEST_CASE("serial and parallel verdicts agree") {
    for (const char* text : kCorpus) {
        auto a = parse_algebra(text);
        auto inv = build_inventory(a);
        Tables t = build_tables(inv);
        for (auto fn : {verify_lemma_2_2, verify_thm_3_2, verify_prop_3_6,
                        verify_prop_4_4, verify_lemma_4_8}) {
            TheoremResult rp = fn(t, true);
            TheoremResult rs = fn(t, false);
            CHECK(rp.pass == rs.pass);
            CHECK(rp.cases == rs.cases);
            CHECK(rp.applicable == rs.applicable);
        }
        BijectionReport bp = verify_bijection(t, true);
        BijectionReport bs = verify_bijection(t, false);
        CHECK(bp.pass == bs.pass);
        CHECK(bp.stt == bs.stt);
        CHECK(bp.images == bs.images);
        CHECK(bp.fixed_points == bs.fixed_points);
    }
}
