#include "doctest.h"
#include "taucat/algebra.hpp"
#include "taucat/inventory.hpp"
#include "taucat/tautilt.hpp"

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

struct Fixture {
    BoundAlgebra alg;
    Inventory inv;
    Tables t;
    explicit Fixture(const char* text)
        : alg(parse_algebra(text)), inv(build_inventory(alg)), t(build_tables(inv)) {}
};

}  // namespace

TEST_CASE("A2 tables") {
    Fixture f(kA2);
    const Tables& t = f.t;
    REQUIRE(t.n == 3);
    CHECK(t.hereditary);
    // canonical order: S2=(0,1), S1=(1,0), P1=(1,1)
    const int s2 = 0, s1 = 1, p1 = 2;
    CHECK(f.inv.modules[s2].dims == std::vector<int>{0, 1});
    CHECK(f.inv.modules[s1].dims == std::vector<int>{1, 0});
    CHECK(f.inv.modules[p1].dims == std::vector<int>{1, 1});

    CHECK(t.hom[p1][s1] == 1);
    CHECK(t.hom[s1][p1] == 0);
    CHECK(t.hom[p1][p1] == 1);
    CHECK(t.ext1[s1][s2] == 1);
    CHECK(t.ext1[s2][s1] == 0);
    CHECK(t.hom_tau[s2][s1] == 1);  // Hom(S2, tau S1) with tau S1 = S2
    CHECK(t.hom_tau[s1][s1] == 0);
    CHECK(t.tau_of[s1].dims == std::vector<int>{0, 1});
    CHECK(t.tau_of[s2].is_zero());  // projective
    CHECK(t.tau_of[p1].is_zero());
}

TEST_CASE("A2 fac, ext-projectives, perp") {
    Fixture f(kA2);
    const Tables& t = f.t;
    const int s2 = 0, s1 = 1, p1 = 2;
    CHECK(fac(t, {p1}) == Subset{s1, p1});
    CHECK(fac(t, {s1}) == Subset{s1});
    CHECK(fac(t, {s2, p1}) == Subset{s2, s1, p1});
    CHECK(fac(t, {}) == Subset{});
    CHECK(ext_projectives(t, {s2, s1, p1}) == Subset{s2, p1});
    CHECK(ext_projectives(t, {s1, p1}) == Subset{s1, p1});
    CHECK(perp1(t, {s1}) == Subset{s1, p1});
}

TEST_CASE("A2 approximations") {
    Fixture f(kA2);
    const Tables& t = f.t;
    const int s2 = 0, s1 = 1, p1 = 2;

    // minimal left {S1,P1}-approximation of P2 is P2 -> P1
    Approximation ap = left_approximation_idx(t, s2, {s1, p1});
    CHECK(ap.left);
    REQUIRE(ap.summands.size() == 1);
    CHECK(ap.summands[0].member == p1);
    CHECK(ap.mono);
    CHECK_FALSE(ap.map_zero);
    CHECK(ap.coker_pieces == Subset{s1});
    ap.map.validate();

    // minimal right {S2,P1}-approximation of S1 is P1 ->> S1
    Approximation ra = right_approximation_idx(t, s1, {s2, p1});
    CHECK_FALSE(ra.left);
    REQUIRE(ra.summands.size() == 1);
    CHECK(ra.summands[0].member == p1);
    CHECK(ra.epi);

    // approximating into an empty subcategory gives the zero map
    Approximation zp = left_approximation_idx(t, s1, {});
    CHECK(zp.map_zero);
    CHECK(zp.summands.empty());
}

TEST_CASE("A2 rigidity and tilting predicates") {
    Fixture f(kA2);
    const Tables& t = f.t;
    const int s2 = 0, s1 = 1, p1 = 2;

    CHECK(is_tau_rigid_def(t, {s1}));
    CHECK(is_tau_rigid_ext(t, {s1}));
    CHECK_FALSE(is_tau_rigid_def(t, {s2, s1}));
    CHECK_FALSE(is_tau_rigid_ext(t, {s2, s1}));

    CHECK(is_support_tau_tilting(t, {}));
    CHECK_FALSE(is_tau_tilting(t, {}));
    CHECK(is_support_tau_tilting(t, {s1}));
    CHECK_FALSE(is_tau_tilting(t, {s1}));
    CHECK(is_tau_tilting(t, {s2, p1}));
    CHECK(is_tau_tilting(t, {s1, p1}));
    CHECK_FALSE(is_support_tau_tilting(t, {p1}));

    CHECK(is_tilting(t, {s2, p1}));
    CHECK(is_tilting(t, {s1, p1}));
    CHECK_FALSE(is_tilting(t, {s1}));
    CHECK(is_partial_tilting(t, {s1}));

    SttReport rep = support_tau_tilting_report(t, {s2, p1});
    CHECK(rep.tau_rigid);
    CHECK(rep.support_tau_tilting);
    CHECK(rep.tau_tilting);
    REQUIRE(rep.projs.size() == 2);
    for (const auto& w : rep.projs) {
        CHECK(w.coker_in_s);
        CHECK(w.map_nonzero);
    }
}

TEST_CASE("A2 enumerations") {
    Fixture f(kA2);
    const Tables& t = f.t;
    CHECK(enumerate_support_tau_tilting(t).size() == 5);
    CHECK(enumerate_tau_tilting(t).size() == 2);
    CHECK(enumerate_tilting(t).size() == 2);
    CHECK(enumerate_fac_fixed_points(t).size() == 5);
    CHECK(enumerate_tau_rigid(t).size() == 6);
}

TEST_CASE("A2 completions") {
    Fixture f(kA2);
    const Tables& t = f.t;
    const int s2 = 0, s1 = 1, p1 = 2;

    Completion cf = completion_fac(t, {p1});
    CHECK(cf.method == "fac-cokernel");
    CHECK(cf.output == Subset{s1, p1});
    CHECK(cf.verified);
    CHECK(cf.contains_input);

    Completion cempty = completion_fac(t, {});
    CHECK(cempty.output == Subset{});
    CHECK(cempty.verified);

    Completion cb = bongartz_tau_perp(t, {s1});
    CHECK(cb.method == "tau-perp");
    CHECK(cb.output == Subset{s1, p1});
    CHECK(cb.verified);

    Completion cb2 = bongartz_tau_perp(t, {p1});
    CHECK(cb2.output == Subset{s2, p1});
    CHECK(cb2.verified);

    Completion ct = tilting_completion(t, {s1});
    CHECK(ct.method == "tilting-perp");
    CHECK(ct.output == Subset{s1, p1});
    CHECK(ct.verified);

    // preconditions
    CHECK_THROWS_AS(completion_fac(t, {s2, s1}), std::invalid_argument);
    CHECK_THROWS_AS(bongartz_tau_perp(t, {s2, s1}), std::invalid_argument);
    CHECK_THROWS_AS(tilting_completion(t, {s2, s1}), std::invalid_argument);
}

TEST_CASE("A2 almost-complete and theorem sweeps") {
    Fixture f(kA2);
    const Tables& t = f.t;
    const int s1 = 1, p1 = 2;
    auto stt = enumerate_support_tau_tilting(t);
    CHECK(is_almost_support_tau_tilting(t, {p1}, stt));
    CHECK_FALSE(is_almost_support_tau_tilting(t, {s1}, stt));
    CHECK_FALSE(is_almost_support_tau_tilting(t, {}, stt));

    CHECK(verify_lemma_2_2(t).pass);
    TheoremResult t32 = verify_thm_3_2(t);
    CHECK(t32.pass);
    CHECK(t32.cases == 6);
    CHECK(verify_cor_3_3(t).pass);
    CHECK(verify_thm_3_4(t).pass);
    CHECK(verify_prop_3_6(t).pass);
    TheoremResult t37 = verify_cor_3_7(t);
    CHECK(t37.pass);
    CHECK(t37.note.find("inconclusive") == std::string::npos);
    CHECK(verify_prop_4_4(t).pass);
    TheoremResult t47 = verify_thm_4_7(t);
    CHECK(t47.pass);
    CHECK(t47.applicable);
    CHECK(t47.cases == 1);
    TheoremResult t48 = verify_lemma_4_8(t);
    CHECK(t48.pass);
    CHECK(t48.cases == 10);

    BijectionReport bj = verify_bijection(t);
    CHECK(bj.pass);
    CHECK(bj.stt.size() == 5);
    CHECK(bj.fixed_points.size() == 5);
    CHECK(bj.injective);
    CHECK(bj.retraction_ok);
    CHECK(bj.image_is_fixed);
    CHECK(bj.quotient_closed);
    CHECK(bj.extension_closed);
}

TEST_CASE("A3 counts and sweeps") {
    Fixture f(kA3);
    const Tables& t = f.t;
    REQUIRE(t.n == 6);
    CHECK(t.hereditary);
    CHECK(enumerate_support_tau_tilting(t).size() == 14);
    CHECK(enumerate_tilting(t).size() == 5);
    CHECK(enumerate_fac_fixed_points(t).size() == 14);
    CHECK(verify_lemma_2_2(t).pass);
    CHECK(verify_thm_3_2(t).pass);
    CHECK(verify_thm_3_4(t).pass);
    CHECK(verify_prop_3_6(t).pass);
    CHECK(verify_cor_3_7(t).pass);
    CHECK(verify_prop_4_4(t).pass);
    TheoremResult t47 = verify_thm_4_7(t);
    CHECK(t47.pass);
    CHECK(t47.cases == 5);
    CHECK(verify_lemma_4_8(t).pass);
}

TEST_CASE("loop2 is not hereditary but the bijection still holds") {
    Fixture f(kLoop2);
    const Tables& t = f.t;
    REQUIRE(t.n == 2);
    CHECK_FALSE(t.hereditary);
    CHECK(enumerate_support_tau_tilting(t).size() == 2);
    CHECK(verify_lemma_2_2(t).pass);
    CHECK(verify_thm_3_2(t).pass);
    CHECK(verify_thm_3_4(t).pass);
    CHECK(verify_prop_3_6(t).pass);
    CHECK(verify_cor_3_7(t).pass);
    CHECK(verify_prop_4_4(t).pass);
    TheoremResult t47 = verify_thm_4_7(t);
    CHECK_FALSE(t47.applicable);
    CHECK_FALSE(t47.pass);
    CHECK(t47.note == "not hereditary");
    CHECK(verify_lemma_4_8(t).pass);
}

TEST_CASE("loop3 counts") {
    Fixture f(kLoop3);
    const Tables& t = f.t;
    REQUIRE(t.n == 3);
    CHECK_FALSE(t.hereditary);
    CHECK(enumerate_support_tau_tilting(t).size() == 2);
    CHECK(enumerate_tilting(t).size() == 1);
    CHECK(enumerate_fac_fixed_points(t).size() == 2);
    CHECK(enumerate_tau_rigid(t).size() == 2);
    CHECK(verify_lemma_2_2(t).pass);
    CHECK(verify_thm_3_2(t).pass);
    CHECK(verify_thm_3_4(t).pass);
    CHECK(verify_prop_3_6(t).pass);
    CHECK(verify_cor_3_7(t).pass);
    CHECK(verify_prop_4_4(t).pass);
    CHECK(verify_lemma_4_8(t).pass);
}

TEST_CASE("a3rel counts") {
    Fixture f(kA3Rel);
    const Tables& t = f.t;
    REQUIRE(t.n == 5);
    CHECK_FALSE(t.hereditary);
    CHECK(enumerate_support_tau_tilting(t).size() == 12);
    CHECK(enumerate_tilting(t).size() == 2);
    CHECK(enumerate_fac_fixed_points(t).size() == 12);
    CHECK(enumerate_tau_rigid(t).size() == 16);
    CHECK(verify_lemma_2_2(t).pass);
    CHECK(verify_thm_3_2(t).pass);
    CHECK(verify_thm_3_4(t).pass);
    CHECK(verify_prop_3_6(t).pass);
    CHECK(verify_cor_3_7(t).pass);
    TheoremResult t44 = verify_prop_4_4(t);
    CHECK(t44.pass);
    CHECK(t44.cases == 12);
    TheoremResult t48 = verify_lemma_4_8(t);
    CHECK(t48.pass);
    CHECK(t48.cases == 20);
}

TEST_CASE("D4 counts match the cluster combinatorics") {
    Fixture f(kD4);
    const Tables& t = f.t;
    REQUIRE(t.n == 12);
    CHECK(t.hereditary);
    // exponents 1,3,3,5 / Coxeter number 6 give 50 clusters and 20 tiltings
    CHECK(enumerate_support_tau_tilting(t).size() == 50);
    CHECK(enumerate_tilting(t).size() == 20);
    CHECK(enumerate_fac_fixed_points(t).size() == 50);
    CHECK(enumerate_tau_rigid(t).size() == 120);
    BijectionReport bj = verify_bijection(t);
    CHECK(bj.pass);
}

TEST_CASE("cached tables agree with the direct computations") {
    Fixture f(kA3Rel);
    const Tables& t = f.t;
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) {
            CHECK(t.hom[i][j] == hom_dim(t.mod(i), t.mod(j)));
            CHECK(t.ext1[i][j] == ext1_dim(t.mod(i), t.mod(j)));
            CHECK(t.ext2[i][j] == ext2_dim(t.mod(i), t.mod(j)));
            CHECK(t.hom_tau[i][j] == hom_dim(t.mod(i), t.tau_of[j]));
        }
    }
}

TEST_CASE("AR formula on hereditary algebras") {
    for (const char* text : {kA2, kA3, kD4}) {
        Fixture f(text);
        const Tables& t = f.t;
        REQUIRE(t.hereditary);
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) CHECK(t.ext1[i][j] == t.hom_tau[j][i]);
    }
}

TEST_CASE("subset helpers") {
    CHECK(subset_contains({1, 3, 5}, 3));
    CHECK_FALSE(subset_contains({1, 3, 5}, 2));
    CHECK(subset_contains_all({1, 3, 5}, {1, 5}));
    CHECK_FALSE(subset_contains_all({1, 3}, {1, 5}));
    CHECK(subset_union({1, 3}, {2, 3}) == Subset{1, 2, 3});
}

TEST_CASE("enumeration cap") {
    // 21 members would need a 2^21 sweep; the guard refuses
    Fixture f(kD4);
    Tables t = f.t;
    CHECK(t.n == 12);  // fine as is; fake a bigger n to hit the guard
    t.n = 21;
    CHECK_THROWS_AS(enumerate_support_tau_tilting(t), CapExceeded);
}
