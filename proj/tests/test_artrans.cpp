#include "doctest.h"
#include "taucat/algebra.hpp"
#include "taucat/artrans.hpp"
#include "taucat/decompose.hpp"

using namespace taucat;

namespace {

const char* kA2 = "field: Q\nvertices: 1 2\narrows: a: 1 -> 2\n";
const char* kA3 = "field: Q\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\n";
const char* kLoop3 = "field: Q\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x\n";

}  // namespace

TEST_CASE("opposite algebra reverses arrows and relations") {
    auto a = parse_algebra(
        "vertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: b*a\n");
    auto op = build_opposite(a);
    CHECK(op.dim() == a.dim());
    CHECK(op.quiver().arrows[0].src == 1);
    CHECK(op.quiver().arrows[0].tgt == 0);
    REQUIRE(op.relations().size() == 1);
    // reversed path: over op, a*b (first b then a) is the zero relation
    CHECK(op.relations()[0].terms[0].arrows == std::vector<int>{1, 0});
}

TEST_CASE("duality is a contravariant involution on dimensions") {
    auto a = parse_algebra(kA3);
    OppositeBridge br(a);
    auto p1 = projective(a, 0);
    auto d = dual_module(a, br.op, p1);
    CHECK(d.dims == p1.dims);
    auto back = dual_module(br.op, a, d);
    CHECK(is_isomorphic(back, p1));
    // D sends projectives over A to injectives over A^op
    CHECK(hom_dim(d, injective(br.op, 0)) > 0);
}

TEST_CASE("transpose kills projectives") {
    auto a = parse_algebra(kA2);
    OppositeBridge br(a);
    CHECK(transpose_module(a, br.op, projective(a, 0)).is_zero());
    CHECK(transpose_module(a, br.op, projective(a, 1)).is_zero());
    CHECK(tau(br, projective(a, 0)).is_zero());
}

TEST_CASE("tau on A2") {
    auto a = parse_algebra(kA2);
    OppositeBridge br(a);
    auto s1 = simple(a, 0), s2 = simple(a, 1);
    // the AR quiver of A2: tau S1 = S2
    auto t = tau(br, s1);
    CHECK(is_isomorphic(t, s2));
    // S2 = P2 is projective
    CHECK(tau(br, s2).is_zero());
    // tau^{-1} S2 = S1
    CHECK(is_isomorphic(tau_inverse(br, s2), s1));
    // tau^{-1} of an injective vanishes; I1 = S1 here
    CHECK(tau_inverse(br, s1).is_zero());
}

TEST_CASE("tau round trips on non-projectives") {
    auto a = parse_algebra(kA3);
    OppositeBridge br(a);
    std::vector<Module> nonproj = {simple(a, 0), simple(a, 1)};
    // the (1,1,0) indecomposable: quotient of P1 by its socle
    auto p1 = projective(a, 0);
    auto m110 = socle_quotient(p1).tgt;
    CHECK(m110.dims == std::vector<int>{1, 1, 0});
    nonproj.push_back(m110);
    for (const auto& m : nonproj) {
        auto t = tau(br, m);
        CHECK_FALSE(t.is_zero());
        CHECK(is_isomorphic(tau_inverse(br, t), m));
    }
    // explicit value: tau S1 = S2 needs one knit step; over A3,
    // 0 -> S2 -> P1/soc -> S1 -> 0 is the AR sequence
    CHECK(is_isomorphic(tau(br, simple(a, 0)), simple(a, 1)));
}

TEST_CASE("selfinjective loop algebra has tau close to identity") {
    auto l = parse_algebra(kLoop3);
    OppositeBridge br(l);
    auto s = simple(l, 0);
    auto r2 = radical_inclusion(projective(l, 0)).src;  // k[x]/x^2
    // for k[x]/x^3 (symmetric algebra), tau = Omega^2 = identity on non-projectives
    CHECK(is_isomorphic(tau(br, s), s));
    CHECK(is_isomorphic(tau(br, r2), r2));
    CHECK(tau(br, projective(l, 0)).is_zero());
}
