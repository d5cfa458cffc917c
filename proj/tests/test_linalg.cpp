#include "doctest.h"
#include "taucat/matrix.hpp"

#include <random>

using namespace taucat;

namespace {

Matrix make(Field f, int r, int c, std::initializer_list<long> entries) {
    Matrix m(f, r, c);
    auto it = entries.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, *it++);
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    Field q{0};
    Scalar a(q, 1, 3), b(q, 1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK(Scalar::parse(q, "-3/4").str() == "-3/4");
    CHECK(Scalar(q, 2, 4).str() == "1/2");

    Field f5{5};
    Scalar x(f5, 3), y(f5, 4);
    CHECK((x + y).str() == "2");
    CHECK((x * y).str() == "2");
    CHECK(x.inverse().str() == "2");
    CHECK((-y).str() == "1");
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f5, 1), std::logic_error);
}

TEST_CASE("echelon, rank, kernel") {
    Field q{0};
    auto m = make(q, 3, 4, {1, 2, 3, 4,
                            2, 4, 6, 8,
                            1, 0, 1, 0});
    CHECK(m.rank() == 2);
    CHECK(m.nullity() == 2);

    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Vec img = m.apply(v);
        for (const auto& s : img) CHECK(s.is_zero());
    }

    auto ech = m.echelon();
    CHECK(ech.rank == 2);
    REQUIRE(ech.pivot_cols.size() == 2);
    CHECK(ech.pivot_cols[0] == 0);
    CHECK(ech.pivot_cols[1] == 1);
    // rref rows start with 1 in their pivot column
    CHECK(ech.rref.at(0, 0).is_one());
    CHECK(ech.rref.at(1, 1).is_one());
    CHECK(ech.rref.at(0, 1).is_zero());
}

TEST_CASE("solve and inverse") {
    Field q{0};
    auto a = make(q, 2, 2, {2, 1,
                            1, 1});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());

    Vec b = {Scalar(q, 3), Scalar(q, 2)};
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);

    auto sing = make(q, 2, 2, {1, 2,
                               2, 4});
    CHECK_FALSE(sing.invertible());
    Vec off = {Scalar(q, 1), Scalar(q, 0)};
    CHECK_FALSE(sing.solve(off).has_value());
    Vec on = {Scalar(q, 1), Scalar(q, 2)};
    CHECK(sing.solve(on).has_value());
}

TEST_CASE("solve_matrix gives columnwise solutions") {
    Field f7{7};
    auto a = make(f7, 2, 3, {1, 2, 3,
                             0, 1, 4});
    auto b = make(f7, 2, 2, {5, 1,
                             2, 0});
    auto x = a.solve_matrix(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
}

TEST_CASE("stacking and block diagonal") {
    Field q{0};
    auto a = make(q, 1, 2, {1, 2});
    auto b = make(q, 1, 2, {3, 4});
    auto h = Matrix::hstack(a, b);
    CHECK(h.rows() == 1);
    CHECK(h.cols() == 4);
    CHECK(h.at(0, 3).str() == "4");
    auto v = Matrix::vstack(a, b);
    CHECK(v.rows() == 2);
    CHECK(v.at(1, 0).str() == "3");
    auto d = Matrix::block_diag(a, b);
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 4);
    CHECK(d.at(0, 2).is_zero());
    CHECK(d.at(1, 2).str() == "3");
}

TEST_CASE("quotient space projects and sections") {
    Field q{0};
    // quotient of k^3 by span{(1,1,0)}
    std::vector<Vec> sp = {{Scalar(q, 1), Scalar(q, 1), Scalar(q, 0)}};
    auto qs = quotient_space(q, 3, sp);
    CHECK(qs.dim() == 2);
    CHECK((qs.pi * qs.sigma).is_identity());
    // spanning vector maps to zero
    Vec z = qs.pi.apply(sp[0]);
    for (const auto& s : z) CHECK(s.is_zero());
    CHECK(quotient_dim(q, 3, sp) == 2);
    CHECK(span_rank(q, 3, sp) == 1);
    CHECK(span_basis(q, 3, sp).size() == 1);
}

TEST_CASE("randomized inverse round trips") {
    std::mt19937 rng(20240811);
    for (Field f : {Field{0}, Field{5}}) {
        for (int trial = 0; trial < 30; ++trial) {
            int n = 1 + static_cast<int>(rng() % 4);
            Matrix m(f, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = Scalar(f, static_cast<long>(rng() % 7) - 3);
            if (!m.invertible()) {
                CHECK_FALSE(m.inverse().has_value());
                continue;
            }
            auto inv = m.inverse();
            REQUIRE(inv.has_value());
            CHECK((m * *inv).is_identity());
            CHECK(m.transpose().rank() == n);
        }
    }
}

TEST_CASE("rank is invariant under transpose") {
    std::mt19937 rng(7);
    Field f3{3};
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        Matrix m(f3, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f3, static_cast<long>(rng() % 3));
        CHECK(m.rank() == m.transpose().rank());
        CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == c);
    }
}
