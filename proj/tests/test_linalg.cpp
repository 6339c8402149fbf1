#include <catch2/catch_amalgamated.hpp>

#include "hstar/linalg.hpp"

using namespace hstar;

TEST_CASE("gaussian solve with free variables pinned to zero", "[linalg]") {
    // x + y + z = 3, y - z = 1 with elimination order z, y, x:
    // pivots on z then y, x stays free = 0 -> z = 1, y = 2, x = 0.
    RatMat a = {{Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(-1)}};
    RatVec b = {Rat(3), Rat(1)};
    auto x = gauss_solve_free_zero(a, b, {2, 1, 0});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 0);
    CHECK((*x)[1] == 2);
    CHECK((*x)[2] == 1);

    // Inconsistent system.
    RatMat a2 = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    RatVec b2 = {Rat(1), Rat(3)};
    CHECK_FALSE(gauss_solve_free_zero(a2, b2, {0, 1}).has_value());
}

TEST_CASE("rank and determinant of small matrices", "[linalg]") {
    RatMat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rat_rank(a) == 1);
    RatMat b = {{Rat(1), Rat(0), Rat(3)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(4)}};
    CHECK(rat_rank(b) == 2);

    CHECK(bareiss_det({{Int(3)}}) == 3);
    CHECK(bareiss_det({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    // Vandermonde on 1,2,3: det = (2-1)(3-1)(3-2) = 2.
    IntMat v = {{Int(1), Int(1), Int(1)},
                {Int(1), Int(2), Int(4)},
                {Int(1), Int(3), Int(9)}};
    CHECK(bareiss_det(v) == 2);
}

TEST_CASE("adjugate satisfies A adj(A) = det(A) I", "[linalg]") {
    IntMat a = {{Int(2), Int(0), Int(1)},
                {Int(1), Int(1), Int(0)},
                {Int(0), Int(3), Int(1)}};
    Int det = bareiss_det(a);
    REQUIRE(det != 0);
    IntMat adj = adjugate(a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * adj[k][j];
            CHECK(s == (i == j ? det : Int(0)));
        }
}

TEST_CASE("Smith invariant factors", "[linalg]") {
    auto f = smith_invariant_factors({{Int(2), Int(0)}, {Int(0), Int(3)}});
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 6);

    auto id = smith_invariant_factors({{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(id == IntVec{Int(1), Int(1)});

    // Non-square: a 2x3 matrix of rank 2 with unimodular 2x2 minors.
    auto g = smith_invariant_factors({{Int(1), Int(0), Int(-1)}, {Int(0), Int(1), Int(-1)}});
    CHECK(g == IntVec{Int(1), Int(1)});

    auto h = smith_invariant_factors({{Int(4), Int(6)}, {Int(2), Int(4)}});
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 2);  // gcd of entries
    CHECK(h[0] * h[1] == 4);  // |det|
}

TEST_CASE("exact simplex method on equality-form programs", "[linalg]") {
    // max x + y  s.t.  x + s1 = 2, y + s2 = 3, all vars >= 0  ->  5.
    IntMat A = {{Int(1), Int(0), Int(1), Int(0)}, {Int(0), Int(1), Int(0), Int(1)}};
    IntVec b = {Int(2), Int(3)};
    IntVec c = {Int(1), Int(1), Int(0), Int(0)};
    RatVec sol;
    auto v = lp_maximize(A, b, c, &sol);
    REQUIRE(v.has_value());
    CHECK(*v == 5);
    REQUIRE(sol.size() == 4);
    CHECK(sol[0] == 2);
    CHECK(sol[1] == 3);

    // Infeasible: x + y = -1 with x, y >= 0.
    CHECK_FALSE(lp_maximize({{Int(1), Int(1)}}, {Int(-1)}, {Int(0), Int(0)}).has_value());
    CHECK(lp_feasible(A, b));
    CHECK_FALSE(lp_feasible({{Int(1), Int(1)}}, {Int(-1)}));
}

TEST_CASE("simplex falls back to exact big integers on overflow", "[linalg]") {
    // Same program scaled by 2^70: the int64 fast path cannot represent the
    // data, so the arbitrary-precision path must produce the exact optimum.
    Int big = Int(1) << 70;
    IntMat A = {{big, Int(0), big, Int(0)}, {Int(0), big, Int(0), big}};
    IntVec b = {2 * big, 3 * big};
    IntVec c = {Int(1), Int(1), Int(0), Int(0)};
    auto v = lp_maximize(A, b, c);
    REQUIRE(v.has_value());
    CHECK(*v == 5);
}
