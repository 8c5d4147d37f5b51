#include <doctest.h>

#include <random>

#include "combmet/gf.hpp"
#include "oracles.hpp"

using namespace combmet;

TEST_CASE("field context validates the modulus") {
    CHECK_NOTHROW(FieldContext(2));
    CHECK_NOTHROW(FieldContext(251));
    CHECK_THROWS_AS(FieldContext(1), Error);
    CHECK_THROWS_AS(FieldContext(4), Error);
    CHECK_THROWS_AS(FieldContext(9), Error);
    CHECK_THROWS_AS(FieldContext(255), Error);
}

TEST_CASE("field arithmetic round trips") {
    for (int q : {2, 3, 5, 7, 251}) {
        FieldContext ctx(q);
        for (int a = 1; a < q; ++a) {
            CHECK(ctx.mul(static_cast<std::uint8_t>(a), ctx.inv(static_cast<std::uint8_t>(a))) == 1);
            CHECK(ctx.add(static_cast<std::uint8_t>(a), ctx.neg(static_cast<std::uint8_t>(a))) == 0);
        }
        // primitive root generates everything
        std::uint8_t g = ctx.primitive_root();
        std::vector<bool> hit(q, false);
        std::uint8_t x = 1;
        for (int i = 0; i < q - 1; ++i) {
            hit[x] = true;
            x = ctx.mul(x, g);
        }
        for (int a = 1; a < q; ++a) CHECK(hit[a]);
    }
}

TEST_CASE("rref: identity is fixed") {
    FieldContext ctx(2);
    Matrix id = Matrix::identity(ctx, 2);
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref: duplicate rows collapse") {
    FieldContext ctx(2);
    Matrix m(ctx, 2, 4, {1, 1, 0, 0, 1, 1, 0, 0});
    RrefResult r = rref(m);
    CHECK(r.reduced.rows() == 1);
    CHECK(r.reduced.row(0) == Vector(ctx, {1, 1, 0, 0}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref over F_3: proportional rows have rank 1") {
    // (1,2) = 2*(2,1) mod 3; eliminating by hand leaves the single row (1,2).
    FieldContext ctx(3);
    Matrix m(ctx, 2, 2, {2, 1, 1, 2});
    RrefResult r = rref(m);
    CHECK(r.reduced.rows() == 1);
    CHECK(r.reduced.row(0) == Vector(ctx, {1, 2}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref preserves the row space") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 5}) {
        FieldContext ctx(q);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            std::vector<std::uint8_t> e(rows * cols);
            for (auto& v : e) v = static_cast<std::uint8_t>(rng() % q);
            Matrix m(ctx, rows, cols, e);
            RrefResult r = rref(m);
            for (std::size_t i = 0; i < rows; ++i) CHECK(in_row_space(r.reduced, m.row(i)));
            for (std::size_t i = 0; i < r.reduced.rows(); ++i)
                CHECK(in_row_space(m, r.reduced.row(i)));
        }
    }
}

TEST_CASE("nullspace matches full-enumeration orthogonality") {
    FieldContext ctx(2);

    SUBCASE("identity has zero nullspace") {
        CHECK(nullspace(Matrix::identity(ctx, 3)).rows() == 0);
    }
    SUBCASE("single row (1,1)") {
        Matrix m(ctx, 1, 2, {1, 1});
        Matrix ns = nullspace(m);
        CHECK(ns.rows() == 1);
        CHECK(ns.row(0) == Vector(ctx, {1, 1}));
        CHECK(oracles::naive_orthogonal_vectors(m).size() == 2);  // 0 and (1,1)
    }
    SUBCASE("single row (1,1,0,0) has a 3-dimensional nullspace") {
        Matrix m(ctx, 1, 4, {1, 1, 0, 0});
        Matrix ns = nullspace(m);
        CHECK(ns.rows() == 3);
        // All 8 oracle vectors must lie in the row space of the basis.
        auto orth = oracles::naive_orthogonal_vectors(m);
        CHECK(orth.size() == 8);
        for (const auto& v : orth) CHECK(in_row_space(ns, v));
        for (const auto& want : {Vector(ctx, {1, 1, 0, 0}), Vector(ctx, {0, 0, 1, 0}),
                                 Vector(ctx, {0, 0, 0, 1})})
            CHECK(in_row_space(ns, want));
    }
}

TEST_CASE("nullspace is orthogonal to the row space, ranks add to n") {
    std::mt19937 rng(11);
    for (int q : {2, 3}) {
        FieldContext ctx(q);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 5;
            std::vector<std::uint8_t> e(rows * cols);
            for (auto& v : e) v = static_cast<std::uint8_t>(rng() % q);
            Matrix m(ctx, rows, cols, e);
            Matrix ns = nullspace(m);
            CHECK(rank(m) + ns.rows() == cols);
            for (std::size_t i = 0; i < ns.rows(); ++i)
                for (std::size_t r = 0; r < rows; ++r)
                    CHECK(dot(ns.row(i), m.row(r)) == 0);
        }
    }
}

TEST_CASE("invert") {
    FieldContext ctx(2);
    SUBCASE("identity") {
        CHECK(invert(Matrix::identity(ctx, 3)) == Matrix::identity(ctx, 3));
    }
    SUBCASE("swap is an involution") {
        Matrix m(ctx, 2, 2, {0, 1, 1, 0});
        CHECK(invert(m) == m);
    }
    SUBCASE("upper unitriangular over F_2 is its own inverse") {
        Matrix m(ctx, 2, 2, {1, 1, 0, 1});
        Matrix inv = invert(m);
        CHECK(inv == m);
        CHECK(mul(m, inv) == Matrix::identity(ctx, 2));
    }
    SUBCASE("invert fails exactly when rank drops") {
        for (int q : {2, 3}) {
            FieldContext f(q);
            // all 2x2 matrices
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    for (int c = 0; c < q; ++c)
                        for (int d = 0; d < q; ++d) {
                            Matrix m(f, 2, 2,
                                     {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                      static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)});
                            auto inv = try_invert(m);
                            CHECK(inv.has_value() == (rank(m) == 2));
                            if (inv) CHECK(mul(*inv, m) == Matrix::identity(f, 2));
                        }
        }
    }
}

TEST_CASE("vector enumeration is lexicographic and complete") {
    SUBCASE("q=2, n=1") {
        auto vs = enumerate_vectors(FieldContext(2), 1);
        REQUIRE(vs.size() == 2);
        CHECK(vs[0] == Vector(FieldContext(2), {0}));
        CHECK(vs[1] == Vector(FieldContext(2), {1}));
    }
    SUBCASE("q=2, n=2") { CHECK(enumerate_vectors(FieldContext(2), 2).size() == 4); }
    SUBCASE("q=3, n=2") {
        auto vs = enumerate_vectors(FieldContext(3), 2);
        REQUIRE(vs.size() == 9);
        CHECK(vs.front() == Vector(FieldContext(3), {0, 0}));
        CHECK(vs.back() == Vector(FieldContext(3), {2, 2}));
    }
    SUBCASE("cap is enforced") {
        CHECK_THROWS_AS(enumerate_vectors(FieldContext(2), 30, 1 << 20), CapExceeded);
    }
}

TEST_CASE("row-vector application matches matrix rows") {
    FieldContext ctx(3);
    Matrix m(ctx, 2, 3, {1, 2, 0, 0, 1, 1});
    CHECK(apply(Vector::unit(ctx, 2, 0), m) == m.row(0));
    CHECK(apply(Vector::unit(ctx, 2, 1), m) == m.row(1));
    CHECK(apply(Vector(ctx, {1, 2}), m) == Vector(ctx, {1, 1, 2}));
}
