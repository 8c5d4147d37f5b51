#include <doctest.h>

#include <set>
#include <string>

#include "combmet/code.hpp"
#include "oracles.hpp"

using namespace combmet;

TEST_CASE("from_generators canonicalizes") {
    FieldContext ctx(2);
    SUBCASE("single unit vector") {
        auto c = LinearCode::from_generators(ctx, 4, {Vector::unit(ctx, 4, 0)});
        CHECK(c.dim() == 1);
        CHECK(c.generator().row(0) == Vector::unit(ctx, 4, 0));
    }
    SUBCASE("duplicates collapse") {
        auto c = LinearCode::from_generators(
            ctx, 4, {Vector::unit(ctx, 4, 0), Vector::unit(ctx, 4, 0)});
        CHECK(c.dim() == 1);
    }
    SUBCASE("already reduced row over F_3") {
        FieldContext f3(3);
        auto c = LinearCode::from_generators(f3, 3, {Vector(f3, {1, 1, 0})});
        CHECK(c.dim() == 1);
        CHECK(c.generator().row(0) == Vector(f3, {1, 1, 0}));
    }
    SUBCASE("zero span is allowed") {
        auto c = LinearCode::from_generators(ctx, 3, {});
        CHECK(c.dim() == 0);
        CHECK(codewords(c).size() == 1);
    }
}

TEST_CASE("codeword enumeration") {
    FieldContext ctx(2);
    SUBCASE("one generator yields two words") {
        auto c = LinearCode::from_generators(ctx, 4, {Vector(ctx, {1, 1, 0, 0})});
        auto words = codewords(c);
        REQUIRE(words.size() == 2);
        CHECK(words[0] == Vector::zero(ctx, 4));
        CHECK(words[1] == Vector(ctx, {1, 1, 0, 0}));
    }
    SUBCASE("full plane over F_3") {
        FieldContext f3(3);
        auto c = LinearCode::from_generators(
            f3, 2, {Vector::unit(f3, 2, 0), Vector::unit(f3, 2, 1)});
        auto words = codewords(c);
        std::set<std::string> distinct;
        for (const auto& w : words)
            distinct.insert(std::string(w.entries().begin(), w.entries().end()));
        CHECK(words.size() == 9);
        CHECK(distinct.size() == 9);
    }
}

TEST_CASE("dual codes") {
    FieldContext ctx(2);
    SUBCASE("dual of the zero code is everything") {
        auto c = LinearCode::from_generators(ctx, 3, {});
        CHECK(dual(c).dim() == 3);
    }
    SUBCASE("dual of span{e_1} in F_2^4") {
        auto c = LinearCode::from_generators(ctx, 4, {Vector::unit(ctx, 4, 0)});
        auto d = dual(c);
        CHECK(d.dim() == 3);
        // Full-enumeration oracle: exactly the vectors orthogonal to e_1.
        auto orth = oracles::naive_orthogonal_vectors(c.generator());
        CHECK(orth.size() == 8);
        for (const auto& v : orth) CHECK(d.contains(v));
    }
    SUBCASE("dual of span{e_1+e_2} in F_2^2") {
        auto c = LinearCode::from_generators(ctx, 2, {Vector(ctx, {1, 1})});
        auto d = dual(c);
        CHECK(d.dim() == 1);
        CHECK(d.contains(Vector(ctx, {1, 1})));
    }
}

TEST_CASE("dual is an involution and duals are orthogonal") {
    for (int q : {2, 3}) {
        FieldContext ctx(q);
        const std::size_t n = q == 2 ? 4 : 3;
        for (const auto& c : all_subspaces(ctx, n, n)) {
            LinearCode d = dual(c);
            CHECK(c.dim() + d.dim() == n);
            CHECK(dual(d) == c);
            for (const auto& u : codewords(c))
                for (const auto& v : codewords(d)) CHECK(dot(u, v) == 0);
        }
    }
}

TEST_CASE("subspace enumeration") {
    FieldContext ctx(2);
    SUBCASE("5 subspaces of F_2^2") { CHECK(all_subspaces(ctx, 2, 2).size() == 5); }
    SUBCASE("67 subspaces of F_2^4") { CHECK(all_subspaces(ctx, 4, 4).size() == 67); }
    SUBCASE("only the zero space at max_dim 0") {
        auto ss = all_subspaces(ctx, 4, 0);
        REQUIRE(ss.size() == 1);
        CHECK(ss[0].dim() == 0);
    }
    SUBCASE("canonical generators are pairwise distinct") {
        for (int q : {2, 3}) {
            FieldContext f(q);
            const std::size_t n = q == 2 ? 4 : 3;
            auto ss = all_subspaces(f, n, n);
            std::set<std::string> keys;
            std::vector<std::size_t> per_dim(n + 1, 0);
            for (const auto& c : ss) {
                keys.insert(std::to_string(c.dim()) + ":" + c.generator().bytes_key());
                ++per_dim[c.dim()];
            }
            CHECK(keys.size() == ss.size());
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(per_dim[k] == oracles::gaussian_binomial(
                                        static_cast<std::uint64_t>(q),
                                        static_cast<int>(n), static_cast<int>(k)));
        }
    }
    SUBCASE("cap is enforced") {
        CHECK_THROWS_AS(all_subspaces(FieldContext(2), 4, 4, 10), CapExceeded);
    }
}

TEST_CASE("library subspace counts match the oracle formula") {
    CHECK(subspace_count(2, 4, 0) == 1);
    CHECK(subspace_count(2, 4, 1) == 15);
    CHECK(subspace_count(2, 4, 2) == 35);
    CHECK(subspace_count(2, 4, 3) == 15);
    CHECK(subspace_count(2, 4, 4) == 1);
    for (int q : {2, 3, 5})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(subspace_count(q, n, k) ==
                      oracles::gaussian_binomial(static_cast<std::uint64_t>(q), n, k));
}
