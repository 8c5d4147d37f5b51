#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "combmet/enumerator.hpp"
#include "oracles.hpp"

using namespace combmet;

namespace {
Covering cov(int n, std::vector<std::vector<int>> sets) {
    return normalize(n, sets).covering;
}
}  // namespace

TEST_CASE("weight distributions") {
    FieldContext ctx(2);
    SUBCASE("zero code") {
        Covering h = cov(4, {{1}, {2}, {3}, {4}});
        auto d = enumerate_weights(h, LinearCode::from_generators(ctx, 4, {}));
        CHECK(d.degree == 4);
        CHECK(d.coeffs == std::vector<std::uint64_t>{1, 0, 0, 0, 0});
    }
    SUBCASE("Hamming weight-2 pair") {
        Covering h = cov(4, {{1}, {2}, {3}, {4}});
        auto c = LinearCode::from_generators(ctx, 4, {Vector(ctx, {1, 1, 0, 0})});
        auto d = enumerate_weights(h, c);
        CHECK(d.coeffs == std::vector<std::uint64_t>{1, 0, 1, 0, 0});
    }
    SUBCASE("burst covering, span{e_1}") {
        Covering burst = cov(4, {{1, 2}, {2, 3}, {3, 4}});
        auto c = LinearCode::from_generators(ctx, 4, {Vector::unit(ctx, 4, 0)});
        auto d = enumerate_weights(burst, c);
        CHECK(d.degree == 2);
        CHECK(d.coeffs == std::vector<std::uint64_t>{1, 1, 0});
    }
    SUBCASE("coefficients sum to q^k with A_0 = 1") {
        for (int q : {2, 3}) {
            FieldContext f(q);
            Covering burst = cov(4, {{1, 2}, {2, 3}, {3, 4}});
            for (const auto& c : all_subspaces(f, 4, 2)) {
                auto d = enumerate_weights(burst, c);
                std::uint64_t sum = 0, expect = 1;
                for (auto a : d.coeffs) sum += a;
                for (std::size_t i = 0; i < c.dim(); ++i) expect *= q;
                CHECK(sum == expect);
                CHECK(d.coeffs[0] == 1);
            }
        }
    }
    SUBCASE("polynomial rendering") {
        WeightDistribution d{2, {1, 1, 0}};
        CHECK(d.polynomial() == "x^2 + xy");
        WeightDistribution e{2, {1, 2, 0}};
        CHECK(e.polynomial() == "x^2 + 2xy");
    }
}

TEST_CASE("structural identity verdicts") {
    FieldContext ctx(2);
    SUBCASE("Hamming admits with k = 1") {
        auto v = identity_verdict_structural(cov(3, {{1}, {2}, {3}}), ctx);
        CHECK(v.admits);
        CHECK(v.k == 1);
        CHECK(!v.witness);
    }
    SUBCASE("2-blocks admit with k = 2") {
        auto v = identity_verdict_structural(cov(4, {{1, 2}, {3, 4}}), ctx);
        CHECK(v.admits);
        CHECK(v.k == 2);
    }
    SUBCASE("burst covering is refuted with the documented witness") {
        auto v = identity_verdict_structural(cov(4, {{1, 2}, {2, 3}, {3, 4}}), ctx);
        REQUIRE(!v.admits);
        REQUIRE(v.witness);
        CHECK(v.witness->first ==
              LinearCode::from_generators(ctx, 4, {Vector::unit(ctx, 4, 0)}));
        CHECK(v.witness->second ==
              LinearCode::from_generators(ctx, 4, {Vector(ctx, {1, 1, 0, 0})}));
    }
}

TEST_CASE("constructed counterexamples verify their own postconditions") {
    SUBCASE("overlap construction, q in {2, 3}") {
        for (int q : {2, 3}) {
            FieldContext ctx(q);
            Covering burst = cov(4, {{1, 2}, {2, 3}, {3, 4}});
            auto [c1, c2] = construct_counterexample(burst, ctx);
            auto d1 = enumerate_weights(burst, c1);
            auto d2 = enumerate_weights(burst, c2);
            CHECK(d1 == d2);
            // 1 + (q-1) x^{D-1} y padded to the global degree
            CHECK(d1.coeffs[0] == 1);
            CHECK(d1.coeffs[1] == static_cast<std::uint64_t>(q - 1));
            CHECK(enumerate_weights(burst, dual(c1)) != enumerate_weights(burst, dual(c2)));
        }
    }
    SUBCASE("non-uniform partition falls back to the exhaustive search") {
        FieldContext ctx(2);
        Covering f = cov(3, {{1, 2}, {3}});
        auto [c1, c2] = construct_counterexample(f, ctx);
        CHECK(enumerate_weights(f, c1) == enumerate_weights(f, c2));
        CHECK(enumerate_weights(f, dual(c1)) != enumerate_weights(f, dual(c2)));
    }
    SUBCASE("k-partitions admit no counterexample") {
        FieldContext ctx(2);
        CHECK_THROWS_AS(construct_counterexample(cov(2, {{1}, {2}}), ctx), IsKPartition);
    }
}

TEST_CASE("the dual-translation map certifies the witness") {
    // T(c) = c - c_{i1} e_{i0} maps dual(C1) onto dual(C2) bijectively but
    // breaks the weight of the indicator of B.
    for (int q : {2, 3}) {
        FieldContext ctx(q);
        Covering burst = cov(4, {{1, 2}, {2, 3}, {3, 4}});
        // Construction picks A = {1,2}, B = {2,3}: i0 = 1, i1 = 2 (1-based).
        auto c1 = LinearCode::from_generators(ctx, 4, {Vector::unit(ctx, 4, 0)});
        auto c2 = LinearCode::from_generators(ctx, 4, {Vector(ctx, {1, 1, 0, 0})});
        auto d1 = dual(c1), d2 = dual(c2);

        std::set<std::string> image, target;
        for (const auto& w : codewords(d2))
            target.insert(std::string(w.entries().begin(), w.entries().end()));
        for (const auto& c : codewords(d1)) {
            Vector t = sub(c, scale(c[1], Vector::unit(ctx, 4, 0)));
            CHECK(d2.contains(t));
            image.insert(std::string(t.entries().begin(), t.entries().end()));
        }
        CHECK(image == target);  // bijection

        Vector indicator(ctx, {0, 1, 1, 0});  // sum of e_i over B = {2,3}
        CHECK(d1.contains(indicator));
        CHECK(weight(burst, indicator) == 1);
        Vector moved = sub(indicator, scale(indicator[1], Vector::unit(ctx, 4, 0)));
        CHECK(weight(burst, moved) > 1);
    }
}

TEST_CASE("exhaustive identity verdicts") {
    FieldContext ctx(2);
    SUBCASE("2-blocks: no violating pair among all 67 subspaces") {
        auto v = identity_verdict_exhaustive(cov(4, {{1, 2}, {3, 4}}), ctx, 4);
        CHECK(v.admits);
        CHECK(v.k == 2);
    }
    SUBCASE("burst covering: a violating pair exists") {
        auto v = identity_verdict_exhaustive(cov(4, {{1, 2}, {2, 3}, {3, 4}}), ctx, 4);
        REQUIRE(!v.admits);
        REQUIRE(v.witness);
        Covering burst = cov(4, {{1, 2}, {2, 3}, {3, 4}});
        CHECK(enumerate_weights(burst, v.witness->first) ==
              enumerate_weights(burst, v.witness->second));
        CHECK(enumerate_weights(burst, dual(v.witness->first)) !=
              enumerate_weights(burst, dual(v.witness->second)));
    }
    SUBCASE("classical MacWilliams for F_2^2") {
        auto v = identity_verdict_exhaustive(cov(2, {{1}, {2}}), ctx, 2);
        CHECK(v.admits);
    }
}

TEST_CASE("structural and exhaustive verdicts agree for every covering of [3]") {
    FieldContext ctx(2);
    for (const auto& f : all_normalized_coverings(3)) {
        auto s = identity_verdict_structural(f, ctx);
        auto e = identity_verdict_exhaustive(f, ctx, 3);
        CHECK(s.admits == e.admits);
    }
}
