#include "combmet/enumerator.hpp"

#include <bit>
#include <map>

#include "combmet/errors.hpp"

namespace combmet {

std::string WeightDistribution::polynomial() const {
    std::string out;
    for (int i = 0; i <= degree; ++i) {
        const std::uint64_t a = coeffs[i];
        if (a == 0) continue;
        if (!out.empty()) out += " + ";
        std::string term;
        if (a != 1) term += std::to_string(a);
        const int xe = degree - i, ye = i;
        if (xe > 0) term += xe == 1 ? "x" : "x^" + std::to_string(xe);
        if (ye > 0) term += ye == 1 ? "y" : "y^" + std::to_string(ye);
        if (term.empty()) term = "1";
        out += term;
    }
    return out.empty() ? "0" : out;
}

WeightDistribution enumerate_weights(const Covering& f, const LinearCode& c,
                                     std::uint64_t cap) {
    if (static_cast<int>(c.length()) != f.n()) throw Error("code length != n");
    WeightDistribution dist;
    dist.degree = max_weight(f);
    dist.coeffs.assign(dist.degree + 1, 0);
    for_each_codeword(
        c,
        [&](const Vector& w) {
            ++dist.coeffs[weight(f, w)];
            return true;
        },
        cap);
    return dist;
}

namespace {

// The refutation pair for an overlapping basic-set pair (A, B): i1 in the
// overlap, i0 in A \ B.
std::optional<std::pair<LinearCode, LinearCode>> overlap_pair(const Covering& f,
                                                              FieldContext ctx) {
    for (std::size_t a = 0; a < f.set_count(); ++a) {
        for (std::size_t b = 0; b < f.set_count(); ++b) {
            if (a == b) continue;
            const std::uint64_t A = f.set_mask(a), B = f.set_mask(b);
            if ((A & B) == 0) continue;
            const std::uint64_t a_minus_b = A & ~B;
            if (a_minus_b == 0) continue;  // cannot happen in a normalized covering
            const int i0 = std::countr_zero(a_minus_b);
            const int i1 = std::countr_zero(A & B);
            const std::size_t n = static_cast<std::size_t>(f.n());
            Vector e0 = Vector::unit(ctx, n, static_cast<std::size_t>(i0));
            Vector e1 = Vector::unit(ctx, n, static_cast<std::size_t>(i1));
            LinearCode c1 = LinearCode::from_generators(ctx, n, {e0});
            LinearCode c2 = LinearCode::from_generators(ctx, n, {add(e0, e1)});
            return std::make_pair(std::move(c1), std::move(c2));
        }
    }
    return std::nullopt;
}

// Exhaustive refutation search: group subspaces by distribution, return the
// first pair with equal distributions and differing dual distributions.
std::optional<std::pair<LinearCode, LinearCode>> exhaustive_pair(const Covering& f,
                                                                 FieldContext ctx,
                                                                 std::size_t max_dim,
                                                                 std::uint64_t cap) {
    struct Entry {
        LinearCode code;
        WeightDistribution dual_dist;
    };
    std::map<std::vector<std::uint64_t>, Entry> groups;
    std::optional<std::pair<LinearCode, LinearCode>> found;
    for_each_subspace(
        ctx, static_cast<std::size_t>(f.n()), max_dim,
        [&](const LinearCode& c) {
            WeightDistribution dist = enumerate_weights(f, c, cap);
            WeightDistribution dd = enumerate_weights(f, dual(c), cap);
            auto it = groups.find(dist.coeffs);
            if (it == groups.end()) {
                groups.emplace(dist.coeffs, Entry{c, std::move(dd)});
                return true;
            }
            if (it->second.dual_dist != dd) {
                found = std::make_pair(it->second.code, c);
                return false;
            }
            return true;
        },
        cap);
    return found;
}

void verify_counterexample(const Covering& f, const std::pair<LinearCode, LinearCode>& w) {
    WeightDistribution d1 = enumerate_weights(f, w.first);
    WeightDistribution d2 = enumerate_weights(f, w.second);
    if (d1 != d2) throw Error("counterexample verification failed: distributions differ");
    WeightDistribution p1 = enumerate_weights(f, dual(w.first));
    WeightDistribution p2 = enumerate_weights(f, dual(w.second));
    if (p1 == p2)
        throw Error("counterexample verification failed: dual distributions agree");
}

}  // namespace

std::pair<LinearCode, LinearCode> construct_counterexample(const Covering& f,
                                                           FieldContext ctx) {
    if (is_k_partition(f))
        throw IsKPartition("covering is a k-partition; no counterexample exists");
    auto pair = overlap_pair(f, ctx);
    if (!pair) {
        // f is a partition with unequal set sizes: no overlap to exploit,
        // fall back to the exhaustive scan.
        pair = exhaustive_pair(f, ctx, static_cast<std::size_t>(f.n()), Caps{}.max_enum);
    }
    if (!pair) throw Error("no counterexample found by exhaustive scan");
    verify_counterexample(f, *pair);
    return *pair;
}

IdentityVerdict identity_verdict_structural(const Covering& f, FieldContext ctx) {
    IdentityVerdict v;
    if (auto k = is_k_partition(f)) {
        v.admits = true;
        v.k = *k;
        return v;
    }
    v.admits = false;
    v.witness = construct_counterexample(f, ctx);
    return v;
}

IdentityVerdict identity_verdict_exhaustive(const Covering& f, FieldContext ctx,
                                            std::size_t max_dim, std::uint64_t cap) {
    IdentityVerdict v;
    auto pair = exhaustive_pair(f, ctx, max_dim, cap);
    if (pair) {
        v.admits = false;
        v.witness = std::move(pair);
    } else {
        v.admits = true;
        v.k = is_k_partition(f);
    }
    return v;
}

}  // namespace combmet
