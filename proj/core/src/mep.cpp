#include "combmet/mep.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "combmet/enumerator.hpp"
#include "combmet/errors.hpp"
#include "combmet/metric.hpp"

namespace combmet {

namespace {

// Coefficient combination c (base-q digits, digit i = coefficient of basis
// row i) applied to the given rows.
Vector combine(FieldContext ctx, const std::vector<Vector>& rows, std::uint64_t c,
               std::size_t n) {
    Vector out = Vector::zero(ctx, n);
    for (std::size_t i = 0; i < rows.size(); ++i, c /= ctx.q()) {
        const std::uint8_t coef = static_cast<std::uint8_t>(c % ctx.q());
        if (coef != 0) out = add(out, scale(coef, rows[i]));
    }
    return out;
}

}  // namespace

std::optional<LocalEquivalence> make_local_equivalence(const Covering& f,
                                                       const LinearCode& source,
                                                       const LinearCode& target,
                                                       std::vector<Vector> images,
                                                       std::uint64_t cap) {
    const FieldContext ctx = source.context();
    const std::size_t k = source.dim();
    const std::size_t n = source.length();
    if (images.size() != k) throw Error("one image per source basis row required");
    if (target.dim() != k) return std::nullopt;

    // Images must span the target (k independent vectors inside it).
    Matrix image_matrix = Matrix::from_rows(ctx, images, n);
    if (rank(image_matrix) != k) return std::nullopt;
    for (const auto& v : images)
        if (!target.contains(v)) return std::nullopt;

    // Exhaustive weight preservation over all q^k codewords.
    const std::uint64_t total = checked_pow(ctx.q(), static_cast<int>(k), cap,
                                            "local equivalence verification");
    std::vector<Vector> source_rows;
    for (std::size_t i = 0; i < k; ++i) source_rows.push_back(source.generator().row(i));
    for (std::uint64_t c = 0; c < total; ++c) {
        const Vector s = combine(ctx, source_rows, c, n);
        const Vector t = combine(ctx, images, c, n);
        if (weight(f, s) != weight(f, t)) return std::nullopt;
    }
    return LocalEquivalence{source, target, std::move(images)};
}

Vector map_codeword(const LocalEquivalence& t, const Vector& codeword) {
    const FieldContext ctx = t.source.context();
    // Solve for the coefficients of codeword over the source's RREF basis:
    // with pivots p_i, the coefficient of row i is codeword[p_i].
    RrefResult r = rref(t.source.generator());
    Vector out = Vector::zero(ctx, t.source.length());
    Vector residue = codeword;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        const std::uint8_t c = residue[r.pivots[i]];
        if (c != 0) {
            out = add(out, scale(c, t.images[i]));
            residue = sub(residue, scale(c, r.reduced.row(i)));
        }
    }
    if (!residue.is_zero()) throw Error("vector is not a source codeword");
    return out;
}

bool for_each_local_equivalence(const Covering& f, const LinearCode& c1,
                                const LinearCode& c2,
                                const std::function<bool(const LocalEquivalence&)>& visit,
                                const Caps& caps) {
    if (c1.context() != c2.context() || c1.length() != c2.length())
        throw Error("codes live in different spaces");
    if (c1.dim() != c2.dim()) throw Error("local equivalences require equal dimensions");
    const FieldContext ctx = c1.context();
    const std::size_t k = c1.dim();

    if (k == 0) {
        // The empty map is the one (vacuous) local equivalence.
        return visit(LocalEquivalence{c1, c2, {}});
    }

    // Ordered bases of c2, chosen codeword by codeword with an independence
    // check, lexicographic in the target's coefficient enumeration.
    std::vector<Vector> words = codewords(c2, caps.max_enum);
    std::vector<Vector> chosen;
    std::function<bool()> rec = [&]() {
        if (chosen.size() == k) {
            auto t = make_local_equivalence(f, c1, c2, chosen, caps.max_enum);
            if (t) return visit(*t);
            return true;
        }
        for (const Vector& w : words) {
            if (w.is_zero()) continue;
            std::vector<Vector> trial = chosen;
            trial.push_back(w);
            if (rank(Matrix::from_rows(ctx, trial, c1.length())) != trial.size()) continue;
            chosen.push_back(w);
            const bool keep_going = rec();
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec();
}

std::vector<LocalEquivalence> find_local_equivalences(const Covering& f,
                                                      const LinearCode& c1,
                                                      const LinearCode& c2,
                                                      std::size_t limit,
                                                      const Caps& caps) {
    std::vector<LocalEquivalence> out;
    for_each_local_equivalence(
        f, c1, c2,
        [&](const LocalEquivalence& t) {
            out.push_back(t);
            return out.size() < limit;
        },
        caps);
    return out;
}

std::optional<Isometry> find_extension(const LocalEquivalence& t,
                                       const std::vector<Isometry>& group) {
    const std::size_t k = t.source.dim();
    for (const auto& iso : group) {
        bool agrees = true;
        for (std::size_t i = 0; i < k && agrees; ++i)
            agrees = apply(t.source.generator().row(i), iso.matrix) == t.images[i];
        if (agrees) return iso;
    }
    return std::nullopt;
}

namespace {

bool is_hamming(const Covering& f) {
    return std::all_of(f.set_masks().begin(), f.set_masks().end(),
                       [](std::uint64_t s) { return std::popcount(s) == 1; });
}

LocalEquivalence require_non_extendable(LocalEquivalence t,
                                        const std::vector<Isometry>& group,
                                        const char* which) {
    if (find_extension(t, group))
        throw Error(std::string(which) + " witness unexpectedly extends");
    return t;
}

}  // namespace

LocalEquivalence construct_prop7_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group,
                                         std::uint64_t cap) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    // A, B basic sets with |A| > |B|.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> ab;
    for (auto a : f.set_masks()) {
        for (auto b : f.set_masks())
            if (std::popcount(a) > std::popcount(b)) {
                ab = {a, b};
                break;
            }
        if (ab) break;
    }
    if (!ab) throw NoUnequalSets("all basic sets have the same cardinality");
    const std::uint64_t A = ab->first, B = ab->second;

    // C with A∩B ⊆ C ⊆ A and |C| = |B|: pad A∩B with elements of A \ B.
    std::uint64_t C = A & B;
    for (std::uint64_t rest = A & ~B; std::popcount(C) < std::popcount(B);) {
        const std::uint64_t low = rest & (~rest + 1);
        C |= low;
        rest &= ~low;
    }
    // Bijection sigma: B \ A -> (A \ B) ∩ C, in increasing coordinate order.
    const std::vector<int> from = indices_from_mask(B & ~A);
    const std::vector<int> to = indices_from_mask((A & ~B) & C);
    // |B \ A| = |B| - |A∩B| = |C| - |A∩B| = |(A \ B) ∩ C|.

    std::vector<Vector> basis, images;
    for (int i : indices_from_mask(B)) {
        basis.push_back(Vector::unit(ctx, n, static_cast<std::size_t>(i - 1)));
        if (A >> (i - 1) & 1) {
            images.push_back(basis.back());  // fixed on A ∩ B
        } else {
            const auto pos = std::find(from.begin(), from.end(), i) - from.begin();
            images.push_back(
                Vector::unit(ctx, n, static_cast<std::size_t>(to[pos] - 1)));
        }
    }
    LinearCode source = LinearCode::from_generators(ctx, n, basis);
    LinearCode target = LinearCode::from_generators(ctx, n, images);
    // The generator rows of `source` are exactly `basis` (unit vectors in
    // RREF order), so the images line up with the canonical basis.
    auto t = make_local_equivalence(f, source, target, images, cap);
    if (!t) throw Error("size-mismatch witness failed weight verification");
    return require_non_extendable(std::move(*t), group, "size-mismatch");
}

LocalEquivalence construct_prop8_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group,
                                         const Caps& caps) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    const auto comps = components(f);
    if (comps.size() < 3)
        throw PreconditionFailed("construction needs >= 3 connected components");

    // Components providing A and B need a basic set with >= 2 elements; C
    // furnishes a single coordinate.  Try all ordered assignments.
    for (std::size_t ia = 0; ia < comps.size(); ++ia) {
        std::optional<std::uint64_t> A;
        for (auto idx : comps[ia])
            if (std::popcount(f.set_mask(idx)) >= 2) A = f.set_mask(idx);
        if (!A) continue;
        for (std::size_t ib = 0; ib < comps.size(); ++ib) {
            if (ib == ia) continue;
            std::optional<std::uint64_t> B;
            for (auto idx : comps[ib])
                if (std::popcount(f.set_mask(idx)) >= 2) B = f.set_mask(idx);
            if (!B) continue;
            for (std::size_t ic = 0; ic < comps.size(); ++ic) {
                if (ic == ia || ic == ib) continue;
                const std::uint64_t Cset = f.set_mask(comps[ic][0]);

                const auto as = indices_from_mask(*A);
                const auto bs = indices_from_mask(*B);
                const std::size_t a0 = as[0] - 1, a1 = as[1] - 1;
                const std::size_t b0 = bs[0] - 1, b1 = bs[1] - 1;
                const std::size_t c = indices_from_mask(Cset)[0] - 1;

                const Vector ea0 = Vector::unit(ctx, n, a0), ea1 = Vector::unit(ctx, n, a1);
                const Vector eb0 = Vector::unit(ctx, n, b0), eb1 = Vector::unit(ctx, n, b1);
                const Vector ec = Vector::unit(ctx, n, c);

                std::vector<Vector> basis{add(ea0, eb0), add(ea1, eb1)};
                std::vector<Vector> images{add(ea1, ec), add(scale(ctx.neg(1), ea1), eb1)};

                LinearCode source = LinearCode::from_generators(ctx, n, basis);
                LinearCode target = LinearCode::from_generators(ctx, n, images);
                // Re-express the images over the source's canonical RREF
                // basis rather than the ad-hoc spanning pair.
                std::vector<Vector> canon_images;
                bool expressible = true;
                for (std::size_t i = 0; i < source.dim() && expressible; ++i) {
                    // Solve row_i = alpha * basis[0] + beta * basis[1] by
                    // scanning the q^2 combinations (k = 2 throughout).
                    const Vector row = source.generator().row(i);
                    bool found = false;
                    for (int alpha = 0; alpha < ctx.q() && !found; ++alpha)
                        for (int beta = 0; beta < ctx.q() && !found; ++beta) {
                            Vector cand = add(scale(alpha, basis[0]), scale(beta, basis[1]));
                            if (cand == row) {
                                canon_images.push_back(
                                    add(scale(alpha, images[0]), scale(beta, images[1])));
                                found = true;
                            }
                        }
                    expressible = found;
                }
                if (!expressible || source.dim() != 2) continue;
                auto t = make_local_equivalence(f, source, target, canon_images,
                                                caps.max_enum);
                if (t && !find_extension(*t, group)) return *t;
                // Construction degenerated (it can over F_2): try another
                // assignment, then fall back to the exhaustive search.
            }
        }
    }

    // Fallback: exhaustive witness search over the scanned range.
    MepVerdict scan = exhaustive_mep_scan(f, ctx, 2, caps);
    if (!scan.satisfies && scan.witness) return *scan.witness;
    throw PreconditionFailed("no multi-component witness could be constructed");
}

LocalEquivalence construct_prop9_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    const auto comps = components(f);
    if (comps.size() != 2)
        throw PreconditionFailed("construction needs exactly 2 connected components");

    for (std::size_t ia = 0; ia < 2; ++ia) {
        const std::size_t other = 1 - ia;
        // Overlapping pair A, B inside component ia.
        for (auto i : comps[ia]) {
            for (auto j : comps[ia]) {
                if (i == j) continue;
                const std::uint64_t A = f.set_mask(i), B = f.set_mask(j);
                if ((A & B) == 0) continue;
                const std::uint64_t b_minus_a = B & ~A;
                const std::uint64_t a_minus_b = A & ~B;
                if (b_minus_a == 0 || a_minus_b == 0) continue;

                const std::size_t i0 =
                    static_cast<std::size_t>(std::countr_zero(a_minus_b));
                const std::uint64_t Cset = f.set_mask(comps[other][0]);
                const std::size_t j0 = static_cast<std::size_t>(std::countr_zero(Cset));

                Vector u = Vector::zero(ctx, n), v = Vector::zero(ctx, n);
                for (int a : indices_from_mask(A))
                    u = add(u, Vector::unit(ctx, n, static_cast<std::size_t>(a - 1)));
                for (int b : indices_from_mask(b_minus_a))
                    v = add(v, Vector::unit(ctx, n, static_cast<std::size_t>(b - 1)));

                std::vector<Vector> basis{u, v};
                std::vector<Vector> images{Vector::unit(ctx, n, j0),
                                           Vector::unit(ctx, n, i0)};
                LinearCode source = LinearCode::from_generators(ctx, n, basis);
                LinearCode target = LinearCode::from_generators(ctx, n, images);
                // u and v have disjoint supports, so the RREF rows of
                // `source` are recombinations; express them over (u, v).
                std::vector<Vector> canon_images;
                bool expressible = true;
                for (std::size_t r = 0; r < source.dim() && expressible; ++r) {
                    const Vector row = source.generator().row(r);
                    bool found = false;
                    for (int alpha = 0; alpha < ctx.q() && !found; ++alpha)
                        for (int beta = 0; beta < ctx.q() && !found; ++beta) {
                            Vector cand = add(scale(alpha, u), scale(beta, v));
                            if (cand == row) {
                                canon_images.push_back(
                                    add(scale(alpha, images[0]), scale(beta, images[1])));
                                found = true;
                            }
                        }
                    expressible = found;
                }
                if (!expressible || source.dim() != 2) continue;
                auto t = make_local_equivalence(f, source, target, canon_images,
                                                Caps{}.max_enum);
                if (!t) continue;
                return require_non_extendable(std::move(*t), group, "two-component");
            }
        }
    }
    throw PreconditionFailed("no component contains an overlapping pair of basic sets");
}

bool conjecture_prediction(const Covering& f) {
    const int k = std::popcount(f.set_mask(0));
    for (auto s : f.set_masks())
        if (std::popcount(s) != k) return false;
    // Every k-subset of [n] must be a basic set.
    std::uint64_t expected = 1;
    for (int i = 0; i < k; ++i) expected = expected * (f.n() - i) / (i + 1);
    return f.set_count() == expected;
}

std::vector<Isometry> extension_search_group(const Covering& f, FieldContext ctx,
                                             const Caps& caps) {
    // The backtracking search yields the genuine isometry group; prefer it
    // whenever it finishes within a fixed work budget.  Larger cases fall
    // back to the G/K_M product closure.
    if (auto group = try_brute_force_isometries(f, ctx, caps, std::uint64_t{1} << 26))
        return *group;
    return full_isometry_group(f, ctx, caps).elements;
}

MepVerdict exhaustive_mep_scan(const Covering& f, FieldContext ctx, std::size_t max_dim,
                               const Caps& caps) {
    const std::vector<Isometry> group = extension_search_group(f, ctx, caps);
    const std::size_t n = static_cast<std::size_t>(f.n());

    // Group subspaces by weight distribution: a weight-preserving bijection
    // can only exist between codes with equal distributions.
    std::vector<LinearCode> codes = all_subspaces(ctx, n, max_dim, caps.max_enum);
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_dist;
    for (std::size_t i = 0; i < codes.size(); ++i)
        by_dist[enumerate_weights(f, codes[i], caps.max_enum).coeffs].push_back(i);

    MepVerdict verdict;
    verdict.reason = MepReason::exhaustive;
    for (const auto& [dist, members] : by_dist) {
        for (std::size_t a : members) {
            for (std::size_t b : members) {
                bool all_extend = true;
                for_each_local_equivalence(
                    f, codes[a], codes[b],
                    [&](const LocalEquivalence& t) {
                        if (!find_extension(t, group)) {
                            verdict.witness = t;
                            all_extend = false;
                            return false;
                        }
                        return true;
                    },
                    caps);
                if (!all_extend) {
                    verdict.satisfies = false;
                    return verdict;
                }
            }
        }
    }
    verdict.satisfies = true;
    return verdict;
}

MepVerdict mep_verdict(const Covering& f, FieldContext ctx, MepMode mode,
                       const Caps& caps) {
    const auto comps = components(f);
    const std::size_t l = comps.size();

    if (mode == MepMode::exhaustive) return exhaustive_mep_scan(f, ctx, caps.max_dim, caps);
    if (l == 1) {
        if (mode == MepMode::conjecture)
            return MepVerdict{conjecture_prediction(f), MepReason::conjecture, std::nullopt};
        throw PreconditionFailed(
            "structural verdict unavailable for connected coverings; "
            "use exhaustive or conjecture mode");
    }

    if (is_hamming(f)) return MepVerdict{true, MepReason::hamming, std::nullopt};
    if (l == 2 && is_k_partition(f))
        return MepVerdict{true, MepReason::two_component_k_partition, std::nullopt};

    // Refuted: attach the applicable constructed witness.
    MepVerdict verdict{false, MepReason::structural_refutation, std::nullopt};
    const std::vector<Isometry> group = extension_search_group(f, ctx, caps);
    bool uniform = true;
    const int k0 = std::popcount(f.set_mask(0));
    for (auto s : f.set_masks())
        if (std::popcount(s) != k0) uniform = false;
    if (!uniform)
        verdict.witness = construct_prop7_witness(f, ctx, group, caps.max_enum);
    else if (l == 2)
        verdict.witness = construct_prop9_witness(f, ctx, group);
    else
        verdict.witness = construct_prop8_witness(f, ctx, group, caps);
    return verdict;
}

}  // namespace combmet
