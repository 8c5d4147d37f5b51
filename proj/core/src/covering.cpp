#include "combmet/covering.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "combmet/errors.hpp"

namespace combmet {

std::uint64_t mask_from_indices(int n, const std::vector<int>& one_based) {
    std::uint64_t m = 0;
    for (int i : one_based) {
        if (i < 1 || i > n) throw Error("index " + std::to_string(i) + " outside [1, n]");
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

std::vector<int> indices_from_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i + 1);
    return out;
}

std::vector<std::vector<int>> Covering::sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(sets_.size());
    for (auto m : sets_) out.push_back(indices_from_mask(m));
    return out;
}

std::uint64_t Covering::ground_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

NormalizeResult normalize(int n, const std::vector<std::uint64_t>& raw_sets) {
    if (n < 1 || n > 64) throw Error("ground set size must be in [1, 64]");
    const std::uint64_t ground = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::uint64_t seen_union = 0;
    for (auto s : raw_sets) {
        if (s == 0) throw EmptySetError("covering contains an empty set");
        if ((s & ~ground) != 0) throw Error("basic set reaches outside [n]");
        seen_union |= s;
    }
    if (seen_union != ground) throw NotACovering("union of basic sets is not [n]");

    std::vector<std::uint64_t> kept;
    std::vector<std::uint64_t> dropped;
    for (std::size_t i = 0; i < raw_sets.size(); ++i) {
        const std::uint64_t s = raw_sets[i];
        bool drop = false;
        // Duplicate of an earlier set.
        for (std::size_t j = 0; j < i && !drop; ++j)
            if (raw_sets[j] == s) drop = true;
        // Properly contained in some other set.
        for (std::size_t j = 0; j < raw_sets.size() && !drop; ++j)
            if (raw_sets[j] != s && (s & ~raw_sets[j]) == 0) drop = true;
        (drop ? dropped : kept).push_back(s);
    }
    return {Covering(n, std::move(kept)), std::move(dropped)};
}

NormalizeResult normalize(int n, const std::vector<std::vector<int>>& raw_sets_1based) {
    std::vector<std::uint64_t> masks;
    masks.reserve(raw_sets_1based.size());
    for (const auto& s : raw_sets_1based) masks.push_back(mask_from_indices(n, s));
    return normalize(n, masks);
}

std::optional<int> is_k_partition(const Covering& f) {
    const int k = std::popcount(f.set_mask(0));
    std::uint64_t seen = 0;
    for (auto s : f.set_masks()) {
        if (std::popcount(s) != k) return std::nullopt;
        if ((seen & s) != 0) return std::nullopt;  // overlap
        seen |= s;
    }
    return seen == f.ground_mask() ? std::optional<int>(k) : std::nullopt;
}

std::vector<std::vector<std::size_t>> components(const Covering& f) {
    const std::size_t r = f.set_count();
    std::vector<bool> visited(r, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < r; ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> comp, stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (std::size_t j = 0; j < r; ++j)
                if (!visited[j] && (f.set_mask(cur) & f.set_mask(j)) != 0) {
                    visited[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

ClassStructure class_structure(const Covering& f) {
    const int n = f.n();
    const std::size_t r = f.set_count();

    // Membership row of each coordinate: which basic sets contain it.
    std::vector<std::uint64_t> member(n, 0);
    for (std::size_t j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i)
            if (f.set_mask(j) >> i & 1) member[i] |= std::uint64_t{1} << j;

    ClassStructure cs;
    cs.class_of.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t c = 0; c < cs.class_masks.size(); ++c) {
            if (cs.incidence_rows[c] == member[i]) {
                cs.class_masks[c] |= std::uint64_t{1} << i;
                cs.class_of[i] = c;
                found = true;
                break;
            }
        }
        if (!found) {
            cs.class_of[i] = cs.class_masks.size();
            cs.class_masks.push_back(std::uint64_t{1} << i);
            cs.incidence_rows.push_back(member[i]);
        }
    }
    // Ordered by smallest element already (coordinates scanned in order).
    // Distinct classes must have distinct incidence rows by construction.
    for (std::size_t a = 0; a < cs.incidence_rows.size(); ++a)
        for (std::size_t b = a + 1; b < cs.incidence_rows.size(); ++b)
            assert(cs.incidence_rows[a] != cs.incidence_rows[b]);
    return cs;
}

std::vector<std::pair<std::size_t, std::size_t>> ClassStructure::strict_domination_pairs()
    const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < class_count(); ++i)
        for (std::size_t j = 0; j < class_count(); ++j)
            if (strictly_dominates(i, j)) out.emplace_back(i, j);
    return out;
}

std::uint64_t msh(const ClassStructure& cs, std::uint64_t x_support) {
    if (x_support == 0) return 0;
    // Classes meeting the support; since classes partition [n] this is the
    // unique minimal class family covering it.
    std::vector<std::size_t> family;
    for (std::size_t c = 0; c < cs.class_count(); ++c)
        if ((cs.class_masks[c] & x_support) != 0) family.push_back(c);

    std::uint64_t kept = 0;
    for (std::size_t c : family) {
        bool dominated = false;
        for (std::size_t d : family)
            if (d != c && cs.strictly_dominates(d, c)) {
                dominated = true;
                break;
            }
        if (!dominated) kept |= cs.class_masks[c];
    }
    return x_support & kept;
}

std::uint64_t msh(const Covering& f, std::uint64_t x_support) {
    return msh(class_structure(f), x_support);
}

Vector cleared_out(const ClassStructure& cs, const Vector& x) {
    const std::uint64_t keep = msh(cs, x.support_mask());
    std::vector<std::uint8_t> e(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (keep >> i & 1) e[i] = x[i];
    return Vector(x.context(), std::move(e));
}

Vector cleared_out(const Covering& f, const Vector& x) {
    return cleared_out(class_structure(f), x);
}

std::vector<Covering> all_normalized_coverings(int n) {
    if (n < 1 || n > 4) throw Error("covering enumeration supported for n <= 4 only");
    const std::uint64_t ground = (std::uint64_t{1} << n) - 1;

    // All nonempty subsets of [n], then all antichain families covering [n].
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 1; s <= ground; ++s) subsets.push_back(s);

    std::vector<Covering> out;
    const std::uint64_t family_count = std::uint64_t{1} << subsets.size();
    for (std::uint64_t pick = 1; pick < family_count; ++pick) {
        std::vector<std::uint64_t> sets;
        std::uint64_t uni = 0;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if (pick >> i & 1) {
                sets.push_back(subsets[i]);
                uni |= subsets[i];
            }
        if (uni != ground) continue;
        bool antichain = true;
        for (std::size_t a = 0; a < sets.size() && antichain; ++a)
            for (std::size_t b = 0; b < sets.size() && antichain; ++b)
                if (a != b && (sets[a] & ~sets[b]) == 0) antichain = false;
        if (!antichain) continue;
        out.push_back(normalize(n, sets).covering);
    }
    return out;
}

}  // namespace combmet
