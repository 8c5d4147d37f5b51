#include "combmet/code.hpp"

#include <algorithm>
#include <limits>

#include "combmet/errors.hpp"

namespace combmet {

LinearCode LinearCode::from_generators(FieldContext ctx, std::size_t n,
                                       const std::vector<Vector>& rows) {
    for (const auto& r : rows)
        if (r.size() != n || r.context() != ctx) throw Error("generator row shape mismatch");
    Matrix m = Matrix::from_rows(ctx, rows, n);
    return LinearCode(rref(m).reduced);
}

LinearCode LinearCode::from_rref(Matrix gen) {
    RrefResult r = rref(gen);
    if (r.reduced != gen) throw Error("generator is not in reduced row echelon form");
    return LinearCode(std::move(gen));
}

bool LinearCode::contains(const Vector& v) const {
    if (v.size() != length()) throw Error("vector length mismatch");
    if (v.is_zero()) return true;
    return in_row_space(gen_, v);
}

bool for_each_codeword(const LinearCode& c, const std::function<bool(const Vector&)>& visit,
                       std::uint64_t cap) {
    const FieldContext ctx = c.context();
    const std::size_t k = c.dim();
    checked_pow(ctx.q(), static_cast<int>(k), cap, "codeword enumeration");
    return for_each_vector(
        ctx, k,
        [&](const Vector& coeff) {
            Vector w = Vector::zero(ctx, c.length());
            for (std::size_t i = 0; i < k; ++i)
                if (coeff[i] != 0) w = add(w, scale(coeff[i], c.generator().row(i)));
            return visit(w);
        },
        cap);
}

std::vector<Vector> codewords(const LinearCode& c, std::uint64_t cap) {
    std::vector<Vector> out;
    for_each_codeword(
        c,
        [&](const Vector& w) {
            out.push_back(w);
            return true;
        },
        cap);
    return out;
}

LinearCode dual(const LinearCode& c) {
    if (c.dim() == 0) {
        // Dual of the zero code is the full space.
        Matrix id = Matrix::identity(c.context(), c.length());
        return LinearCode::from_rref(std::move(id));
    }
    Matrix ns = nullspace(c.generator());
    return LinearCode::from_rref(std::move(ns));
}

std::uint64_t subspace_count(int q, int n, int k) {
    // Gaussian binomial via [n, k]_q = [n-1, k-1]_q + q^k * [n-1, k]_q,
    // saturating at UINT64_MAX (callers only compare against caps).
    if (k < 0 || k > n) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (int i = 0; i <= n; ++i) g[i][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= std::min(i, k); ++j) {
            unsigned __int128 qk = 1;
            for (int t = 0; t < j; ++t) qk *= static_cast<unsigned>(q);
            unsigned __int128 v =
                static_cast<unsigned __int128>(g[i - 1][j - 1]) + qk * g[i - 1][j];
            g[i][j] = v > kMax ? kMax : static_cast<std::uint64_t>(v);
        }
    }
    return g[n][k];
}

namespace {

// Enumerate RREF matrices with the given 0-based pivot profile: row i has a
// leading 1 at pivots[i], zeros at the other pivot columns, zeros before its
// pivot, and free entries elsewhere.
bool emit_profile(FieldContext ctx, std::size_t n, const std::vector<std::size_t>& pivots,
                  const std::function<bool(const LinearCode&)>& visit) {
    const std::size_t k = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = pivots[i] + 1; c < n; ++c)
            if (!is_pivot[c]) free_cells.emplace_back(i, c);

    std::vector<std::uint8_t> values(free_cells.size(), 0);
    while (true) {
        Matrix gen(ctx, k, n);
        for (std::size_t i = 0; i < k; ++i) gen.set(i, pivots[i], 1);
        for (std::size_t t = 0; t < free_cells.size(); ++t)
            gen.set(free_cells[t].first, free_cells[t].second, values[t]);
        if (!visit(LinearCode::from_rref(std::move(gen)))) return false;

        std::size_t t = free_cells.size();
        while (t > 0) {
            --t;
            if (++values[t] < ctx.q()) break;
            values[t] = 0;
            if (t == 0) return true;
        }
        if (free_cells.empty()) return true;
    }
}

bool emit_dim(FieldContext ctx, std::size_t n, std::size_t k,
              const std::function<bool(const LinearCode&)>& visit) {
    if (k == 0) {
        Matrix empty(ctx, 0, n);
        return visit(LinearCode::from_rref(std::move(empty)));
    }
    // All increasing pivot profiles of length k, lexicographic.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        if (!emit_profile(ctx, n, pivots, visit)) return false;
        // Next combination.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

}  // namespace

bool for_each_subspace(FieldContext ctx, std::size_t n, std::size_t max_dim,
                       const std::function<bool(const LinearCode&)>& visit,
                       std::uint64_t cap) {
    max_dim = std::min(max_dim, n);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= max_dim; ++k) {
        total += subspace_count(ctx.q(), static_cast<int>(n), static_cast<int>(k));
        if (total > cap)
            throw CapExceeded("subspace enumeration exceeds cap " + std::to_string(cap));
    }
    for (std::size_t k = 0; k <= max_dim; ++k)
        if (!emit_dim(ctx, n, k, visit)) return false;
    return true;
}

std::vector<LinearCode> all_subspaces(FieldContext ctx, std::size_t n, std::size_t max_dim,
                                      std::uint64_t cap) {
    std::vector<LinearCode> out;
    for_each_subspace(
        ctx, n, max_dim,
        [&](const LinearCode& c) {
            out.push_back(c);
            return true;
        },
        cap);
    return out;
}

}  // namespace combmet
