#include "combmet/isometry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>

#include "combmet/errors.hpp"

namespace combmet {

namespace {

// wt[supp(x * t)] == wt[supp(x)] for all x, walking x in odometer order and
// maintaining y = x * t incrementally: every unit step of digit i (including
// the wrap q-1 -> 0, a change of +1 mod q) adds row i of t to y once.
bool preserves_weight_table(const std::vector<int>& wt, const Matrix& t) {
    const int q = t.context().q();
    const std::size_t n = t.rows();
    std::vector<std::uint8_t> x(n, 0), y(n, 0);
    const auto& rows = t.entries();  // row-major
    while (true) {
        std::uint64_t mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] != 0) mx |= std::uint64_t{1} << i;
            if (y[i] != 0) my |= std::uint64_t{1} << i;
        }
        if (wt[mx] != wt[my]) return false;
        std::size_t i = 0;
        while (true) {
            if (i == n) return true;
            ++x[i];
            for (std::size_t j = 0; j < n; ++j) {
                int v = y[j] + rows[i * n + j];
                y[j] = static_cast<std::uint8_t>(v >= q ? v - q : v);
            }
            if (x[i] < q) break;
            x[i] = 0;
            ++i;
        }
    }
}

// All of GL(h, q) in lexicographic entry order.  Memoized; only small h are
// ever requested (q^(h*h) is enumerated).
const std::vector<Matrix>& gl_elements(FieldContext ctx, std::size_t h) {
    static std::map<std::pair<int, std::size_t>, std::vector<Matrix>> cache;
    auto key = std::make_pair(ctx.q(), h);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    checked_pow(ctx.q(), static_cast<int>(h * h), std::uint64_t{1} << 24,
                "GL block enumeration");
    std::vector<Matrix> out;
    std::vector<std::uint8_t> e(h * h, 0);
    while (true) {
        Matrix m(ctx, h, h, e);
        if (rank(m) == h) out.push_back(std::move(m));
        std::size_t t = e.size();
        bool done = true;
        while (t > 0) {
            --t;
            if (++e[t] < ctx.q()) {
                done = false;
                break;
            }
            e[t] = 0;
        }
        if (done) break;
    }
    return cache.emplace(key, std::move(out)).first->second;
}

std::vector<std::size_t> mask_coords(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

// Off-diagonal cells (row x, col y) permitted by the domination order.
std::vector<std::pair<std::size_t, std::size_t>> permitted_cells(const ClassStructure& cs) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    const std::size_t n = cs.class_of.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t cx = cs.class_of[x], cy = cs.class_of[y];
            if (cx != cy && cs.strictly_dominates(cy, cx)) cells.emplace_back(x, y);
        }
    return cells;
}

}  // namespace

bool preserves_covering(const Covering& f, const Permutation& phi) {
    std::unordered_set<std::uint64_t> family(f.set_masks().begin(), f.set_masks().end());
    for (auto s : f.set_masks()) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; s >> i; ++i)
            if (s >> i & 1) image |= std::uint64_t{1} << phi[i];
        if (!family.count(image)) return false;
    }
    return true;
}

Matrix permutation_matrix(FieldContext ctx, const Permutation& phi) {
    const std::size_t n = phi.size();
    // Coordinate i of the image equals x_phi(i): column i is the unit vector
    // at row phi(i).
    Matrix p(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(phi[i], i, 1);
    return p;
}

std::vector<Permutation> covering_preserving_permutations(const Covering& f,
                                                          const Caps& caps) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    if (f.n() > caps.max_perm_n)
        throw CapExceeded("permutation enumeration capped at n <= " +
                          std::to_string(caps.max_perm_n));
    Permutation phi(n);
    std::iota(phi.begin(), phi.end(), 0);
    std::vector<Permutation> out;
    do {
        if (preserves_covering(f, phi)) out.push_back(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return out;
}

std::vector<Isometry> group_G(const Covering& f, FieldContext ctx, const Caps& caps) {
    const std::vector<int> wt = weight_table(f);
    std::vector<Isometry> out;
    for (const auto& phi : covering_preserving_permutations(f, caps)) {
        Matrix m = permutation_matrix(ctx, phi);
        if (!preserves_weight_table(wt, m))
            throw Error("covering-preserving permutation failed weight certification");
        out.push_back(Isometry{std::move(m), true});
    }
    return out;
}

bool respects_M(const ClassStructure& cs, const Matrix& b) {
    const std::size_t n = cs.class_of.size();
    if (b.rows() != n || b.cols() != n) throw Error("matrix must be n x n");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (b.at(x, y) == 0) continue;
            const std::size_t cx = cs.class_of[x], cy = cs.class_of[y];
            if (cx != cy && !cs.strictly_dominates(cy, cx)) return false;
        }
    // Diagonal class blocks must be invertible.
    for (std::size_t c = 0; c < cs.class_count(); ++c) {
        const auto coords = mask_coords(cs.class_masks[c]);
        Matrix block(b.context(), coords.size(), coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < coords.size(); ++j)
                block.set(i, j, b.at(coords[i], coords[j]));
        if (rank(block) != coords.size()) return false;
    }
    return true;
}

bool respects_M(const Covering& f, const Matrix& b) {
    return respects_M(class_structure(f), b);
}

std::uint64_t k_m_order(const Covering& f, FieldContext ctx) {
    const ClassStructure cs = class_structure(f);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 1;
    for (std::size_t c = 0; c < cs.class_count(); ++c) {
        const int h = std::popcount(cs.class_masks[c]);
        // |GL(h, q)| = prod_{i=0}^{h-1} (q^h - q^i)
        unsigned __int128 qh = 1;
        for (int t = 0; t < h; ++t) qh *= static_cast<unsigned>(ctx.q());
        unsigned __int128 qi = 1;
        for (int i = 0; i < h; ++i, qi *= static_cast<unsigned>(ctx.q())) {
            total *= qh - qi;
            if (total > kMax) return kMax;
        }
    }
    for (std::size_t t = 0; t < permitted_cells(cs).size(); ++t) {
        total *= static_cast<unsigned>(ctx.q());
        if (total > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<Isometry> group_K_M(const Covering& f, FieldContext ctx, const Caps& caps) {
    const ClassStructure cs = class_structure(f);
    const std::size_t n = static_cast<std::size_t>(f.n());

    const std::uint64_t order = k_m_order(f, ctx);
    if (order > caps.max_group)
        throw CapExceeded("K_M has " + std::to_string(order) + " elements, cap " +
                          std::to_string(caps.max_group));

    const auto cells = permitted_cells(cs);
    std::vector<std::vector<std::size_t>> block_coords;
    for (auto m : cs.class_masks) block_coords.push_back(mask_coords(m));

    const std::vector<int> wt = weight_table(f);
    std::vector<Isometry> out;
    out.reserve(order);

    // Odometer over (GL choice per class) x (value per permitted cell).
    std::vector<std::size_t> gl_idx(cs.class_count(), 0);
    std::vector<std::uint8_t> cell_val(cells.size(), 0);
    while (true) {
        Matrix m(ctx, n, n);
        for (std::size_t c = 0; c < cs.class_count(); ++c) {
            const auto& coords = block_coords[c];
            const Matrix& block = gl_elements(ctx, coords.size())[gl_idx[c]];
            for (std::size_t i = 0; i < coords.size(); ++i)
                for (std::size_t j = 0; j < coords.size(); ++j)
                    m.set(coords[i], coords[j], block.at(i, j));
        }
        for (std::size_t t = 0; t < cells.size(); ++t)
            m.set(cells[t].first, cells[t].second, cell_val[t]);

        if (!preserves_weight_table(wt, m))
            throw Error("matrix respecting M failed weight certification");
        out.push_back(Isometry{std::move(m), true});

        // Advance: cells fastest, then block choices.
        std::size_t t = cells.size();
        bool carried = true;
        while (t > 0) {
            --t;
            if (++cell_val[t] < ctx.q()) {
                carried = false;
                break;
            }
            cell_val[t] = 0;
        }
        if (carried) {
            std::size_t c = cs.class_count();
            while (c > 0) {
                --c;
                if (++gl_idx[c] < gl_elements(ctx, block_coords[c].size()).size()) {
                    carried = false;
                    break;
                }
                gl_idx[c] = 0;
            }
        }
        if (carried) break;
    }
    return out;
}

bool preserves_weight(const Covering& f, const Matrix& t, std::uint64_t cap) {
    if (t.rows() != static_cast<std::size_t>(f.n()) || t.cols() != t.rows())
        throw Error("matrix must be n x n");
    checked_pow(t.context().q(), f.n(), cap, "weight certification");
    return preserves_weight_table(weight_table(f), t);
}

GroupClosureResult full_isometry_group(const Covering& f, FieldContext ctx,
                                       const Caps& caps) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    const ClassStructure cs = class_structure(f);
    const std::vector<Isometry> g = group_G(f, ctx, caps);
    const std::vector<Isometry> km = group_K_M(f, ctx, caps);

    // Reduced generating set for <G union K_M>: all of G, per-class GL
    // generators (transvections + one determinant-spanning scalar), and one
    // transvection per permitted off-diagonal cell.
    std::vector<Matrix> gens;
    for (const auto& iso : g) gens.push_back(iso.matrix);
    for (std::size_t c = 0; c < cs.class_count(); ++c) {
        const auto coords = mask_coords(cs.class_masks[c]);
        for (std::size_t a : coords)
            for (std::size_t b : coords) {
                if (a == b) continue;
                Matrix t = Matrix::identity(ctx, n);
                t.set(a, b, 1);
                gens.push_back(std::move(t));
            }
        if (ctx.q() > 2) {
            Matrix s = Matrix::identity(ctx, n);
            s.set(coords[0], coords[0], ctx.primitive_root());
            gens.push_back(std::move(s));
        }
    }
    for (const auto& [x, y] : permitted_cells(cs)) {
        Matrix t = Matrix::identity(ctx, n);
        t.set(x, y, 1);
        gens.push_back(std::move(t));
    }

    // Breadth-first product closure to a fixpoint.
    std::vector<Matrix> elements{Matrix::identity(ctx, n)};
    std::unordered_set<std::string> seen{elements[0].bytes_key()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& gen : gens) {
            Matrix prod = mul(elements[head], gen);
            std::string key = prod.bytes_key();
            if (seen.insert(std::move(key)).second) {
                if (elements.size() >= caps.max_group)
                    throw CapExceeded("group closure exceeds cap " +
                                      std::to_string(caps.max_group));
                elements.push_back(std::move(prod));
            }
        }
    }

    // The reduced generators must reproduce both factors.
    for (const auto& iso : km)
        if (!seen.count(iso.matrix.bytes_key()))
            throw Error("closure invariant violated: K_M element missing");
    for (const auto& iso : g)
        if (!seen.count(iso.matrix.bytes_key()))
            throw Error("closure invariant violated: G element missing");

    const std::vector<int> wt = weight_table(f);
    GroupClosureResult result;
    result.g_order = g.size();
    result.km_order = km.size();
    result.elements.reserve(elements.size());
    for (auto& m : elements) {
        if (!preserves_weight_table(wt, m))
            throw Error("closure element failed weight certification");
        result.elements.push_back(Isometry{std::move(m), true});
    }
    return result;
}

namespace {

struct BruteWorkExceeded {};

std::vector<Isometry> brute_force_impl(const Covering& f, FieldContext ctx,
                                       const Caps& caps, std::uint64_t work_budget) {
    const std::size_t n = static_cast<std::size_t>(f.n());
    const std::vector<int> wt = weight_table(f);
    checked_pow(ctx.q(), f.n(), caps.max_enum, "brute force certification");
    std::uint64_t work = 0;

    // Candidate images of each unit vector, bucketed by weight.
    std::map<int, std::vector<Vector>> by_weight;
    for_each_vector(ctx, n, [&](const Vector& v) {
        by_weight[wt[v.support_mask()]].push_back(v);
        return true;
    });

    // Combination index c (base-q digits over chosen rows) -> source weight.
    // combos[c] holds the image of the coefficient vector c; weights must
    // match at every level, which prunes the search hard.
    std::uint64_t combo_count = 1;
    std::vector<Vector> combos{Vector::zero(ctx, n)};
    std::vector<int> src_wt{0};

    std::vector<Isometry> out;
    std::vector<const Vector*> rows(n, nullptr);

    auto src_weight_of = [&](std::uint64_t combo, std::size_t depth) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < depth; ++i, combo /= ctx.q())
            if (combo % ctx.q() != 0) mask |= std::uint64_t{1} << i;
        return wt[mask];
    };

    std::function<void(std::size_t)> search = [&](std::size_t depth) {
        if (depth == n) {
            std::vector<Vector> r;
            r.reserve(n);
            for (auto* p : rows) r.push_back(*p);
            Matrix m = Matrix::from_rows(ctx, r, n);
            // Weight preservation on every combination forces injectivity,
            // hence invertibility.
            if (out.size() >= caps.max_group)
                throw CapExceeded("isometry group exceeds cap " +
                                  std::to_string(caps.max_group));
            out.push_back(Isometry{std::move(m), true});
            return;
        }
        const int want = wt[std::uint64_t{1} << depth];
        auto it = by_weight.find(want);
        if (it == by_weight.end()) return;
        const std::uint64_t old_count = combo_count;
        for (const Vector& cand : it->second) {
            bool ok = true;
            // Extend the combination table by all multiples of the new row.
            combos.erase(combos.begin() + static_cast<std::ptrdiff_t>(old_count), combos.end());
            src_wt.resize(old_count);
            for (std::uint8_t coef = 1; coef < ctx.q() && ok; ++coef) {
                const Vector scaled = scale(coef, cand);
                for (std::uint64_t c = 0; c < old_count && ok; ++c) {
                    if (++work > work_budget) throw BruteWorkExceeded{};
                    Vector sum = add(combos[c], scaled);
                    const int sw =
                        src_weight_of(c + static_cast<std::uint64_t>(coef) * old_count,
                                      depth + 1);
                    if (wt[sum.support_mask()] != sw) {
                        ok = false;
                        break;
                    }
                    combos.push_back(std::move(sum));
                    src_wt.push_back(sw);
                }
            }
            if (ok) {
                rows[depth] = &cand;
                combo_count = old_count * ctx.q();
                search(depth + 1);
                combo_count = old_count;
            }
        }
        combos.erase(combos.begin() + static_cast<std::ptrdiff_t>(old_count), combos.end());
        src_wt.resize(old_count);
    };
    search(0);
    return out;
}

}  // namespace

std::vector<Isometry> brute_force_isometries(const Covering& f, FieldContext ctx,
                                             const Caps& caps) {
    return brute_force_impl(f, ctx, caps, std::numeric_limits<std::uint64_t>::max());
}

std::optional<std::vector<Isometry>> try_brute_force_isometries(
    const Covering& f, FieldContext ctx, const Caps& caps, std::uint64_t work_budget) {
    try {
        return brute_force_impl(f, ctx, caps, work_budget);
    } catch (const BruteWorkExceeded&) {
        return std::nullopt;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

Decomposition decompose(const Covering& f, FieldContext ctx, const Isometry& t,
                        const Caps& caps) {
    if (!t.certified) throw PreconditionFailed("decompose requires a certified isometry");
    const ClassStructure cs = class_structure(f);
    for (const auto& phi : covering_preserving_permutations(f, caps)) {
        Permutation inv(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) inv[phi[i]] = i;
        Matrix b = mul(permutation_matrix(ctx, inv), t.matrix);
        if (respects_M(cs, b)) return Decomposition{phi, std::move(b)};
    }
    throw NotDecomposable("isometry does not factor as T_phi * B");
}

}  // namespace combmet
