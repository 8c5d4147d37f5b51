#include "combmet/gf.hpp"

#include <algorithm>
#include <cassert>

namespace combmet {

bool FieldContext::is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FieldContext::FieldContext(int q) : q_(q) {
    if (q < 2 || q > 251 || !is_prime(q))
        throw Error("field modulus must be a prime in [2, 251], got " + std::to_string(q));
}

std::uint8_t FieldContext::inv(std::uint8_t a) const {
    if (a == 0) throw Error("inverse of zero");
    // Fermat: a^(q-2) mod q.
    int result = 1, base = a, e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = result * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<std::uint8_t>(result);
}

std::uint8_t FieldContext::primitive_root() const {
    for (int g = 1; g < q_; ++g) {
        int x = g, order = 1;
        while (x != 1) {
            x = x * g % q_;
            ++order;
        }
        if (order == q_ - 1) return static_cast<std::uint8_t>(g);
    }
    return 1;  // q == 2
}

Vector::Vector(FieldContext ctx, std::vector<std::uint8_t> entries)
    : ctx_(ctx), e_(std::move(entries)) {
    for (auto& v : e_)
        if (v >= ctx_.q()) v = ctx_.reduce(v);
}

Vector Vector::zero(FieldContext ctx, std::size_t n) {
    return Vector(ctx, std::vector<std::uint8_t>(n, 0));
}

Vector Vector::unit(FieldContext ctx, std::size_t n, std::size_t i) {
    std::vector<std::uint8_t> e(n, 0);
    e.at(i) = 1;
    return Vector(ctx, std::move(e));
}

bool Vector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t v) { return v == 0; });
}

std::uint64_t Vector::support_mask() const {
    assert(e_.size() <= 64);
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0) m |= std::uint64_t{1} << i;
    return m;
}

namespace {
void require_same_shape(const Vector& a, const Vector& b) {
    if (a.context() != b.context() || a.size() != b.size())
        throw Error("vector shape/field mismatch");
}
}  // namespace

Vector add(const Vector& a, const Vector& b) {
    require_same_shape(a, b);
    std::vector<std::uint8_t> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a.context().add(a[i], b[i]);
    return Vector(a.context(), std::move(e));
}

Vector sub(const Vector& a, const Vector& b) {
    require_same_shape(a, b);
    std::vector<std::uint8_t> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a.context().sub(a[i], b[i]);
    return Vector(a.context(), std::move(e));
}

Vector scale(std::uint8_t c, const Vector& a) {
    std::vector<std::uint8_t> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a.context().mul(c, a[i]);
    return Vector(a.context(), std::move(e));
}

std::uint8_t dot(const Vector& a, const Vector& b) {
    require_same_shape(a, b);
    int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return a.context().reduce(acc);
}

Matrix::Matrix(FieldContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldContext ctx, std::size_t rows, std::size_t cols,
               std::vector<std::uint8_t> entries)
    : ctx_(ctx), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw Error("matrix entry count mismatch");
    for (auto& v : a_)
        if (v >= ctx_.q()) v = ctx_.reduce(v);
}

Matrix Matrix::identity(FieldContext ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldContext ctx, const std::vector<Vector>& rows,
                         std::size_t cols) {
    Matrix m(ctx, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    std::vector<std::uint8_t> e(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    return Vector(ctx_, std::move(e));
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.context() != b.context() || a.cols() != b.rows())
        throw Error("matrix product shape mismatch");
    const int q = a.context().q();
    Matrix c(a.context(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const int aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                int v = c.at(i, j) + aik * b.at(k, j);
                c.set(i, j, static_cast<std::uint8_t>(v % q));
            }
        }
    }
    return c;
}

Vector apply(const Vector& x, const Matrix& b) {
    if (x.context() != b.context() || x.size() != b.rows())
        throw Error("vector/matrix shape mismatch");
    const int q = b.context().q();
    std::vector<int> acc(b.cols(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int xi = x[i];
        if (xi == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += xi * b.at(i, j);
    }
    std::vector<std::uint8_t> e(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        e[j] = static_cast<std::uint8_t>(acc[j] % q);
    return Vector(b.context(), std::move(e));
}

RrefResult rref(const Matrix& m) {
    const FieldContext ctx = m.context();
    Matrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t sel = r;
        while (sel < w.rows() && w.at(sel, c) == 0) ++sel;
        if (sel == w.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < w.cols(); ++j) {
                std::uint8_t t = w.at(r, j);
                w.set(r, j, w.at(sel, j));
                w.set(sel, j, t);
            }
        const std::uint8_t piv_inv = ctx.inv(w.at(r, c));
        for (std::size_t j = 0; j < w.cols(); ++j) w.set(r, j, ctx.mul(piv_inv, w.at(r, j)));
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const std::uint8_t f = w.at(i, c);
            for (std::size_t j = 0; j < w.cols(); ++j)
                w.set(i, j, ctx.sub(w.at(i, j), ctx.mul(f, w.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(ctx, r, w.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) out.set(i, j, w.at(i, j));
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool in_row_space(const Matrix& m, const Vector& v) {
    RrefResult r = rref(m);
    // Reduce v against the RREF rows; the residue is zero iff v is spanned.
    Vector residue = v;
    for (std::size_t i = 0; i < r.reduced.rows(); ++i) {
        const std::uint8_t c = residue[r.pivots[i]];
        if (c != 0) residue = sub(residue, scale(c, r.reduced.row(i)));
    }
    return residue.is_zero();
}

Matrix nullspace(const Matrix& m) {
    const FieldContext ctx = m.context();
    const std::size_t n = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<std::uint8_t> u(n, 0);
        u[free_c] = 1;
        // Back-substitute: pivot variable of row i is -R[i][free_c].
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            u[r.pivots[i]] = ctx.neg(r.reduced.at(i, free_c));
        basis.emplace_back(ctx, std::move(u));
    }
    Matrix b = Matrix::from_rows(ctx, basis, n);
    return rref(b).reduced;
}

std::optional<Matrix> try_invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("invert requires a square matrix");
    const FieldContext ctx = m.context();
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I].
    Matrix w(ctx, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.set(i, j, m.at(i, j));
        w.set(i, n + i, 1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && w.at(sel, c) == 0) ++sel;
        if (sel == n) return std::nullopt;
        if (sel != c)
            for (std::size_t j = 0; j < 2 * n; ++j) {
                std::uint8_t t = w.at(c, j);
                w.set(c, j, w.at(sel, j));
                w.set(sel, j, t);
            }
        const std::uint8_t piv_inv = ctx.inv(w.at(c, c));
        for (std::size_t j = 0; j < 2 * n; ++j) w.set(c, j, ctx.mul(piv_inv, w.at(c, j)));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w.at(i, c) == 0) continue;
            const std::uint8_t f = w.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j)
                w.set(i, j, ctx.sub(w.at(i, j), ctx.mul(f, w.at(c, j))));
        }
    }
    Matrix out(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, w.at(i, n + j));
    return out;
}

Matrix invert(const Matrix& m) {
    if (auto inv = try_invert(m)) return *inv;
    throw SingularMatrix("matrix is singular");
}

std::uint64_t checked_pow(int q, int n, std::uint64_t cap, const char* what) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / static_cast<std::uint64_t>(q))
            throw CapExceeded(std::string(what) + ": " + std::to_string(q) + "^" +
                              std::to_string(n) + " exceeds cap " + std::to_string(cap));
        v *= static_cast<std::uint64_t>(q);
    }
    if (v > cap)
        throw CapExceeded(std::string(what) + " exceeds cap " + std::to_string(cap));
    return v;
}

bool for_each_vector(FieldContext ctx, std::size_t n,
                     const std::function<bool(const Vector&)>& visit,
                     std::uint64_t cap) {
    checked_pow(ctx.q(), static_cast<int>(n), cap, "vector enumeration");
    std::vector<std::uint8_t> e(n, 0);
    while (true) {
        if (!visit(Vector(ctx, e))) return false;
        // Lexicographic order: increment the last coordinate first.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++e[i] < ctx.q()) break;
            e[i] = 0;
            if (i == 0) return true;
        }
        if (n == 0) return true;
    }
}

std::vector<Vector> enumerate_vectors(FieldContext ctx, std::size_t n, std::uint64_t cap) {
    std::vector<Vector> out;
    for_each_vector(
        ctx, n,
        [&](const Vector& v) {
            out.push_back(v);
            return true;
        },
        cap);
    return out;
}

}  // namespace combmet
