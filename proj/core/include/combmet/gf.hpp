#ifndef COMBMET_GF_HPP
#define COMBMET_GF_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "combmet/caps.hpp"
#include "combmet/errors.hpp"

namespace combmet {

/// Arithmetic in the prime field F_q, 2 <= q <= 251.  Residues are always
/// stored as canonical representatives 0..q-1 so that value equality is
/// bit equality.
class FieldContext {
  public:
    explicit FieldContext(int q);

    int q() const { return q_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        int s = a + b;
        return static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
        int s = a - b;
        return static_cast<std::uint8_t>(s < 0 ? s + q_ : s);
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((a * b) % q_);
    }
    std::uint8_t neg(std::uint8_t a) const {
        return static_cast<std::uint8_t>(a == 0 ? 0 : q_ - a);
    }
    /// Multiplicative inverse; a must be nonzero.
    std::uint8_t inv(std::uint8_t a) const;
    std::uint8_t reduce(long long v) const {
        long long r = v % q_;
        return static_cast<std::uint8_t>(r < 0 ? r + q_ : r);
    }
    /// A generator of the multiplicative group F_q^*.
    std::uint8_t primitive_root() const;

    friend bool operator==(FieldContext a, FieldContext b) { return a.q_ == b.q_; }
    friend bool operator!=(FieldContext a, FieldContext b) { return a.q_ != b.q_; }

    static bool is_prime(int q);

  private:
    int q_;
};

/// Element of F_q^n.
class Vector {
  public:
    Vector(FieldContext ctx, std::vector<std::uint8_t> entries);
    static Vector zero(FieldContext ctx, std::size_t n);
    static Vector unit(FieldContext ctx, std::size_t n, std::size_t i);

    FieldContext context() const { return ctx_; }
    std::size_t size() const { return e_.size(); }
    std::uint8_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint8_t>& entries() const { return e_; }

    bool is_zero() const;
    /// Bit i set iff coordinate i (0-based) is nonzero.  Requires n <= 64.
    std::uint64_t support_mask() const;

    friend bool operator==(const Vector& a, const Vector& b) {
        return a.ctx_ == b.ctx_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  private:
    FieldContext ctx_;
    std::vector<std::uint8_t> e_;
};

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(std::uint8_t c, const Vector& a);
std::uint8_t dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over F_q.
class Matrix {
  public:
    Matrix(FieldContext ctx, std::size_t rows, std::size_t cols);
    Matrix(FieldContext ctx, std::size_t rows, std::size_t cols,
           std::vector<std::uint8_t> entries);
    static Matrix identity(FieldContext ctx, std::size_t n);
    static Matrix from_rows(FieldContext ctx, const std::vector<Vector>& rows,
                            std::size_t cols);

    FieldContext context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint8_t v) { a_[r * cols_ + c] = v; }
    Vector row(std::size_t r) const;
    const std::vector<std::uint8_t>& entries() const { return a_; }

    /// Entry bytes, usable as a deterministic set/map key.
    std::string bytes_key() const { return std::string(a_.begin(), a_.end()); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    FieldContext ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

Matrix mul(const Matrix& a, const Matrix& b);
/// Row-vector action x |-> x*B.  All linear maps in this library act on row
/// vectors; the i-th row of B is the image of the i-th unit vector.
Vector apply(const Vector& x, const Matrix& b);

struct RrefResult {
    Matrix reduced;                   // zero rows removed
    std::vector<std::size_t> pivots;  // 0-based pivot columns, increasing
};

/// Reduced row echelon form over F_q; row space is unchanged.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// True iff v lies in the row space of m.
bool in_row_space(const Matrix& m, const Vector& v);

/// RREF basis of { u : m * u^T = 0 }.  rank(m) + rank(result) = m.cols().
Matrix nullspace(const Matrix& m);

/// Inverse of a square matrix; throws SingularMatrix otherwise.
Matrix invert(const Matrix& m);
std::optional<Matrix> try_invert(const Matrix& m);

/// q^n if it fits under cap, otherwise throws CapExceeded.
std::uint64_t checked_pow(int q, int n, std::uint64_t cap,
                          const char* what = "enumeration");

/// Visits all q^n vectors in lexicographic order (last coordinate fastest).
/// The visitor returns false to stop early; the function returns false iff
/// stopped early.
bool for_each_vector(FieldContext ctx, std::size_t n,
                     const std::function<bool(const Vector&)>& visit,
                     std::uint64_t cap = Caps{}.max_enum);

/// Materialized variant of for_each_vector.
std::vector<Vector> enumerate_vectors(FieldContext ctx, std::size_t n,
                                      std::uint64_t cap = Caps{}.max_enum);

}  // namespace combmet

#endif
