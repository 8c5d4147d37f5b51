#ifndef COMBMET_CODE_HPP
#define COMBMET_CODE_HPP

#include <functional>
#include <vector>

#include "combmet/caps.hpp"
#include "combmet/gf.hpp"

namespace combmet {

/// A linear code C in F_q^n, held canonically as the RREF of a generator
/// matrix (k rows, no zero rows).  Two codes are equal iff their canonical
/// generators are identical.
class LinearCode {
  public:
    /// Canonicalizes the span of `rows`; the zero code (k = 0) is allowed.
    static LinearCode from_generators(FieldContext ctx, std::size_t n,
                                      const std::vector<Vector>& rows);
    /// `gen` must already be in RREF with no zero rows.
    static LinearCode from_rref(Matrix gen);

    FieldContext context() const { return gen_.context(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dim() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    bool contains(const Vector& v) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.gen_ == b.gen_;
    }
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

  private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
    Matrix gen_;
};

/// Visits all q^k codewords once (coefficient vectors in lexicographic
/// order).  Returns false iff the visitor stopped early.
bool for_each_codeword(const LinearCode& c, const std::function<bool(const Vector&)>& visit,
                       std::uint64_t cap = Caps{}.max_enum);
std::vector<Vector> codewords(const LinearCode& c, std::uint64_t cap = Caps{}.max_enum);

/// Dual code under the standard dot product; dim(C) + dim(dual(C)) = n.
LinearCode dual(const LinearCode& c);

/// Visits every subspace of F_q^n of dimension <= max_dim exactly once:
/// dimensions ascending, pivot-column profiles in lexicographic order, free
/// entries enumerated last-cell-fastest.  The subspace count is checked
/// against `cap`.
bool for_each_subspace(FieldContext ctx, std::size_t n, std::size_t max_dim,
                       const std::function<bool(const LinearCode&)>& visit,
                       std::uint64_t cap = Caps{}.max_enum);
std::vector<LinearCode> all_subspaces(FieldContext ctx, std::size_t n, std::size_t max_dim,
                                      std::uint64_t cap = Caps{}.max_enum);

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial), used for
/// cap checks before enumerating.
std::uint64_t subspace_count(int q, int n, int k);

}  // namespace combmet

#endif
