#ifndef COMBMET_ENUMERATOR_HPP
#define COMBMET_ENUMERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combmet/code.hpp"
#include "combmet/covering.hpp"
#include "combmet/metric.hpp"

namespace combmet {

/// Histogram of wt_F over the codewords of one code, padded to the global
/// degree D = max_weight(f) so distributions of different codes compare
/// directly.  coeffs[i] counts codewords of weight i; sum = q^dim, A_0 = 1.
struct WeightDistribution {
    int degree = 0;
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const WeightDistribution& a, const WeightDistribution& b) {
        return !(a == b);
    }

    /// "x^2 + 3xy + ..." rendering of sum_i A_i x^(D-i) y^i.
    std::string polynomial() const;
};

WeightDistribution enumerate_weights(const Covering& f, const LinearCode& c,
                                     std::uint64_t cap = Caps{}.max_enum);

/// Outcome of a MacWilliams-type identity check.  When the metric fails the
/// identity, `witness` holds two codes with equal distributions whose duals'
/// distributions differ.
struct IdentityVerdict {
    bool admits = false;
    std::optional<int> k;  // partition size, present when admits
    std::optional<std::pair<LinearCode, LinearCode>> witness;
};

/// Verdict from the covering's shape alone: admits iff f is a k-partition.
/// When refuted, attaches the constructed counterexample pair.
IdentityVerdict identity_verdict_structural(const Covering& f, FieldContext ctx);

/// Two one-dimensional codes with equal distributions and differing dual
/// distributions: (span{e_i0}, span{e_i0 + e_i1}) built from an overlapping
/// pair of basic sets, or an exhaustive search when f is a non-uniform
/// partition.  Both postconditions are verified before returning.  Throws
/// IsKPartition when no counterexample exists.
std::pair<LinearCode, LinearCode> construct_counterexample(const Covering& f,
                                                           FieldContext ctx);

/// Scans all subspaces of dimension <= max_dim, grouping them by weight
/// distribution; refutes with the first pair found in one group whose dual
/// distributions differ.
IdentityVerdict identity_verdict_exhaustive(const Covering& f, FieldContext ctx,
                                            std::size_t max_dim,
                                            std::uint64_t cap = Caps{}.max_enum);

}  // namespace combmet

#endif
