#ifndef COMBMET_MEP_HPP
#define COMBMET_MEP_HPP

#include <functional>
#include <optional>
#include <vector>

#include "combmet/code.hpp"
#include "combmet/covering.hpp"
#include "combmet/isometry.hpp"

namespace combmet {

/// A weight-preserving linear bijection source -> target, given by the
/// images of the source's canonical (RREF) basis rows.  Instances are only
/// produced by make_local_equivalence, which verifies bijectivity and
/// exhaustive weight preservation over all q^k codewords.
struct LocalEquivalence {
    LinearCode source;
    LinearCode target;
    std::vector<Vector> images;
};

/// Validates and builds a local equivalence; returns nullopt when the map is
/// not a weight-preserving bijection onto the target.
std::optional<LocalEquivalence> make_local_equivalence(const Covering& f,
                                                       const LinearCode& source,
                                                       const LinearCode& target,
                                                       std::vector<Vector> images,
                                                       std::uint64_t cap = Caps{}.max_enum);

/// Image of a source codeword under the equivalence.
Vector map_codeword(const LocalEquivalence& t, const Vector& codeword);

/// All weight-preserving linear bijections c1 -> c2, enumerated over ordered
/// bases of c2 (deterministic order), up to `limit` of them.
std::vector<LocalEquivalence> find_local_equivalences(const Covering& f,
                                                      const LinearCode& c1,
                                                      const LinearCode& c2,
                                                      std::size_t limit,
                                                      const Caps& caps = {});
/// Visitor form; the visitor returns false to stop.
bool for_each_local_equivalence(const Covering& f, const LinearCode& c1,
                                const LinearCode& c2,
                                const std::function<bool(const LocalEquivalence&)>& visit,
                                const Caps& caps = {});

/// First group element agreeing with t on every source codeword, if any.
std::optional<Isometry> find_extension(const LocalEquivalence& t,
                                       const std::vector<Isometry>& group);

/// Witness for coverings with basic sets of two different sizes: a local
/// equivalence on span{e_i : i in B} with no extension in `group`.
/// Throws NoUnequalSets when all basic sets share one cardinality.
LocalEquivalence construct_prop7_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group,
                                         std::uint64_t cap = Caps{}.max_enum);

/// Witness for coverings with >= 3 connected components and sets of size
/// >= 2 in two of them: a two-dimensional local equivalence with no
/// extension.
/// Falls back to an exhaustive witness search if the textbook construction
/// degenerates (possible at q = 2).  Throws PreconditionFailed.
LocalEquivalence construct_prop8_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group,
                                         const Caps& caps = {});

/// Witness for two-component coverings with an overlapping pair inside one
/// component.  Throws PreconditionFailed.
LocalEquivalence construct_prop9_witness(const Covering& f, FieldContext ctx,
                                         const std::vector<Isometry>& group);

enum class MepReason {
    hamming,
    two_component_k_partition,
    structural_refutation,
    exhaustive,
    conjecture,
};

struct MepVerdict {
    bool satisfies = false;
    MepReason reason = MepReason::exhaustive;
    std::optional<LocalEquivalence> witness;
};

enum class MepMode { structural, exhaustive, conjecture };

/// The conjectured criterion for connected coverings: all basic sets share
/// one cardinality k and every k-subset of [n] is a basic set.
bool conjecture_prediction(const Covering& f);

/// For unconnected coverings (l >= 2 components) the structural verdict of
/// the trichotomy: satisfies iff (l = 2 and f is a k-partition) or f is the
/// Hamming covering; otherwise attaches a constructed non-extendable
/// witness.  For connected coverings the structural verdict does not apply:
/// mode selects the exhaustive scan or the conjecture's prediction.
MepVerdict mep_verdict(const Covering& f, FieldContext ctx, MepMode mode,
                       const Caps& caps = {});

/// Checks extension existence for every local equivalence between subspace
/// pairs of dimension <= max_dim; returns the first non-extendable witness
/// or satisfies = true for the scanned range.  Uses the true isometry group
/// (backtracking search) when affordable, the product closure otherwise.
MepVerdict exhaustive_mep_scan(const Covering& f, FieldContext ctx, std::size_t max_dim,
                               const Caps& caps = {});

/// The group used by extension scans: brute force when within budget,
/// else the G/K_M closure.
std::vector<Isometry> extension_search_group(const Covering& f, FieldContext ctx,
                                             const Caps& caps = {});

}  // namespace combmet

#endif
