#ifndef COMBMET_COVERING_HPP
#define COMBMET_COVERING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "combmet/gf.hpp"

namespace combmet {

/// Coordinate subsets of [n] are held as bit masks: bit i (0-based)
/// corresponds to the 1-based ground-set element i+1.  Ground sets are
/// limited to n <= 64.
std::uint64_t mask_from_indices(int n, const std::vector<int>& one_based);
std::vector<int> indices_from_mask(std::uint64_t mask);

class Covering;
struct NormalizeResult;
NormalizeResult normalize(int n, const std::vector<std::uint64_t>& raw_sets);

/// A normalized covering of [n]: distinct nonempty basic sets whose union is
/// [n], none contained in another.  Instances are only produced by
/// normalize(), so the invariants always hold.
class Covering {
  public:
    int n() const { return n_; }
    std::size_t set_count() const { return sets_.size(); }
    std::uint64_t set_mask(std::size_t j) const { return sets_[j]; }
    const std::vector<std::uint64_t>& set_masks() const { return sets_; }
    std::vector<std::vector<int>> sets() const;  // sorted, 1-based
    std::uint64_t ground_mask() const;

    friend bool operator==(const Covering& a, const Covering& b) {
        return a.n_ == b.n_ && a.sets_ == b.sets_;
    }
    friend bool operator!=(const Covering& a, const Covering& b) { return !(a == b); }

  private:
    friend NormalizeResult normalize(int n, const std::vector<std::uint64_t>& raw_sets);
    Covering(int n, std::vector<std::uint64_t> sets) : n_(n), sets_(std::move(sets)) {}

    int n_;
    std::vector<std::uint64_t> sets_;  // kept in first-appearance order
};

struct NormalizeResult {
    Covering covering;
    /// Sets removed as duplicates or as proper subsets of another set.
    std::vector<std::uint64_t> dropped;
};

/// Removes duplicates and every set properly contained in another one
/// (normalize(int, masks) above).  Throws EmptySetError / NotACovering when
/// the input is not a covering candidate.
NormalizeResult normalize(int n, const std::vector<std::vector<int>>& raw_sets_1based);

/// k when f is a partition of [n] into sets of one common size k.
std::optional<int> is_k_partition(const Covering& f);

/// Connected components of the basic-set intersection graph, as index lists
/// into f's sets, each sorted, components ordered by smallest set index.
std::vector<std::vector<std::size_t>> components(const Covering& f);

/// Equivalence classes of coordinates (same basic-set membership), the
/// class-by-set incidence matrix and the induced domination order.
struct ClassStructure {
    /// Coordinate masks, ordered by smallest element.
    std::vector<std::uint64_t> class_masks;
    /// Row i: bit j set iff class i is contained in basic set j.
    std::vector<std::uint64_t> incidence_rows;
    /// class_of[i] = index of the class containing coordinate i.
    std::vector<std::size_t> class_of;

    std::size_t class_count() const { return class_masks.size(); }

    /// True iff class i dominates class j (j's incidence row support is
    /// contained in i's).
    bool dominates(std::size_t i, std::size_t j) const {
        return (incidence_rows[j] & ~incidence_rows[i]) == 0;
    }
    bool strictly_dominates(std::size_t i, std::size_t j) const {
        return i != j && dominates(i, j);
    }
    /// All ordered pairs (i, j) with i != j and class i dominating class j.
    std::vector<std::pair<std::size_t, std::size_t>> strict_domination_pairs() const;
};

ClassStructure class_structure(const Covering& f);

/// Coordinates of x_support lying in head classes: among the classes meeting
/// x_support, keep those not strictly dominated by another such class.
std::uint64_t msh(const ClassStructure& cs, std::uint64_t x_support);
std::uint64_t msh(const Covering& f, std::uint64_t x_support);

/// x with every coordinate outside msh(supp(x)) zeroed.
Vector cleared_out(const Covering& f, const Vector& x);
Vector cleared_out(const ClassStructure& cs, const Vector& x);

/// Every normalized covering of [n] (n <= 4; the family count is
/// doubly exponential in n).  Deterministic order.
std::vector<Covering> all_normalized_coverings(int n);

}  // namespace combmet

#endif
