#ifndef COMBMET_CAPS_HPP
#define COMBMET_CAPS_HPP

#include <cstddef>
#include <cstdint>

namespace combmet {

/// Resource limits for the exhaustive enumerations.  Every scan that could
/// blow up checks against one of these and throws CapExceeded instead of
/// running away.
struct Caps {
    /// Max number of vectors / codewords / matrices visited by one stream.
    std::uint64_t max_enum = std::uint64_t{1} << 24;
    /// Max number of group elements held by a closure or brute-force scan.
    std::uint64_t max_group = 1'000'000;
    /// Max ground-set size for permutation enumeration (n! growth).
    int max_perm_n = 8;
    /// Max code dimension considered by subspace-wide scans.
    int max_dim = 4;
};

}  // namespace combmet

#endif
