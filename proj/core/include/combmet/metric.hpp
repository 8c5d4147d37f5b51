#ifndef COMBMET_METRIC_HPP
#define COMBMET_METRIC_HPP

#include <cstdint>
#include <vector>

#include "combmet/covering.hpp"
#include "combmet/gf.hpp"

namespace combmet {

/// Exact minimum number of sets from `sets` covering `support`.  Iterative
/// deepening: try cover sizes 1, 2, ...; at each node branch only on the
/// sets containing one fixed uncovered element.  Sets disjoint from the
/// support are pruned up front.  `support` must be coverable.
int min_cover_size(const std::vector<std::uint64_t>& sets, std::uint64_t support);

/// wt_F(x): minimum number of basic sets covering supp(x); 0 iff x = 0.
int weight(const Covering& f, const Vector& x);
int weight_of_support(const Covering& f, std::uint64_t support);

/// d_F(x, y) = wt_F(x - y).
int distance(const Covering& f, const Vector& x, const Vector& y);

/// max over F_q^n of wt_F = weight of the full support [n] (supports are
/// monotone, so [n] maximizes; independent of q).
int max_weight(const Covering& f);

/// Weight of every support mask, indexed by mask.  Requires n <= 24.
std::vector<int> weight_table(const Covering& f);

}  // namespace combmet

#endif
