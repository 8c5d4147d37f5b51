#include "combmet/metric.hpp"

#include <bit>

#include "combmet/errors.hpp"

namespace combmet {

namespace {

bool cover_exists(const std::vector<std::uint64_t>& sets, std::uint64_t uncovered,
                  int depth) {
    if (uncovered == 0) return true;
    if (depth == 0) return false;
    // Branch on the least uncovered element; every cover must contain it.
    const std::uint64_t elem = uncovered & (~uncovered + 1);
    for (const auto s : sets) {
        if ((s & elem) == 0) continue;
        if (cover_exists(sets, uncovered & ~s, depth - 1)) return true;
    }
    return false;
}

}  // namespace

int min_cover_size(const std::vector<std::uint64_t>& sets, std::uint64_t support) {
    if (support == 0) return 0;
    std::vector<std::uint64_t> relevant;
    relevant.reserve(sets.size());
    std::uint64_t reach = 0;
    for (const auto s : sets)
        if ((s & support) != 0) {
            relevant.push_back(s);
            reach |= s;
        }
    if ((support & ~reach) != 0) throw Error("support not coverable by the family");
    for (int d = 1; d <= static_cast<int>(relevant.size()); ++d)
        if (cover_exists(relevant, support, d)) return d;
    return static_cast<int>(relevant.size());  // unreachable for coverable input
}

int weight_of_support(const Covering& f, std::uint64_t support) {
    return min_cover_size(f.set_masks(), support);
}

int weight(const Covering& f, const Vector& x) {
    if (static_cast<int>(x.size()) != f.n()) throw Error("vector length != n");
    return weight_of_support(f, x.support_mask());
}

int distance(const Covering& f, const Vector& x, const Vector& y) {
    return weight(f, sub(x, y));
}

int max_weight(const Covering& f) { return weight_of_support(f, f.ground_mask()); }

std::vector<int> weight_table(const Covering& f) {
    if (f.n() > 24) throw Error("weight table limited to n <= 24");
    const std::size_t size = std::size_t{1} << f.n();
    std::vector<int> table(size);
    table[0] = 0;
    for (std::uint64_t s = 1; s < size; ++s) table[s] = weight_of_support(f, s);
    return table;
}

}  // namespace combmet
