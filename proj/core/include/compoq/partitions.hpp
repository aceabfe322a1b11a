#ifndef COMPOQ_PARTITIONS_HPP
#define COMPOQ_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "compoq/integer.hpp"
#include "compoq/partsets.hpp"

namespace compoq {

struct DecoratedPart {
    std::int64_t value = 0;
    bool overlined = false;
    int color = 0;

    friend bool operator==(const DecoratedPart&, const DecoratedPart&) = default;
};

/// A partition whose parts may carry an overline and a color. Parts are kept
/// in weakly decreasing order of value.
struct PartitionMultiset {
    std::vector<DecoratedPart> parts;

    std::int64_t size() const;
    std::size_t length() const noexcept { return parts.size(); }
};

/// One admissible kind of part in a decorated partition: a color, whether
/// it is overlined (overlined values occur at most once per color), and
/// which values it may take.
struct PartKind {
    int color = 0;
    bool overlined = false;
    std::function<bool(std::int64_t)> allows = [](std::int64_t) { return true; };
};

using Palette = std::vector<PartKind>;

/// Palettes for the decorated objects counted by the named generating functions.
Palette overpartition_palette();
Palette colored_palette(int colors);
Palette r_palette();  // three colors, overlines allowed on colors 0 and 1 only
Palette s_palette();  // overlines on color 0 only; colors 1, 2 use multiples of 4

/// Visits every decorated partition of n over the palette.
void for_each_decorated_partition(std::int64_t n, const Palette& palette,
                                  const std::function<void(const PartitionMultiset&)>& visit);

/// Number of decorated partitions of n, by explicit enumeration.
Integer count_decorated(std::int64_t n, const Palette& palette);

/// p_S(0..max_n) by the coin-change DP.
std::vector<Integer> counts_ps(const PartSet& parts, std::int64_t max_n);
Integer count_ps(const PartSet& parts, std::int64_t n);

/// Partitions in which odd parts are distinct.
std::vector<Integer> counts_pod(std::int64_t max_n);
Integer count_pod(std::int64_t n);
Integer count_pod_enumerated(std::int64_t n);

/// Overpartitions: enumeration for n <= 30, generating function beyond.
Integer count_overpartitions(std::int64_t n);

/// Coefficients of 1/(q;q)^colors.
std::vector<Integer> counts_colored(std::int64_t max_n, int colors);
Integer count_colored(std::int64_t n, int colors);

/// Partitions into parts = +-1 (mod 5).
std::vector<Integer> counts_rr(std::int64_t max_n);
Integer count_rr(std::int64_t n);

/// Partitions of n whose parts differ pairwise by at least 2, by enumeration.
Integer count_rr_gap(std::int64_t n);

} // namespace compoq

#endif
