#include "compoq/partitions.hpp"

#include "compoq/errors.hpp"
#include "compoq/qgen.hpp"

namespace compoq {

namespace {

void require_size(std::int64_t n)
{
    if (n < 0) {
        throw InvalidArgument("partition size must be >= 0, got " + std::to_string(n));
    }
}

constexpr std::int64_t kOverpartitionEnumerationLimit = 30;

// Parts are ordered by (value descending, palette index ascending); a part
// may repeat the previous (value, kind) only when that kind is not overlined.
struct DecoratedWalker {
    const Palette& palette;
    const std::function<void(const PartitionMultiset&)>* visit = nullptr;
    PartitionMultiset current;
    Integer count = 0;

    void walk(std::int64_t remaining, std::int64_t last_value, std::size_t last_kind, bool has_last)
    {
        if (remaining == 0) {
            if (visit != nullptr) {
                (*visit)(current);
            }
            ++count;
            return;
        }
        const std::int64_t top = has_last ? std::min(last_value, remaining) : remaining;
        for (std::int64_t v = top; v >= 1; --v) {
            std::size_t first_kind = 0;
            if (has_last && v == last_value) {
                first_kind = palette[last_kind].overlined ? last_kind + 1 : last_kind;
            }
            for (std::size_t kind = first_kind; kind < palette.size(); ++kind) {
                const PartKind& pk = palette[kind];
                if (!pk.allows(v)) {
                    continue;
                }
                if (visit != nullptr) {
                    current.parts.push_back({v, pk.overlined, pk.color});
                }
                walk(remaining - v, v, kind, true);
                if (visit != nullptr) {
                    current.parts.pop_back();
                }
            }
        }
    }
};

void pod_walk(std::int64_t remaining, std::int64_t last, Integer& count)
{
    if (remaining == 0) {
        ++count;
        return;
    }
    for (std::int64_t p = std::min(last, remaining); p >= 1; --p) {
        if (p == last && p % 2 == 1) {
            continue;
        }
        pod_walk(remaining - p, p, count);
    }
}

void gap_walk(std::int64_t remaining, std::int64_t max_part, Integer& count)
{
    if (remaining == 0) {
        ++count;
        return;
    }
    for (std::int64_t p = std::min(max_part, remaining); p >= 1; --p) {
        gap_walk(remaining - p, p - 2, count);
    }
}

bool multiple_of_four(std::int64_t v) { return v % 4 == 0; }

} // namespace

std::int64_t PartitionMultiset::size() const
{
    std::int64_t total = 0;
    for (const auto& part : parts) {
        total += part.value;
    }
    return total;
}

Palette overpartition_palette() { return {PartKind{0, false}, PartKind{0, true}}; }

Palette colored_palette(int colors)
{
    if (colors < 1) {
        throw InvalidArgument("need at least one color");
    }
    Palette palette;
    for (int c = 0; c < colors; ++c) {
        palette.push_back(PartKind{c, false});
    }
    return palette;
}

Palette r_palette()
{
    return {PartKind{0, false}, PartKind{0, true}, PartKind{1, false}, PartKind{1, true}, PartKind{2, false}};
}

Palette s_palette()
{
    return {PartKind{0, false}, PartKind{0, true}, PartKind{1, false, multiple_of_four},
            PartKind{2, false, multiple_of_four}};
}

void for_each_decorated_partition(std::int64_t n, const Palette& palette,
                                  const std::function<void(const PartitionMultiset&)>& visit)
{
    require_size(n);
    DecoratedWalker walker{palette, &visit, {}, 0};
    walker.walk(n, 0, 0, false);
}

Integer count_decorated(std::int64_t n, const Palette& palette)
{
    require_size(n);
    DecoratedWalker walker{palette, nullptr, {}, 0};
    walker.walk(n, 0, 0, false);
    return walker.count;
}

std::vector<Integer> counts_ps(const PartSet& parts, std::int64_t max_n)
{
    require_size(max_n);
    if (max_n > parts.bound() && !parts.is_finite()) {
        throw InvalidArgument("part set '" + parts.name() + "' materialized to " + std::to_string(parts.bound()) +
                              " < requested size " + std::to_string(max_n));
    }
    std::vector<Integer> d(static_cast<std::size_t>(max_n) + 1);
    d[0] = 1;
    for (const std::int64_t m : parts.members()) {
        if (m > max_n) {
            break;
        }
        for (std::int64_t n = m; n <= max_n; ++n) {
            d[static_cast<std::size_t>(n)] += d[static_cast<std::size_t>(n - m)];
        }
    }
    return d;
}

Integer count_ps(const PartSet& parts, std::int64_t n) { return counts_ps(parts, n).back(); }

std::vector<Integer> counts_pod(std::int64_t max_n)
{
    require_size(max_n);
    std::vector<Integer> d(static_cast<std::size_t>(max_n) + 1);
    d[0] = 1;
    for (std::int64_t m = 1; m <= max_n; ++m) {
        if (m % 2 == 1) {
            for (std::int64_t n = max_n; n >= m; --n) {
                d[static_cast<std::size_t>(n)] += d[static_cast<std::size_t>(n - m)];
            }
        } else {
            for (std::int64_t n = m; n <= max_n; ++n) {
                d[static_cast<std::size_t>(n)] += d[static_cast<std::size_t>(n - m)];
            }
        }
    }
    return d;
}

Integer count_pod(std::int64_t n) { return counts_pod(n).back(); }

Integer count_pod_enumerated(std::int64_t n)
{
    require_size(n);
    Integer count = 0;
    pod_walk(n, n + 1, count);
    return count;
}

Integer count_overpartitions(std::int64_t n)
{
    require_size(n);
    if (n <= kOverpartitionEnumerationLimit) {
        return count_decorated(n, overpartition_palette());
    }
    return named_gf(NamedSeries::overpartition, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

std::vector<Integer> counts_colored(std::int64_t max_n, int colors)
{
    require_size(max_n);
    if (colors < 1) {
        throw InvalidArgument("need at least one color");
    }
    std::vector<Integer> d(static_cast<std::size_t>(max_n) + 1);
    d[0] = 1;
    for (int c = 0; c < colors; ++c) {
        for (std::int64_t m = 1; m <= max_n; ++m) {
            for (std::int64_t n = m; n <= max_n; ++n) {
                d[static_cast<std::size_t>(n)] += d[static_cast<std::size_t>(n - m)];
            }
        }
    }
    return d;
}

Integer count_colored(std::int64_t n, int colors) { return counts_colored(n, colors).back(); }

std::vector<Integer> counts_rr(std::int64_t max_n)
{
    require_size(max_n);
    return counts_ps(rogers_ramanujan_set(std::max<std::int64_t>(max_n, 1)), max_n);
}

Integer count_rr(std::int64_t n) { return counts_rr(n).back(); }

Integer count_rr_gap(std::int64_t n)
{
    require_size(n);
    Integer count = 0;
    gap_walk(n, n, count);
    return count;
}

} // namespace compoq
