#include "compoq/compositions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "compoq/errors.hpp"

namespace compoq {

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t n)
{
    if (n < 0) {
        return std::nullopt;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    if (r * r != n) {
        return std::nullopt;
    }
    return r;
}

Integer factorial(std::int64_t n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

void require_enumerable(const PartSet& parts, std::int64_t n)
{
    if (n < 0) {
        throw InvalidArgument("composition size must be >= 0");
    }
    if (n > parts.bound() && !parts.is_finite()) {
        throw InvalidArgument("part set '" + parts.name() + "' materialized to " +
                              std::to_string(parts.bound()) + " < requested size " + std::to_string(n));
    }
}

// Index j >= 1 with part = j(j+1)/2.
std::optional<std::int64_t> triangular_index(std::int64_t part)
{
    const auto root = exact_sqrt(1 + 8 * part);
    if (!root || (*root - 1) % 2 != 0) {
        return std::nullopt;
    }
    return (*root - 1) / 2;
}

// Nonzero j with part = j(3j-1)/2.
std::optional<std::int64_t> pentagonal_index(std::int64_t part)
{
    const auto root = exact_sqrt(1 + 24 * part);
    if (!root) {
        return std::nullopt;
    }
    if ((1 + *root) % 6 == 0) {
        return (1 + *root) / 6;
    }
    if ((1 - *root) % 6 == 0) {
        return (1 - *root) / 6;
    }
    return std::nullopt;
}

// Nonzero j with part = j(3j+2).
std::optional<std::int64_t> u_index(std::int64_t part)
{
    const auto root = exact_sqrt(1 + 3 * part);
    if (!root) {
        return std::nullopt;
    }
    if ((*root - 1) % 3 == 0) {
        return (*root - 1) / 3;
    }
    if ((-1 - *root) % 3 == 0) {
        return (-1 - *root) / 3;
    }
    return std::nullopt;
}

void compose(std::span<const std::int64_t> members, std::int64_t remaining, std::vector<std::int64_t>& prefix,
             const std::function<void(std::span<const std::int64_t>)>& visit)
{
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    for (const std::int64_t part : members) {
        if (part > remaining) {
            break;
        }
        prefix.push_back(part);
        compose(members, remaining - part, prefix, visit);
        prefix.pop_back();
    }
}

struct WeightedPart {
    std::int64_t part;
    Integer weight;
};

void accumulate(std::span<const WeightedPart> parts, std::int64_t remaining, const Integer& product, Integer& total)
{
    if (remaining == 0) {
        total += product;
        return;
    }
    Integer next;
    for (const auto& [part, weight] : parts) {
        if (part > remaining) {
            break;
        }
        next = product * weight;
        accumulate(parts, remaining - part, next, total);
    }
}

std::vector<WeightedPart> nonzero_weights(const PartSet& parts, const WeightRule& weight, std::int64_t max_n)
{
    std::vector<WeightedPart> out;
    for (const std::int64_t m : parts.members()) {
        if (m > max_n) {
            break;
        }
        Integer w = weight(m);
        if (w != 0) {
            out.push_back({m, std::move(w)});
        }
    }
    return out;
}

void factorize(std::int64_t remaining, std::vector<std::int64_t>& prefix,
               const std::function<void(std::span<const std::int64_t>)>& visit)
{
    if (remaining == 1) {
        visit(prefix);
        return;
    }
    for (std::int64_t d = 2; d <= remaining; ++d) {
        if (remaining % d != 0) {
            continue;
        }
        prefix.push_back(d);
        factorize(remaining / d, prefix, visit);
        prefix.pop_back();
    }
}

void partitions_of(std::span<const std::int64_t> descending, std::size_t start, std::int64_t remaining,
                   std::vector<std::int64_t>& prefix,
                   const std::function<void(std::span<const std::int64_t>)>& visit)
{
    visit(prefix);
    for (std::size_t i = start; i < descending.size(); ++i) {
        if (descending[i] > remaining) {
            continue;
        }
        prefix.push_back(descending[i]);
        partitions_of(descending, i, remaining - descending[i], prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

std::int64_t Composition::size() const
{
    std::int64_t total = 0;
    for (const auto p : parts) {
        total += p;
    }
    return total;
}

std::size_t Composition::multiplicity(std::int64_t part) const
{
    return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), part));
}

std::map<std::int64_t, std::size_t> Composition::multiplicities() const
{
    std::map<std::int64_t, std::size_t> out;
    for (const auto p : parts) {
        ++out[p];
    }
    return out;
}

Integer Composition::norm() const
{
    Integer out = 1;
    for (const auto p : parts) {
        out *= static_cast<long>(p);
    }
    return out;
}

WeightRule::WeightRule(std::string description, Function weight)
    : description_(std::move(description)), weight_(std::move(weight))
{
}

WeightRule WeightRule::constant(const Integer& z)
{
    return WeightRule("constant " + z.get_str(), [z](std::int64_t) { return z; });
}

WeightRule WeightRule::from_map(std::map<std::int64_t, Integer> weights, Integer fallback)
{
    return WeightRule("map", [weights = std::move(weights), fallback = std::move(fallback)](std::int64_t part) {
        const auto it = weights.find(part);
        return it == weights.end() ? fallback : it->second;
    });
}

WeightRule WeightRule::from_series(const TruncatedSeries& series)
{
    const Integer a0 = series[0];
    if (a0 != 1 && a0 != -1) {
        throw NotInvertible("non-invertible over exact integers: constant term " + a0.get_str());
    }
    // -a_m / a_0 = -a_m * a_0 for a unit a_0.
    return WeightRule("reciprocal weights", [series, a0](std::int64_t part) -> Integer {
        if (part < 1 || static_cast<std::size_t>(part) > series.order()) {
            throw InvalidArgument("part " + std::to_string(part) + " outside the series order");
        }
        return -series[static_cast<std::size_t>(part)] * a0;
    });
}

Integer WeightRule::weight(const Composition& c) const
{
    Integer out = 1;
    for (const auto p : c.parts) {
        out *= weight_(p);
    }
    return out;
}

WeightRule stat_weight(StatKind kind, int k, const Integer& z)
{
    switch (kind) {
    case StatKind::length:
        return WeightRule("length", [](std::int64_t) { return Integer(-1); });
    case StatKind::length_z:
        return WeightRule("length-z " + z.get_str(), [z](std::int64_t) { return z; });
    case StatKind::star_length: {
        const PartSet star = polygonal_star_set(k, 1);
        return WeightRule("star-length k=" + std::to_string(k),
                          [star](std::int64_t part) { return Integer(star.contains(part) ? -1 : 1); });
    }
    case StatKind::hat_length: {
        const PartSet hat = pentagonal_hat_set(1);
        return WeightRule("hat-length",
                          [hat](std::int64_t part) { return Integer(hat.contains(part) ? -1 : 1); });
    }
    case StatKind::p3:
        return WeightRule("p3", [](std::int64_t part) -> Integer {
            const auto j = triangular_index(part);
            if (!j || *j < 1) {
                return 0;
            }
            const long magnitude = 2 * *j + 1;
            return *j % 2 == 1 ? magnitude : -magnitude;
        });
    case StatKind::r:
        return WeightRule("r", [](std::int64_t part) -> Integer {
            const auto j = pentagonal_index(part);
            if (!j || *j == 0) {
                return 0;
            }
            return static_cast<long>(6 * *j - 1);
        });
    case StatKind::s:
        return WeightRule("s", [](std::int64_t part) -> Integer {
            const auto j = u_index(part);
            if (!j || *j == 0) {
                return 0;
            }
            return static_cast<long>(-1 - 3 * *j);
        });
    }
    throw InvalidArgument("unknown statistic");
}

std::string to_string(StatKind kind)
{
    switch (kind) {
    case StatKind::length:
        return "length";
    case StatKind::length_z:
        return "length-z";
    case StatKind::star_length:
        return "star-length";
    case StatKind::hat_length:
        return "hat-length";
    case StatKind::p3:
        return "p3";
    case StatKind::r:
        return "r";
    case StatKind::s:
        return "s";
    }
    return "unknown";
}

StatKind parse_stat_kind(const std::string& name)
{
    for (const StatKind kind : {StatKind::length, StatKind::length_z, StatKind::star_length,
                                StatKind::hat_length, StatKind::p3, StatKind::r, StatKind::s}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw InvalidArgument("unknown weight kind '" + name + "'");
}

void for_each_composition(const PartSet& parts, std::int64_t n,
                          const std::function<void(std::span<const std::int64_t>)>& visit)
{
    require_enumerable(parts, n);
    std::vector<std::int64_t> prefix;
    compose(parts.members(), n, prefix, visit);
}

std::vector<Composition> enumerate_compositions(const PartSet& parts, std::int64_t n)
{
    std::vector<Composition> out;
    for_each_composition(parts, n, [&out](std::span<const std::int64_t> c) {
        out.push_back(Composition{{c.begin(), c.end()}});
    });
    return out;
}

Integer weighted_sum_bruteforce(const PartSet& parts, const WeightRule& weight, std::int64_t n)
{
    require_enumerable(parts, n);
    // Zero-weight parts only contribute zero products, so they are pruned.
    const auto weighted = nonzero_weights(parts, weight, n);
    Integer total = 0;
    accumulate(weighted, n, Integer(1), total);
    return total;
}

std::vector<Integer> weighted_sums(const PartSet& parts, const WeightRule& weight, std::int64_t max_n)
{
    require_enumerable(parts, max_n);
    const auto weighted = nonzero_weights(parts, weight, max_n);
    std::vector<Integer> d(static_cast<std::size_t>(max_n) + 1);
    d[0] = 1;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        Integer& slot = d[static_cast<std::size_t>(n)];
        for (const auto& [part, w] : weighted) {
            if (part > n) {
                break;
            }
            mpz_addmul(slot.get_mpz_t(), w.get_mpz_t(), d[static_cast<std::size_t>(n - part)].get_mpz_t());
        }
    }
    return d;
}

Integer weighted_sum(const PartSet& parts, const WeightRule& weight, std::int64_t n)
{
    return weighted_sums(parts, weight, n).back();
}

TruncatedSeries weight_denominator(const PartSet& parts, const WeightRule& weight, std::size_t order)
{
    require_enumerable(parts, static_cast<std::int64_t>(order));
    TruncatedSeries s = TruncatedSeries::one(order);
    for (const std::int64_t m : parts.members()) {
        if (static_cast<std::size_t>(m) > order) {
            break;
        }
        s[static_cast<std::size_t>(m)] -= weight(m);
    }
    return s;
}

Integer multinomial_count(const Composition& c)
{
    Integer out = factorial(static_cast<std::int64_t>(c.length()));
    for (const auto& [part, count] : c.multiplicities()) {
        out /= factorial(static_cast<std::int64_t>(count));
    }
    return out;
}

TransferCheck symm_transfer_check(const std::map<std::int64_t, Integer>& weights, std::int64_t bound)
{
    if (bound < 0) {
        throw InvalidArgument("size bound must be >= 0");
    }
    TransferCheck result;
    result.scale = factorial(bound);

    std::vector<std::int64_t> values;
    for (const auto& [part, w] : weights) {
        if (part < 1) {
            throw InvalidArgument("transfer check parts must be positive");
        }
        values.push_back(part);
    }
    auto g = [&weights](std::span<const std::int64_t> parts) {
        Integer out = 1;
        for (const auto p : parts) {
            out *= weights.at(p);
        }
        return out;
    };

    // Partitions as weakly decreasing sequences.
    std::vector<std::int64_t> descending(values.rbegin(), values.rend());
    std::vector<std::int64_t> prefix;
    Integer partition_sum = 0;
    partitions_of(descending, 0, bound, prefix,
                  [&](std::span<const std::int64_t> lambda) { partition_sum += g(lambda); });
    result.partition_side = partition_sum * result.scale;

    Integer composition_sum = 0;
    if (!values.empty()) {
        const PartSet allowed = explicit_set("transfer", values).with_bound(std::max<std::int64_t>(bound, 1));
        for (std::int64_t n = 0; n <= bound; ++n) {
            for_each_composition(allowed, n, [&](std::span<const std::int64_t> c) {
                Composition comp{{c.begin(), c.end()}};
                Integer term = g(c) * result.scale;
                for (const auto& [part, count] : comp.multiplicities()) {
                    term *= factorial(static_cast<std::int64_t>(count));
                }
                term /= factorial(static_cast<std::int64_t>(comp.length()));
                composition_sum += term;
            });
        }
    } else {
        composition_sum = result.scale;  // only the empty composition
    }
    result.composition_side = composition_sum;
    result.equal = result.partition_side == result.composition_side;
    return result;
}

void for_each_ordered_factorization(std::int64_t n,
                                    const std::function<void(std::span<const std::int64_t>)>& visit)
{
    if (n < 1) {
        throw InvalidArgument("ordered factorizations require n >= 1");
    }
    std::vector<std::int64_t> prefix;
    factorize(n, prefix, visit);
}

std::vector<Composition> ordered_factorizations(std::int64_t n)
{
    std::vector<Composition> out;
    for_each_ordered_factorization(n, [&out](std::span<const std::int64_t> c) {
        out.push_back(Composition{{c.begin(), c.end()}});
    });
    return out;
}

Integer SignedFactorizationCounter::operator()(std::int64_t n)
{
    if (n < 1) {
        throw InvalidArgument("ordered factorizations require n >= 1");
    }
    if (n > 1'000'000) {
        throw Infeasible("signed factorization count limited to n <= 10^6");
    }
    if (n == 1) {
        return 1;
    }
    if (const auto it = memo_.find(n); it != memo_.end()) {
        return it->second;
    }
    // First factor d >= 2 contributes -1 times the signed count of n/d.
    Integer total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const std::int64_t e = n / d;
        if (d >= 2) {
            total -= (*this)(e);
        }
        if (e != d && e >= 2) {
            total -= (*this)(d);
        }
    }
    memo_.emplace(n, total);
    return total;
}

} // namespace compoq
