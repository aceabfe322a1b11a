#include "compoq/partsets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "compoq/errors.hpp"

namespace compoq {

namespace {

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus)
{
    const std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// Largest r with r*r <= n, for n >= 0.
__int128 isqrt(__int128 n)
{
    if (n < 0) {
        return -1;
    }
    auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

void require_bound(std::int64_t bound)
{
    if (bound < 1) {
        throw InvalidArgument("part set bound must be >= 1, got " + std::to_string(bound));
    }
}

void require_alpha_beta(int alpha, int beta)
{
    if (alpha <= 0 || alpha >= beta) {
        throw InvalidArgument("requires 0 < alpha < beta, got alpha=" + std::to_string(alpha) +
                              " beta=" + std::to_string(beta));
    }
    if ((beta - alpha) % 2 != 0) {
        throw InvalidArgument("alpha and beta must have the same parity");
    }
}

std::vector<std::int64_t> generate(const QuadraticFamily& family, std::int64_t bound)
{
    std::vector<std::int64_t> out;
    // Both branches are increasing in |j| for |j| >= 1 because |b| < 2a.
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t up = family.value(m);
        const std::int64_t down = family.value(-m);
        if (up > bound && down > bound) {
            break;
        }
        for (const std::int64_t j : {m, -m}) {
            const std::int64_t v = family.value(j);
            if (v >= 1 && v <= bound && family.admits(j)) {
                out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> generate(const ResidueFamily& family, std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(1, family.min_value); n <= bound; ++n) {
        const std::int64_t r = floor_mod(n, family.modulus);
        if (std::find(family.residues.begin(), family.residues.end(), r) != family.residues.end()) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::int64_t> generate(const ExplicitFamily& family, std::int64_t bound)
{
    std::vector<std::int64_t> out;
    std::copy_if(family.values.begin(), family.values.end(), std::back_inserter(out),
                 [bound](std::int64_t v) { return v <= bound; });
    return out;
}

std::vector<std::int64_t> generate(const PrimeFamily&, std::int64_t bound)
{
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) {
            continue;
        }
        out.push_back(p);
        for (std::int64_t m = p * p; m <= bound; m += p) {
            composite[static_cast<std::size_t>(m)] = true;
        }
    }
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

bool quadratic_contains(const QuadraticFamily& family, std::int64_t value)
{
    if (value < 1) {
        return false;
    }
    // a j^2 + b j - d v = 0
    const __int128 a = family.a;
    const __int128 b = family.b;
    const __int128 disc = b * b + 4 * a * family.d * static_cast<__int128>(value);
    const __int128 root = isqrt(disc);
    if (root * root != disc) {
        return false;
    }
    for (const __int128 numerator : {-b + root, -b - root}) {
        if (numerator % (2 * a) != 0) {
            continue;
        }
        const auto j = static_cast<std::int64_t>(numerator / (2 * a));
        if (family.admits(j) && family.value(j) == value) {
            return true;
        }
    }
    return false;
}

} // namespace

bool QuadraticFamily::admits(std::int64_t j) const
{
    switch (index) {
    case Index::nonzero:
        return j != 0;
    case Index::all:
        return true;
    case Index::positive:
        return j >= 1;
    case Index::even_nonzero:
        return j != 0 && j % 2 == 0;
    case Index::mod4_zero_one: {
        const std::int64_t r = floor_mod(j, 4);
        return j != 0 && (r == 0 || r == 1);
    }
    }
    return false;
}

PartSet::PartSet(std::string name, PartSetRule rule, std::int64_t bound)
    : name_(std::move(name)), rule_(std::move(rule)), bound_(bound)
{
    require_bound(bound_);
    members_ = std::visit([bound](const auto& family) { return generate(family, bound); }, rule_);
}

bool PartSet::contains(std::int64_t value) const
{
    return std::visit(
        [value](const auto& family) -> bool {
            using T = std::decay_t<decltype(family)>;
            if constexpr (std::is_same_v<T, QuadraticFamily>) {
                return quadratic_contains(family, value);
            } else if constexpr (std::is_same_v<T, ResidueFamily>) {
                if (value < std::max<std::int64_t>(1, family.min_value)) {
                    return false;
                }
                const std::int64_t r = floor_mod(value, family.modulus);
                return std::find(family.residues.begin(), family.residues.end(), r) !=
                       family.residues.end();
            } else if constexpr (std::is_same_v<T, ExplicitFamily>) {
                return std::binary_search(family.values.begin(), family.values.end(), value);
            } else {
                return is_prime(value);
            }
        },
        rule_);
}

std::int64_t PartSet::min_member() const
{
    if (members_.empty()) {
        throw InvalidArgument("part set '" + name_ + "' has no members up to its bound");
    }
    return members_.front();
}

PartSet PartSet::with_bound(std::int64_t bound) const { return PartSet(name_, rule_, bound); }

PartSet polygonal_set(int k, std::int64_t bound)
{
    if (k < 3) {
        throw InvalidArgument("polygonal_set requires k >= 3, got " + std::to_string(k));
    }
    require_bound(bound);
    QuadraticFamily family{k - 2, -(k - 4), 2, QuadraticFamily::Index::nonzero};
    return PartSet("P" + std::to_string(k), family, bound);
}

PartSet polygonal_star_set(int k, std::int64_t bound)
{
    if (k < 5 || k % 2 == 0) {
        throw InvalidArgument("polygonal_star_set requires odd k >= 5, got " + std::to_string(k));
    }
    require_bound(bound);
    QuadraticFamily family{k - 2, -(k - 4), 2, QuadraticFamily::Index::mod4_zero_one};
    return PartSet("P*" + std::to_string(k), family, bound);
}

PartSet residue_set_sk(int k, std::int64_t bound)
{
    if (k < 5) {
        throw InvalidArgument("residue_set_sk requires k >= 5, got " + std::to_string(k));
    }
    require_bound(bound);
    const std::int64_t m = k - 2;
    std::vector<std::int64_t> residues{0, 1, m - 1};
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    return PartSet("S" + std::to_string(k), ResidueFamily{m, std::move(residues), 1}, bound);
}

PartSet pentagonal_hat_set(std::int64_t bound)
{
    require_bound(bound);
    return PartSet("Phat", QuadraticFamily{3, -1, 2, QuadraticFamily::Index::even_nonzero}, bound);
}

PartSet general_r_set(int alpha, int beta, std::int64_t bound)
{
    require_alpha_beta(alpha, beta);
    require_bound(bound);
    QuadraticFamily family{alpha + beta, alpha - beta, 2, QuadraticFamily::Index::all};
    return PartSet("R*" + std::to_string(alpha) + "," + std::to_string(beta), family, bound);
}

PartSet general_t_set(int alpha, int beta, std::int64_t bound)
{
    require_alpha_beta(alpha, beta);
    require_bound(bound);
    const std::int64_t m = alpha + beta;
    std::vector<std::int64_t> residues{0, alpha, beta};
    std::sort(residues.begin(), residues.end());
    return PartSet("T" + std::to_string(alpha) + "," + std::to_string(beta),
                   ResidueFamily{m, std::move(residues), 1}, bound);
}

PartSet second_hexagonal_set(std::int64_t bound)
{
    require_bound(bound);
    return PartSet("H2", QuadraticFamily{2, 1, 1, QuadraticFamily::Index::positive}, bound);
}

PartSet u_set(std::int64_t bound)
{
    require_bound(bound);
    return PartSet("U", QuadraticFamily{3, 2, 1, QuadraticFamily::Index::nonzero}, bound);
}

PartSet naturals_set(std::int64_t bound)
{
    return PartSet("N", ResidueFamily{1, {0}, 1}, bound);
}

PartSet naturals_from_two_set(std::int64_t bound)
{
    return PartSet("N*", ResidueFamily{1, {0}, 2}, bound);
}

PartSet rogers_ramanujan_set(std::int64_t bound)
{
    return PartSet("RR", ResidueFamily{5, {1, 4}, 1}, bound);
}

PartSet prime_set(std::int64_t bound) { return PartSet("primes", PrimeFamily{}, bound); }

PartSet residue_set(std::string name, std::int64_t modulus, std::vector<std::int64_t> residues,
                    std::int64_t bound)
{
    if (modulus < 1) {
        throw InvalidArgument("residue_set modulus must be >= 1");
    }
    for (auto& r : residues) {
        r = floor_mod(r, modulus);
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    return PartSet(std::move(name), ResidueFamily{modulus, std::move(residues), 1}, bound);
}

PartSet explicit_set(std::string name, std::vector<std::int64_t> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (!values.empty() && values.front() < 1) {
        throw InvalidArgument("explicit part set values must be positive");
    }
    const std::int64_t bound = values.empty() ? 1 : values.back();
    return PartSet(std::move(name), ExplicitFamily{std::move(values)}, bound);
}

std::vector<std::string> named_set_names()
{
    return {"polygonal", "polygonal-star", "sk",         "pentagonal-hat",
            "r",         "t",              "second-hexagonal", "u",
            "naturals",  "naturals-from-two", "rr-residues", "primes"};
}

PartSet make_named_set(const std::string& name, const PartSetParams& params, std::int64_t bound)
{
    if (name == "polygonal") {
        return polygonal_set(params.k, bound);
    }
    if (name == "polygonal-star") {
        return polygonal_star_set(params.k, bound);
    }
    if (name == "sk") {
        return residue_set_sk(params.k, bound);
    }
    if (name == "pentagonal-hat") {
        return pentagonal_hat_set(bound);
    }
    if (name == "r") {
        return general_r_set(params.alpha, params.beta, bound);
    }
    if (name == "t") {
        return general_t_set(params.alpha, params.beta, bound);
    }
    if (name == "second-hexagonal") {
        return second_hexagonal_set(bound);
    }
    if (name == "u") {
        return u_set(bound);
    }
    if (name == "naturals") {
        return naturals_set(bound);
    }
    if (name == "naturals-from-two") {
        return naturals_from_two_set(bound);
    }
    if (name == "rr-residues") {
        return rogers_ramanujan_set(bound);
    }
    if (name == "primes") {
        return prime_set(bound);
    }
    throw InvalidArgument("unknown part set '" + name + "'");
}

} // namespace compoq
