#include "compoq/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "compoq/compositions.hpp"
#include "compoq/errors.hpp"

namespace compoq {

namespace {

void require_bound(std::int64_t bound)
{
    if (bound < 1) {
        throw InvalidArgument("Dirichlet bound must be >= 1, got " + std::to_string(bound));
    }
}

PartSet materialized(const PartSet& parts, std::int64_t bound)
{
    return parts.bound() == bound ? parts : parts.with_bound(bound);
}

void require_no_ones(const PartSet& parts)
{
    if (parts.contains(1)) {
        throw Divergent("diverges: unbounded 1-multiplicity (part set '" + parts.name() + "' contains 1)");
    }
}

double power_sum(std::span<const std::int64_t> members, double s)
{
    double total = 0.0;
    for (const auto n : members) {
        total += std::pow(static_cast<double>(n), -s);
    }
    return total;
}

// Upper bound on sum_{n in T*, n > bound} n^{-s}.
double set_tail_bound(const PartSet& parts, std::int64_t bound, double s)
{
    if (const auto* finite = std::get_if<ExplicitFamily>(&parts.rule())) {
        double total = 0.0;
        for (const auto v : finite->values) {
            if (v > bound) {
                total += std::pow(static_cast<double>(v), -s);
            }
        }
        return total;
    }
    // sum_{n > B} n^{-s} <= integral_B^inf x^{-s} dx
    return std::pow(static_cast<double>(bound), 1.0 - s) / (s - 1.0);
}

// Floating-point allowance for summing `terms` values of magnitude up to `scale`.
double rounding_allowance(double scale, std::int64_t terms)
{
    return 4.0 * std::numeric_limits<double>::epsilon() * scale * static_cast<double>(terms + 16);
}

template <typename Generating>
void minimize_rankin(double s, std::int64_t bound, Generating generating, ZetaEvaluation& out)
{
    // difference <= bound^{s' - s} * F(s') for any 0 < s' <= s with F(s') finite.
    constexpr int kSteps = 256;
    out.tail_bound = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= kSteps; ++i) {
        const double sp = s * static_cast<double>(i) / kSteps;
        const double value = generating(sp);
        if (!std::isfinite(value) || value <= 0.0) {
            continue;
        }
        const double candidate = std::pow(static_cast<double>(bound), sp - s) * value;
        if (candidate < out.tail_bound) {
            out.tail_bound = candidate;
            out.rankin_exponent = sp;
        }
    }
}

} // namespace

DirichletCoeffs::DirichletCoeffs(std::int64_t bound)
{
    require_bound(bound);
    coeffs_.resize(static_cast<std::size_t>(bound) + 1);
}

DirichletCoeffs DirichletCoeffs::unit(std::int64_t bound)
{
    DirichletCoeffs out(bound);
    out[1] = 1;
    return out;
}

DirichletCoeffs DirichletCoeffs::ones(std::int64_t bound)
{
    DirichletCoeffs out(bound);
    for (std::int64_t n = 1; n <= bound; ++n) {
        out[n] = 1;
    }
    return out;
}

DirichletCoeffs dirichlet_mul(const DirichletCoeffs& e, const DirichletCoeffs& f)
{
    const std::int64_t bound = std::min(e.bound(), f.bound());
    DirichletCoeffs out(bound);
    for (std::int64_t a = 1; a <= bound; ++a) {
        if (e[a] == 0) {
            continue;
        }
        for (std::int64_t b = 1; a * b <= bound; ++b) {
            if (f[b] != 0) {
                mpz_addmul(out[a * b].get_mpz_t(), e[a].get_mpz_t(), f[b].get_mpz_t());
            }
        }
    }
    return out;
}

DirichletCoeffs comp_zeta_coeffs(const PartSet& parts, const Integer& z, std::int64_t bound)
{
    require_bound(bound);
    require_no_ones(parts);
    const PartSet allowed = materialized(parts, bound);
    DirichletCoeffs d(bound);
    d[1] = 1;
    // Ascending m: every contribution to d(m) comes from a smaller index.
    for (std::int64_t m = 1; m <= bound; ++m) {
        if (d[m] == 0) {
            continue;
        }
        const Integer step = z * d[m];
        for (const auto k : allowed.members()) {
            if (k > bound / m) {
                break;
            }
            d[m * k] += step;
        }
    }
    return d;
}

int mobius(std::int64_t n)
{
    if (n < 1) {
        throw InvalidArgument("mobius requires n >= 1");
    }
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        n /= p;
        if (n % p == 0) {
            return 0;
        }
        result = -result;
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

Integer mobius_via_compositions(std::int64_t n)
{
    Integer total = 0;
    for_each_ordered_factorization(n, [&total](std::span<const std::int64_t> c) {
        total += (c.size() % 2 == 0) ? 1 : -1;
    });
    return total;
}

ZetaEvaluation comp_zeta_value(const PartSet& parts, const Integer& z, double s, std::int64_t bound)
{
    require_bound(bound);
    require_no_ones(parts);
    if (!(s > 1.0)) {
        throw Divergent("composition zeta function requires s > 1, got " + std::to_string(s));
    }
    const PartSet allowed = materialized(parts, bound);
    const double zd = z.get_d();
    const double zabs = std::fabs(zd);

    ZetaEvaluation out;
    const double sigma = power_sum(allowed.members(), s);
    out.set_tail = set_tail_bound(allowed, bound, s);
    if (zabs * (sigma + out.set_tail) >= 1.0) {
        throw Divergent("diverges: |z| * sum_{n in " + allowed.name() + "} n^-s >= 1 at s = " + std::to_string(s) +
                        " (z = " + z.get_str() + ")");
    }
    out.closed_form = 1.0 / (1.0 - zd * sigma);

    const DirichletCoeffs d = comp_zeta_coeffs(allowed, z, bound);
    double magnitude = 0.0;
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (d[n] == 0) {
            continue;
        }
        const double term = d[n].get_d() * std::pow(static_cast<double>(n), -s);
        out.partial_sum += term;
        magnitude += std::fabs(term);
    }
    out.difference = std::fabs(out.closed_form - out.partial_sum);

    // The difference is the sum over compositions with parts <= bound and norm > bound.
    minimize_rankin(s, bound,
                    [&](double sp) {
                        const double mass = zabs * power_sum(allowed.members(), sp);
                        return mass < 1.0 ? 1.0 / (1.0 - mass) : std::numeric_limits<double>::infinity();
                    },
                    out);
    out.tail_bound += rounding_allowance(std::max(magnitude, std::fabs(out.closed_form)), bound);
    return out;
}

std::vector<Integer> partition_norm_counts(const PartSet& parts, std::int64_t bound)
{
    require_bound(bound);
    require_no_ones(parts);
    const PartSet allowed = materialized(parts, bound);
    std::vector<Integer> f(static_cast<std::size_t>(bound) + 1);
    f[1] = 1;
    for (const auto k : allowed.members()) {
        for (std::int64_t m = 1; m <= bound / k; ++m) {
            if (f[static_cast<std::size_t>(m)] != 0) {
                f[static_cast<std::size_t>(m * k)] += f[static_cast<std::size_t>(m)];
            }
        }
    }
    return f;
}

ZetaEvaluation partition_zeta_value(const PartSet& parts, double s, std::int64_t bound)
{
    require_bound(bound);
    require_no_ones(parts);
    if (!(s > 1.0)) {
        throw Divergent("partition zeta function requires s > 1, got " + std::to_string(s));
    }
    const PartSet allowed = materialized(parts, bound);
    auto log_euler = [&allowed](double sp) {
        double total = 0.0;
        for (const auto n : allowed.members()) {
            total -= std::log1p(-std::pow(static_cast<double>(n), -sp));
        }
        return total;
    };

    ZetaEvaluation out;
    out.set_tail = set_tail_bound(allowed, bound, s);
    out.closed_form = std::exp(log_euler(s));

    const auto counts = partition_norm_counts(allowed, bound);
    double magnitude = 0.0;
    for (std::int64_t n = 1; n <= bound; ++n) {
        const auto& c = counts[static_cast<std::size_t>(n)];
        if (c != 0) {
            const double term = c.get_d() * std::pow(static_cast<double>(n), -s);
            out.partial_sum += term;
            magnitude += term;
        }
    }
    out.difference = std::fabs(out.closed_form - out.partial_sum);
    minimize_rankin(s, bound, [&](double sp) { return std::exp(log_euler(sp)); }, out);
    out.tail_bound += rounding_allowance(std::max(magnitude, out.closed_form), bound);
    return out;
}

} // namespace compoq
