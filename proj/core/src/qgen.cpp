#include "compoq/qgen.hpp"

#include "compoq/errors.hpp"

namespace compoq {

void ThetaSpec::validate() const
{
    if (alpha < 1 || beta < 1) {
        throw InvalidArgument("theta exponents must be positive");
    }
    if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
        throw InvalidArgument("theta signs must be +1 or -1");
    }
}

TruncatedSeries theta_sum(const ThetaSpec& spec, std::size_t order)
{
    spec.validate();
    const auto limit = static_cast<std::int64_t>(order);
    TruncatedSeries s(order);
    auto add_term = [&](std::int64_t j) {
        const std::int64_t ta = j * (j + 1) / 2;
        const std::int64_t tb = j * (j - 1) / 2;
        const std::int64_t e = spec.alpha * ta + spec.beta * tb;
        if (e > limit) {
            return;
        }
        int sign = 1;
        if (spec.sign_a < 0 && ta % 2 != 0) {
            sign = -sign;
        }
        if (spec.sign_b < 0 && tb % 2 != 0) {
            sign = -sign;
        }
        s[static_cast<std::size_t>(e)] += sign;
    };
    add_term(0);
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t up = spec.alpha * (m * (m + 1) / 2) + spec.beta * (m * (m - 1) / 2);
        const std::int64_t down = spec.alpha * (m * (m - 1) / 2) + spec.beta * (m * (m + 1) / 2);
        if (up > limit && down > limit) {
            break;
        }
        add_term(m);
        add_term(-m);
    }
    return s;
}

ProductSpec theta_product_spec(const ThetaSpec& spec)
{
    spec.validate();
    const std::int64_t step = spec.alpha + spec.beta;
    ProductSpec product;
    if (spec.sign_a == spec.sign_b) {
        product.times(-spec.sign_a, spec.alpha, step)
            .times(-spec.sign_b, spec.beta, step)
            .times(1, step, step);
        return product;
    }
    // ab = -q^step: the n-th factor carries (-1)^n, so split each Pochhammer by parity.
    product.times(-spec.sign_a, spec.alpha, 2 * step)
        .times(spec.sign_a, spec.alpha + step, 2 * step)
        .times(-spec.sign_b, spec.beta, 2 * step)
        .times(spec.sign_b, spec.beta + step, 2 * step)
        .times(-1, step, 2 * step)
        .times(1, 2 * step, 2 * step);
    return product;
}

TruncatedSeries theta_product(const ThetaSpec& spec, std::size_t order)
{
    return product_expand(theta_product_spec(spec), order);
}

ProductSpec named_gf_spec(NamedSeries name, int k)
{
    ProductSpec spec;
    switch (name) {
    case NamedSeries::partition:
        spec.times(1, 1, 1, -1);
        break;
    case NamedSeries::p_sk:
        if (k < 5) {
            throw InvalidArgument("p_sk generating function requires k >= 5, got " + std::to_string(k));
        }
        spec.times(1, 1, k - 2, -1).times(1, k - 3, k - 2, -1).times(1, k - 2, k - 2, -1);
        break;
    case NamedSeries::pod:
        spec.times(1, 1, 4, -1).times(1, 3, 4, -1).times(1, 4, 4, -1);
        break;
    case NamedSeries::pod_classical:
        spec.times(-1, 1, 2, 1).times(1, 2, 2, -1);
        break;
    case NamedSeries::overpartition:
        spec.times(-1, 1, 1, 1).times(1, 1, 1, -1);
        break;
    case NamedSeries::p3:
        spec.times(1, 1, 1, -3);
        break;
    case NamedSeries::r:
        spec.times(-1, 1, 1, 2).times(1, 1, 1, -3);
        break;
    case NamedSeries::s:
        spec.times(-1, 1, 1, 1).times(1, 1, 1, -1).times(1, 4, 4, -2);
        break;
    case NamedSeries::rr:
        spec.times(1, 1, 5, -1).times(1, 4, 5, -1);
        break;
    }
    return spec;
}

TruncatedSeries named_gf(NamedSeries name, std::size_t order, int k)
{
    return product_expand(named_gf_spec(name, k), order);
}

std::vector<NamedSeries> all_named_series()
{
    return {NamedSeries::partition, NamedSeries::p_sk, NamedSeries::pod,
            NamedSeries::pod_classical, NamedSeries::overpartition, NamedSeries::p3,
            NamedSeries::r, NamedSeries::s, NamedSeries::rr};
}

std::string to_string(NamedSeries name)
{
    switch (name) {
    case NamedSeries::partition:
        return "partition";
    case NamedSeries::p_sk:
        return "p-sk";
    case NamedSeries::pod:
        return "pod";
    case NamedSeries::pod_classical:
        return "pod-classical";
    case NamedSeries::overpartition:
        return "overpartition";
    case NamedSeries::p3:
        return "p3";
    case NamedSeries::r:
        return "r";
    case NamedSeries::s:
        return "s";
    case NamedSeries::rr:
        return "rr";
    }
    return "unknown";
}

NamedSeries parse_named_series(const std::string& name)
{
    for (const NamedSeries candidate : all_named_series()) {
        if (to_string(candidate) == name) {
            return candidate;
        }
    }
    throw InvalidArgument("unknown generating function '" + name + "'");
}

namespace {

// Adds weight(j) q^{exponent(j)} over all j in Z with exponent <= order.
// exponent must be increasing in |j| on both sides for |j| >= 1.
template <typename Exponent, typename Weight>
TruncatedSeries bilateral(std::size_t order, Exponent exponent, Weight weight)
{
    const auto limit = static_cast<std::int64_t>(order);
    TruncatedSeries s(order);
    auto add = [&](std::int64_t j) {
        const std::int64_t e = exponent(j);
        if (e >= 0 && e <= limit) {
            s[static_cast<std::size_t>(e)] += weight(j);
        }
    };
    add(0);
    for (std::int64_t m = 1; exponent(m) <= limit || exponent(-m) <= limit; ++m) {
        add(m);
        add(-m);
    }
    return s;
}

} // namespace

TruncatedSeries jacobi_cube(std::size_t order)
{
    TruncatedSeries s(order);
    for (std::int64_t n = 0; n * (n + 1) / 2 <= static_cast<std::int64_t>(order); ++n) {
        const long term = (n % 2 == 0 ? 1 : -1) * (2 * n + 1);
        s[static_cast<std::size_t>(n * (n + 1) / 2)] += term;
    }
    return s;
}

TruncatedSeries r_sum_side(std::size_t order)
{
    return bilateral(
        order, [](std::int64_t j) { return j * (3 * j - 1) / 2; },
        [](std::int64_t j) { return static_cast<long>(1 - 6 * j); });
}

TruncatedSeries s_sum_side(std::size_t order)
{
    return bilateral(
        order, [](std::int64_t j) { return j * (3 * j + 2); },
        [](std::int64_t j) { return static_cast<long>(3 * j + 1); });
}

TruncatedSeries rr_theta_factor(std::size_t order)
{
    return bilateral(
        order, [](std::int64_t j) { return j * (5 * j - 1) / 2; },
        [](std::int64_t j) { return j % 2 == 0 ? 1L : -1L; });
}

int rr_piecewise_coefficient(std::int64_t i)
{
    for (std::int64_t j = 0; j == 0 || 10 * j * j - 9 * j + 2 <= i; ++j) {
        if (i == 10 * j * j + j || i == 10 * j * j - j) {
            return 1;
        }
        if (i == 10 * j * j + 9 * j + 2 || i == 10 * j * j - 9 * j + 2) {
            return -1;
        }
    }
    return 0;
}

} // namespace compoq
